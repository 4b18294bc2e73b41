#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fuskit {

/// Permutation of {1..degree}, stored as a 0-based image vector.
/// Products compose like functions: (a * b)(x) = a(b(x)), so in a product
/// written left to right the rightmost factor acts first.
class Perm {
public:
  explicit Perm(int degree);
  static Perm from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int point) const { return images_[static_cast<size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  int order() const;

  /// Canonical disjoint-cycle form, 1-based, e.g. "(1,2,3)(4,5)"; identity is "()".
  std::string cycle_string() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  auto operator<=>(const Perm&) const = default;

private:
  Perm() = default;
  std::vector<int> images_;
};

/// Parses a product of cycles over 1..degree, e.g. "(1,2)(1,3)".
/// Cycles need not be disjoint; the leftmost cycle is the outermost factor,
/// so "(1,2)(1,3)" equals the 3-cycle (1,3,2).
Perm parse_cycles(const std::string& text, int degree);

Perm conjugated(const Perm& g, const Perm& x);  // g x g^{-1}
Perm perm_pow(const Perm& x, long long n);

struct PermHash {
  size_t operator()(const Perm& p) const;
};

}  // namespace fuskit
