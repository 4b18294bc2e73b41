#include "fuskit/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "fuskit/errors.hpp"

namespace fuskit {

Perm::Perm(int degree) {
  if (degree < 1) throw precondition_error("permutation degree must be >= 1");
  images_.resize(static_cast<size_t>(degree));
  std::iota(images_.begin(), images_.end(), 0);
}

Perm Perm::from_images(std::vector<int> images) {
  if (images.empty()) throw precondition_error("permutation degree must be >= 1");
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || static_cast<size_t>(v) >= images.size() || seen[static_cast<size_t>(v)])
      throw precondition_error("image vector is not a bijection");
    seen[static_cast<size_t>(v)] = true;
  }
  Perm p;
  p.images_ = std::move(images);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<size_t>(i)] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[static_cast<size_t>(images_[static_cast<size_t>(i)])] = i;
  return from_images(std::move(inv));
}

int Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  long long ord = 1;
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<size_t>(j)]; j = images_[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      ++len;
    }
    ord = std::lcm(ord, static_cast<long long>(len));
  }
  return static_cast<int>(ord);
}

std::string Perm::cycle_string() const {
  std::vector<bool> seen(images_.size(), false);
  std::string out;
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<size_t>(i)] || images_[static_cast<size_t>(i)] == i) continue;
    out += '(';
    bool first = true;
    for (int j = i; !seen[static_cast<size_t>(j)]; j = images_[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw precondition_error("permutation degree mismatch");
  std::vector<int> im(a.images_.size());
  for (size_t i = 0; i < im.size(); ++i) im[i] = a.images_[static_cast<size_t>(b.images_[i])];
  return Perm::from_images(std::move(im));
}

Perm parse_cycles(const std::string& text, int degree) {
  Perm acc(degree);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw parse_error("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> pts;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("expected point in cycle notation: " + text);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree)
        throw parse_error("point " + std::to_string(v) + " out of range 1.." +
                          std::to_string(degree));
      pts.push_back(v - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw parse_error("unterminated cycle: " + text);
    ++i;  // ')'
    for (size_t a = 0; a < pts.size(); ++a)
      for (size_t b = a + 1; b < pts.size(); ++b)
        if (pts[a] == pts[b]) throw parse_error("repeated point in cycle: " + text);
    if (pts.size() >= 2) {
      std::vector<int> im(static_cast<size_t>(degree));
      std::iota(im.begin(), im.end(), 0);
      for (size_t k = 0; k < pts.size(); ++k)
        im[static_cast<size_t>(pts[k])] = pts[(k + 1) % pts.size()];
      acc = acc * Perm::from_images(std::move(im));
    }
    skip_ws();
  }
  return acc;
}

Perm conjugated(const Perm& g, const Perm& x) { return g * x * g.inverse(); }

Perm perm_pow(const Perm& x, long long n) {
  Perm base = n >= 0 ? x : x.inverse();
  if (n < 0) n = -n;
  Perm acc(x.degree());
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

size_t PermHash::operator()(const Perm& p) const {
  size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace fuskit
