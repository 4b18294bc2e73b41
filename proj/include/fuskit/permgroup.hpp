#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "fuskit/caps.hpp"
#include "fuskit/perm.hpp"

namespace fuskit {

/// Stabilizer chain (deterministic Schreier-Sims). Certifies order and
/// membership for groups up to the desk-scale sizes used here.
class StabChain {
public:
  StabChain(int degree, const std::vector<Perm>& gens);

  uint64_t order() const;
  bool contains(const Perm& g) const;
  std::vector<Perm> elements(size_t cap) const;

private:
  struct Level {
    int base;
    std::vector<Perm> gens;
    std::map<int, Perm> transversal;  // point -> u with u(base) = point
  };

  void add_generator(const Perm& g, size_t level);
  void rebuild_orbit(size_t level);

  int degree_;
  std::vector<Level> levels_;
};

/// Immutable permutation group given by generators; order/membership backed
/// by a lazily built stabilizer chain. Share via PermGroupPtr.
class PermGroup {
public:
  PermGroup(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  uint64_t order() const;
  bool contains(const Perm& g) const;
  const std::vector<Perm>& elements(size_t cap = Caps{}.element_cap) const;  // sorted

private:
  const StabChain& chain() const;

  int degree_;
  std::vector<Perm> generators_;
  mutable std::mutex mu_;
  mutable std::unique_ptr<StabChain> chain_;
  mutable std::unique_ptr<std::vector<Perm>> elements_;
};

using PermGroupPtr = std::shared_ptr<const PermGroup>;

/// degree < 0 infers the degree from the generators (which must then be nonempty).
PermGroupPtr group_from_generators(std::vector<Perm> gens, int degree = -1);

}  // namespace fuskit
