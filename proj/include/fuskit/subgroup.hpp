#pragma once

#include <memory>
#include <vector>

#include "fuskit/caps.hpp"
#include "fuskit/permgroup.hpp"

namespace fuskit {

/// Subgroup of an ambient group, identified extensionally by its element set
/// (materialized, sorted). Copies are cheap; the payload is shared.
class Subgroup {
public:
  /// Closure of the generators inside the ambient group.
  Subgroup(PermGroupPtr ambient, std::vector<Perm> generators,
           size_t element_cap = Caps{}.element_cap);

  /// From a full element set (closure is verified); generators are derived greedily.
  static Subgroup from_elements(PermGroupPtr ambient, std::vector<Perm> elements);

  static Subgroup whole(PermGroupPtr group, size_t element_cap = Caps{}.element_cap);
  static Subgroup trivial(PermGroupPtr ambient);

  const PermGroupPtr& ambient() const { return ambient_; }
  int degree() const { return ambient_->degree(); }
  const std::vector<Perm>& generators() const { return d_->gens; }
  const std::vector<Perm>& elements() const { return d_->elements; }
  size_t order() const { return d_->elements.size(); }
  bool is_trivial() const { return order() == 1; }

  bool contains(const Perm& g) const;
  bool contains_subgroup(const Subgroup& other) const;
  int element_index(const Perm& g) const;  // -1 if absent

  /// The subgroup as a standalone group on the same points.
  PermGroupPtr as_group() const;

  bool operator==(const Subgroup& o) const { return d_->elements == o.d_->elements; }
  /// Canonical order: by order, then element list.
  bool operator<(const Subgroup& o) const;

private:
  struct Data {
    std::vector<Perm> gens;
    std::vector<Perm> elements;  // sorted
  };
  Subgroup(PermGroupPtr ambient, std::shared_ptr<const Data> d)
      : ambient_(std::move(ambient)), d_(std::move(d)) {}

  PermGroupPtr ambient_;
  std::shared_ptr<const Data> d_;
};

/// Closure of a generating set as a sorted element list (no ambient needed).
std::vector<Perm> closure_elements(int degree, const std::vector<Perm>& gens, size_t cap);

/// Greedy generating subset of a closed element set (canonical, small).
std::vector<Perm> reduce_generators(int degree, const std::vector<Perm>& elements);

Subgroup join(const Subgroup& a, const Subgroup& b);

}  // namespace fuskit
