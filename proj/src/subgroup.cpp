#include "fuskit/subgroup.hpp"

#include <algorithm>
#include <unordered_set>

#include "fuskit/errors.hpp"

namespace fuskit {

std::vector<Perm> closure_elements(int degree, const std::vector<Perm>& gens, size_t cap) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> frontier{Perm(degree)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier) {
      for (const Perm& g : gens) {
        Perm y = x * g;
        if (seen.insert(y).second) {
          if (seen.size() > cap)
            throw cap_exceeded("element_cap", cap, "subgroup closure too large");
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Perm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> reduce_generators(int degree, const std::vector<Perm>& elements) {
  std::vector<Perm> gens;
  std::vector<Perm> current{Perm(degree)};
  for (const Perm& x : elements) {
    if (std::binary_search(current.begin(), current.end(), x)) continue;
    gens.push_back(x);
    current = closure_elements(degree, gens, elements.size());
    if (current.size() == elements.size()) break;
  }
  return gens;
}

Subgroup::Subgroup(PermGroupPtr ambient, std::vector<Perm> generators, size_t element_cap)
    : ambient_(std::move(ambient)) {
  for (const Perm& g : generators)
    if (!ambient_->contains(g))
      throw precondition_error("generator " + g.cycle_string() + " not in ambient group");
  auto data = std::make_shared<Data>();
  data->elements = closure_elements(ambient_->degree(), generators, element_cap);
  data->gens = reduce_generators(ambient_->degree(), data->elements);
  d_ = std::move(data);
}

Subgroup Subgroup::from_elements(PermGroupPtr ambient, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  // The identity sorts first among permutations of a fixed degree.
  if (elements.empty() || !elements.front().is_identity())
    throw precondition_error("element set must contain the identity");
  auto data = std::make_shared<Data>();
  data->gens = reduce_generators(ambient->degree(), elements);
  // Closure check: the greedy generators must reproduce exactly this set.
  std::vector<Perm> closed;
  try {
    closed = closure_elements(ambient->degree(), data->gens, elements.size());
  } catch (const cap_exceeded&) {
    throw precondition_error("element set is not closed under products");
  }
  if (closed != elements)
    throw precondition_error("element set is not closed under products");
  data->elements = std::move(elements);
  return Subgroup(std::move(ambient), std::move(data));
}

Subgroup Subgroup::whole(PermGroupPtr group, size_t element_cap) {
  auto data = std::make_shared<Data>();
  data->gens = group->generators();
  data->elements = group->elements(element_cap);
  return Subgroup(std::move(group), std::move(data));
}

Subgroup Subgroup::trivial(PermGroupPtr ambient) {
  auto data = std::make_shared<Data>();
  data->elements = {Perm(ambient->degree())};
  return Subgroup(std::move(ambient), std::move(data));
}

bool Subgroup::contains(const Perm& g) const {
  return std::binary_search(d_->elements.begin(), d_->elements.end(), g);
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
  if (other.order() > order()) return false;
  return std::includes(d_->elements.begin(), d_->elements.end(), other.d_->elements.begin(),
                       other.d_->elements.end());
}

int Subgroup::element_index(const Perm& g) const {
  auto it = std::lower_bound(d_->elements.begin(), d_->elements.end(), g);
  if (it == d_->elements.end() || !(*it == g)) return -1;
  return static_cast<int>(it - d_->elements.begin());
}

PermGroupPtr Subgroup::as_group() const {
  return std::make_shared<const PermGroup>(degree(), d_->gens);
}

bool Subgroup::operator<(const Subgroup& o) const {
  if (order() != o.order()) return order() < o.order();
  return d_->elements < o.d_->elements;
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Perm> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Subgroup(a.ambient(), std::move(gens));
}

}  // namespace fuskit
