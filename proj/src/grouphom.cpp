#include "fuskit/grouphom.hpp"

#include <algorithm>
#include <deque>

#include "fuskit/errors.hpp"

namespace fuskit {

std::optional<GroupHom> GroupHom::try_build(
    const Subgroup& domain, const Subgroup& codomain,
    const std::vector<std::pair<Perm, Perm>>& generator_images) {
  const std::vector<Perm>& dom = domain.elements();
  const int n = static_cast<int>(dom.size());
  std::vector<std::optional<Perm>> table(dom.size());

  // Seeds: identity and the stated generator images.
  std::deque<int> queue;
  int id_idx = domain.element_index(Perm(domain.degree()));
  table[static_cast<size_t>(id_idx)] = Perm(codomain.degree());
  queue.push_back(id_idx);

  std::vector<std::pair<int, Perm>> gens;  // (domain element index, image)
  for (const auto& [g, h] : generator_images) {
    int gi = domain.element_index(g);
    if (gi < 0) throw precondition_error("generator not in hom domain");
    if (!codomain.contains(h)) return std::nullopt;
    gens.emplace_back(gi, h);
  }
  // The generators must generate the whole domain for the closure to cover it.
  {
    std::vector<Perm> gs;
    for (const auto& [gi, h] : gens) gs.push_back(dom[static_cast<size_t>(gi)]);
    if (closure_elements(domain.degree(), gs, dom.size() + 1).size() != dom.size())
      throw precondition_error("generator images do not cover the domain");
  }

  while (!queue.empty()) {
    int xi = queue.front();
    queue.pop_front();
    const Perm& fx = *table[static_cast<size_t>(xi)];
    for (const auto& [gi, h] : gens) {
      Perm y = dom[static_cast<size_t>(xi)] * dom[static_cast<size_t>(gi)];
      int yi = domain.element_index(y);
      Perm fy = fx * h;
      auto& slot = table[static_cast<size_t>(yi)];
      if (!slot) {
        slot = std::move(fy);
        queue.push_back(yi);
      } else if (!(*slot == fy)) {
        return std::nullopt;  // relation not preserved
      }
    }
  }

  std::vector<Perm> out;
  out.reserve(dom.size());
  for (auto& slot : table) {
    if (!slot) throw precondition_error("generator images do not cover the domain");
    out.push_back(std::move(*slot));
  }
  // Injectivity.
  std::vector<Perm> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  (void)n;
  return GroupHom(domain, codomain, std::move(out));
}

GroupHom GroupHom::build(const Subgroup& domain, const Subgroup& codomain,
                         const std::vector<std::pair<Perm, Perm>>& generator_images) {
  auto h = try_build(domain, codomain, generator_images);
  if (!h) throw precondition_error("generator images do not define an injective homomorphism");
  return *h;
}

GroupHom GroupHom::from_table(Subgroup domain, Subgroup codomain, std::vector<Perm> table) {
  GroupHom h = from_table_hom(std::move(domain), std::move(codomain), std::move(table));
  if (!h.is_injective()) throw precondition_error("hom table not injective");
  return h;
}

GroupHom GroupHom::from_table_hom(Subgroup domain, Subgroup codomain, std::vector<Perm> table) {
  if (table.size() != domain.elements().size())
    throw precondition_error("hom table size mismatch");
  for (const Perm& y : table)
    if (!codomain.contains(y)) throw precondition_error("hom table image outside codomain");
  return GroupHom(std::move(domain), std::move(codomain), std::move(table));
}

GroupHom GroupHom::identity(const Subgroup& s) {
  return GroupHom(s, s, s.elements());
}

GroupHom GroupHom::inclusion(const Subgroup& sub, const Subgroup& super) {
  if (!super.contains_subgroup(sub))
    throw precondition_error("inclusion requires sub <= super");
  return GroupHom(sub, super, sub.elements());
}

Perm GroupHom::apply(const Perm& x) const {
  int i = domain_.element_index(x);
  if (i < 0) throw precondition_error("element not in hom domain");
  return table_[static_cast<size_t>(i)];
}

Subgroup GroupHom::image_subgroup() const {
  return Subgroup::from_elements(codomain_.ambient(), table_);
}

bool GroupHom::is_injective() const {
  std::vector<Perm> sorted = table_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool GroupHom::is_bijective() const {
  return table_.size() == codomain_.order() && is_injective();
}

GroupHom GroupHom::restrict_to(const Subgroup& sub) const {
  if (!domain_.contains_subgroup(sub))
    throw precondition_error("restriction target is not inside the domain");
  std::vector<Perm> t;
  t.reserve(sub.order());
  for (const Perm& x : sub.elements()) t.push_back(apply(x));
  return GroupHom(sub, codomain_, std::move(t));
}

GroupHom GroupHom::inverse_iso() const {
  Subgroup img = image_subgroup();
  std::vector<Perm> t(img.order(), Perm(domain_.degree()));
  for (size_t i = 0; i < table_.size(); ++i) {
    int j = img.element_index(table_[i]);
    t[static_cast<size_t>(j)] = domain_.elements()[i];
  }
  return GroupHom(img, domain_, std::move(t));
}

std::vector<Perm> GroupHom::fixed_points() const {
  std::vector<Perm> out;
  for (size_t i = 0; i < table_.size(); ++i)
    if (table_[i] == domain_.elements()[i]) out.push_back(table_[i]);
  return out;
}

int GroupHom::order() const {
  if (!is_automorphism()) throw precondition_error("order is defined for automorphisms");
  GroupHom acc = identity(domain_);
  int n = 0;
  do {
    acc = compose(*this, acc);
    ++n;
  } while (!(acc.table() == domain_.elements()));
  return n;
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  std::vector<Perm> t;
  t.reserve(f.table().size());
  for (const Perm& y : f.table()) t.push_back(g.apply(y));
  return GroupHom::from_table(f.domain(), g.codomain(), std::move(t));
}

GroupHom conjugation_hom(const Subgroup& p, const Perm& g, const Subgroup& codomain) {
  std::vector<Perm> t;
  t.reserve(p.order());
  Perm gi = g.inverse();
  for (const Perm& x : p.elements()) t.push_back(g * x * gi);
  return GroupHom::from_table(p, codomain, std::move(t));
}

}  // namespace fuskit
