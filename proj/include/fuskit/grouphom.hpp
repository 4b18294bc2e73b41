#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fuskit/subgroup.hpp"

namespace fuskit {

/// Injective homomorphism between subgroups, stored extensionally: the image
/// table is aligned with domain().elements(). Built from generator images by
/// closure with consistency (relation) checking.
class GroupHom {
public:
  static std::optional<GroupHom> try_build(
      const Subgroup& domain, const Subgroup& codomain,
      const std::vector<std::pair<Perm, Perm>>& generator_images);

  static GroupHom build(const Subgroup& domain, const Subgroup& codomain,
                        const std::vector<std::pair<Perm, Perm>>& generator_images);

  /// Table must be aligned with domain.elements(); validated.
  static GroupHom from_table(Subgroup domain, Subgroup codomain, std::vector<Perm> table);

  /// General homomorphism table (quotient projections); injectivity not required.
  static GroupHom from_table_hom(Subgroup domain, Subgroup codomain, std::vector<Perm> table);

  static GroupHom identity(const Subgroup& s);
  static GroupHom inclusion(const Subgroup& sub, const Subgroup& super);

  const Subgroup& domain() const { return domain_; }
  const Subgroup& codomain() const { return codomain_; }
  const std::vector<Perm>& table() const { return table_; }

  Perm apply(const Perm& x) const;
  Subgroup image_subgroup() const;
  bool is_injective() const;
  bool is_bijective() const;
  bool is_automorphism() const { return domain_ == codomain_ && is_bijective(); }

  GroupHom restrict_to(const Subgroup& sub) const;
  /// Inverse of an isomorphism onto its image (codomain retargeted to the image).
  GroupHom inverse_iso() const;
  std::vector<Perm> fixed_points() const;
  int order() const;  // of an automorphism

  bool operator==(const GroupHom& o) const {
    return domain_ == o.domain_ && table_ == o.table_ && codomain_ == o.codomain_;
  }

private:
  GroupHom(Subgroup dom, Subgroup cod, std::vector<Perm> table)
      : domain_(std::move(dom)), codomain_(std::move(cod)), table_(std::move(table)) {}

  Subgroup domain_;
  Subgroup codomain_;
  std::vector<Perm> table_;
};

/// g after f; requires image(f) <= domain(g).
GroupHom compose(const GroupHom& g, const GroupHom& f);

/// Conjugation c_g restricted to P, landing in the given codomain.
GroupHom conjugation_hom(const Subgroup& p, const Perm& g, const Subgroup& codomain);

}  // namespace fuskit
