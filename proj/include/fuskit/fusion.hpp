#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "fuskit/caps.hpp"
#include "fuskit/groupops.hpp"

namespace fuskit {

class FusionSystem;
using FusionSystemPtr = std::shared_ptr<const FusionSystem>;

/// A morphism stored as the isomorphism onto its image: subgroup indices plus
/// the image table aligned with the domain object's element list. Every
/// hom-set morphism is such an atom followed by an inclusion.
struct MorphAtom {
  int dom;
  int img;
  std::vector<Perm> table;
};

/// Morphism of a fusion system, P -> Q with image phi(P) <= Q.
class FusionMorphism {
public:
  FusionMorphism(FusionSystemPtr system, int dom, int cod, int img, std::vector<Perm> table)
      : system_(std::move(system)), dom_(dom), cod_(cod), img_(img), table_(std::move(table)) {}

  const FusionSystemPtr& system() const { return system_; }
  int dom_index() const { return dom_; }
  int cod_index() const { return cod_; }
  int img_index() const { return img_; }
  const std::vector<Perm>& table() const { return table_; }

  const Subgroup& domain() const;
  const Subgroup& codomain() const;
  const Subgroup& image() const;
  Perm apply(const Perm& x) const;
  GroupHom as_hom() const;
  bool is_identity_map() const;

  bool operator==(const FusionMorphism& o) const { return dom_ == o.dom_ && table_ == o.table_; }

private:
  FusionSystemPtr system_;
  int dom_, cod_, img_;
  std::vector<Perm> table_;
};

struct FullnessStatus {
  bool fully_centralized;
  bool fully_normalized;
};

struct ExtensionProblem {
  FusionMorphism phi;                     // morphism P -> S with fully centralized image
  Subgroup n_phi;                         // {g in N_S(P) : phi c_g phi^-1 in Aut_S(phi P)}
  std::optional<FusionMorphism> extension;
};

struct SaturationReport {
  std::vector<std::pair<int, std::string>> axiom_I_failures;  // (object, reason)
  std::vector<ExtensionProblem> axiom_II_failures;
  bool saturated = false;
};

/// Concrete realization of Out_F(P) via the coset action of Aut_F(P) on the
/// cosets of Inn(P); coset_of[i] is the coset of the i-th element of aut_f(P).
struct OutFRealization {
  PermGroupPtr group;
  std::vector<int> coset_of;
};

/// Fusion system over a p-group S: all subgroups of S as objects, morphisms
/// provided either by conjugation in an ambient group or by an explicit
/// closure-generated atom table. Immutable after construction apart from
/// internal memo tables.
class FusionSystem : public std::enable_shared_from_this<FusionSystem> {
public:
  int prime() const { return p_; }
  const Subgroup& sylow() const { return s_; }
  const Caps& caps() const { return caps_; }

  /// Conjugation-realized systems remember the realizing group.
  bool realized() const { return conj_source_.has_value(); }
  const Subgroup& realizing_group() const;

  const std::vector<Subgroup>& objects() const { return objects_; }
  const Subgroup& object(int i) const { return objects_[static_cast<size_t>(i)]; }
  /// Index of a subgroup of S; throws if it is not one.
  int object_index(const Subgroup& p) const;
  bool object_leq(int a, int b) const { return incl_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  int join_index(int a, int b) const;

  /// All morphisms with the given domain, as isomorphisms onto their images,
  /// sorted by table.
  const std::vector<MorphAtom>& atoms(int dom) const;
  /// The S-conjugation subsystem's atoms (inner morphisms).
  const std::vector<MorphAtom>& s_atoms(int dom) const;
  bool has_atom(int dom, const std::vector<Perm>& table) const;
  bool has_s_atom(int dom, const std::vector<Perm>& table) const;

  std::vector<FusionMorphism> hom_set(const Subgroup& p, const Subgroup& q) const;
  std::vector<FusionMorphism> hom_set(int dom, int cod) const;
  std::vector<FusionMorphism> aut_f(int p) const;
  std::vector<FusionMorphism> aut_f(const Subgroup& p) const;
  OutFRealization out_f(int p) const;
  OutFRealization out_f(const Subgroup& p) const;

  const std::vector<std::vector<int>>& f_conjugacy_classes() const;
  const std::vector<int>& class_of(int object) const;

  const Subgroup& centralizer_in_s(int object) const;
  const Subgroup& normalizer_in_s(int object) const;
  FullnessStatus fullness_status(int object) const;
  FullnessStatus fullness_status(const Subgroup& p) const;

  SaturationReport check_saturation() const;

  /// |Aut_S(P)| = |N_S(P) : C_S(P)|.
  uint64_t aut_s_order(int object) const;

private:
  friend FusionSystemPtr fusion_from_group(const PermGroupPtr&, int, const Caps&);
  friend FusionSystemPtr fusion_from_group_at(const PermGroupPtr&, const Subgroup&, int,
                                              const Caps&);
  friend FusionSystemPtr inner_fusion_system(const Subgroup&, const Caps&);
  friend FusionSystemPtr generate_fusion_system(const Subgroup&, const std::vector<GroupHom>&,
                                                const Caps&);
  friend FusionSystemPtr fusion_from_atoms(const Subgroup&, int,
                                           std::map<int, std::vector<MorphAtom>>, const Caps&);

  FusionSystem(int p, Subgroup s, std::optional<Subgroup> conj_source,
               std::optional<std::map<int, std::vector<MorphAtom>>> fixed_atoms, Caps caps);

  std::vector<MorphAtom> conjugation_atoms(const Subgroup& source, int dom) const;

  int p_;
  Caps caps_;
  Subgroup s_;
  std::optional<Subgroup> conj_source_;
  std::optional<std::map<int, std::vector<MorphAtom>>> fixed_atoms_;
  std::vector<Subgroup> objects_;
  std::map<std::vector<Perm>, int> object_index_;
  std::vector<std::vector<char>> incl_;

  mutable std::mutex mu_;
  mutable std::map<int, std::vector<MorphAtom>> atom_cache_;
  mutable std::map<int, std::vector<MorphAtom>> s_atom_cache_;
  mutable std::map<int, Subgroup> cs_cache_;
  mutable std::map<int, Subgroup> ns_cache_;
  mutable std::optional<std::vector<std::vector<int>>> classes_;
  mutable std::optional<std::vector<int>> class_id_;
};

/// F_G(S) for S = sylow_subgroup(G, p): morphisms are conjugations by elements
/// of G landing inside S.
FusionSystemPtr fusion_from_group(const PermGroupPtr& g, int p, const Caps& caps = {});

/// Same, anchored at a caller-chosen Sylow p-subgroup of G.
FusionSystemPtr fusion_from_group_at(const PermGroupPtr& g, const Subgroup& sylow, int p,
                                     const Caps& caps = {});

/// F_S(S): conjugation by S itself.
FusionSystemPtr inner_fusion_system(const Subgroup& s, const Caps& caps = {});

/// Smallest fusion system over S containing the inner morphisms and the given
/// injective homs, closed under composition, restriction, and inversion.
FusionSystemPtr generate_fusion_system(const Subgroup& s, const std::vector<GroupHom>& gens,
                                       const Caps& caps = {});

/// System with an explicit atom table (normalizer and quotient constructions).
FusionSystemPtr fusion_from_atoms(const Subgroup& s, int p,
                                  std::map<int, std::vector<MorphAtom>> atoms,
                                  const Caps& caps = {});

}  // namespace fuskit
