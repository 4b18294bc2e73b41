#pragma once

#include <optional>
#include <string>

#include "fuskit/fusion.hpp"

namespace fuskit {

/// Automorphism of (S, F): an automorphism of S carrying every morphism of F
/// to a morphism of F. Construction verifies fusion-preservation on every
/// morphism of the system.
class FusionAut {
public:
  FusionAut(FusionSystemPtr system, GroupHom phi);

  const FusionSystemPtr& system() const { return system_; }
  const GroupHom& hom() const { return phi_; }
  const std::vector<Perm>& table() const { return phi_.table(); }
  int order() const { return phi_.order(); }
  bool is_identity() const;
  Perm apply(const Perm& x) const { return phi_.apply(x); }

  FusionAut inverse() const;
  friend FusionAut operator*(const FusionAut& a, const FusionAut& b);  // a after b
  bool operator==(const FusionAut& o) const { return phi_.table() == o.phi_.table(); }
  bool operator<(const FusionAut& o) const { return phi_.table() < o.phi_.table(); }

private:
  FusionSystemPtr system_;
  GroupHom phi_;
};

/// Fusion-preservation checked only on Aut_F of the Alperin family (fully
/// normalized centric radical subgroups); equivalent to the exhaustive check
/// for saturated systems.
bool preserves_fusion_on_family(const FusionSystem& f, const GroupHom& phi);
bool preserves_fusion_exhaustive(const FusionSystem& f, const GroupHom& phi);

/// Aut(F): automorphisms of S preserving fusion, filtered via the Alperin family.
std::vector<FusionAut> fusion_preserving_automorphisms(const FusionSystemPtr& f);

/// phi_sharp on Aut_F(P): alpha -> phi o alpha o (phi|_P)^-1, as a permutation
/// of the aut_f(P) list.
struct SharpAction {
  int object;
  std::vector<int> mapping;  // index i of aut_f(P) maps to mapping[i]
};
SharpAction induced_sharp(const FusionAut& phi, int object);
SharpAction induced_sharp(const FusionAut& phi, const Subgroup& p);

std::vector<int> invariant_subgroup_indices(const FusionAut& phi);
std::vector<Subgroup> invariant_subgroups(const FusionAut& phi);

/// phi fixes only 1 in S, and phi_sharp fixes only the identity of Aut_F(P)
/// for every phi-invariant P.
bool is_fpf_fusion_aut(const FusionAut& phi);

struct InducedFusionAut {
  FusionSystemPtr system;
  Subgroup sylow;
  FusionAut aut;
  size_t invariant_sylow_count;
  size_t sylow_count;
};

/// Finds a phi-invariant Sylow p-subgroup by scanning all of them (unique when
/// phi is fixed-point-free on G) and restricts phi to it as a fusion
/// automorphism of F_G(S).
InducedFusionAut induced_fusion_aut_from_group(const PermGroupPtr& g, const GroupHom& phi, int p,
                                               const Caps& caps = {});

/// Subgroup of Aut(F) given by generators, with the element set materialized.
class FusionAutGroup {
public:
  static FusionAutGroup trivial(const FusionSystemPtr& f);
  static FusionAutGroup generated(const FusionSystemPtr& f, std::vector<FusionAut> gens);

  const FusionSystemPtr& system() const { return system_; }
  const std::vector<FusionAut>& elements() const { return elements_; }
  size_t order() const { return elements_.size(); }

private:
  FusionAutGroup(FusionSystemPtr f, std::vector<FusionAut> els)
      : system_(std::move(f)), elements_(std::move(els)) {}
  FusionSystemPtr system_;
  std::vector<FusionAut> elements_;  // sorted by table
};

enum class TBranch { fpf, p_group_auts, none };

struct TAutReport {
  bool holds = false;
  TBranch branch = TBranch::none;
  std::optional<int> witness_object;  // violating Q for the p-group branch
  std::string note;
};

/// U is a T-automorphism group: either cyclic of prime order generated by a
/// fixed-point-free automorphism, or Aut_F(Q) is a p-group for every
/// U-invariant normal Q <= S.
TAutReport is_T_automorphism_group(const FusionSystem& f, const FusionAutGroup& u);

/// First U-invariant normal Q <= S with |Aut_F(Q)| not a p-power, if any.
std::optional<int> p_group_auts_violation(const FusionSystem& f, const FusionAutGroup& u);

}  // namespace fuskit
