#pragma once

#include "fuskit/fsaut.hpp"

namespace fuskit {

/// F = F_S(S), decided two ways and cross-checked: direct hom-set comparison
/// against the inner system, and the Alperin criterion Aut_F(Q) = Aut_S(Q) on
/// fully normalized centric radical Q.
bool is_nilpotent_fusion(const FusionSystem& f);

/// Model group L_P^F = N_G(P) / O_{p'}(C_G(P)) of a group-realized system at a
/// centric, fully normalized P; all defining invariants are verified.
struct ModelGroup {
  Subgroup subgroup;      // P
  PermGroupPtr model;     // L
  GroupHom projection;    // N_G(P) -> L
  Subgroup sylow_image;   // image of N_S(P), a Sylow p-subgroup of L
};
ModelGroup model_group(const FusionSystemPtr& f, int object);
ModelGroup model_group(const FusionSystemPtr& f, const Subgroup& p);

/// Some section B normal-in A <= l has A/B isomorphic to h.
bool involves(const Subgroup& l, const Subgroup& h, const Caps& caps = {});
bool involves(const PermGroupPtr& l, const PermGroupPtr& h, const Caps& caps = {});

struct HFreeReport {
  bool free = true;
  std::optional<int> witness_object;
  PermGroupPtr witness_model;
  size_t models_checked = 0;
};

/// H involved in no model group L_P^F, P ranging over the F-centric fully
/// normalized subgroups.
HFreeReport is_H_free(const FusionSystemPtr& f, const PermGroupPtr& h);

struct Hypothesis {
  std::string name;
  bool holds;
  std::string witness;
};

struct TheoremReport {
  std::vector<Hypothesis> hypotheses;
  bool applicable = false;
  bool conclusion_holds = false;
  bool contradiction = false;          // applicable && !conclusion: implementation bug
  std::optional<bool> sigma4_free;     // informational, evaluated when computable
  std::string diagnostic;
};

/// Hypotheses: (p odd or Sigma4-free) and Aut_F(Q) a p-group for every
/// U-invariant normal Q <= S. Conclusion: F = F_S(S).
TheoremReport check_theorem_A(const FusionSystemPtr& f, const FusionAutGroup& u);

/// Hypotheses: (p odd or Sigma4-free), phi of prime order, phi fixed-point-free
/// on (S, F). Conclusion: F = F_S(S).
TheoremReport check_theorem_B(const FusionSystemPtr& f, const FusionAut& phi);

struct LemmaUResult {
  size_t u_order;
  bool t_holds;
  TBranch branch;
  std::string note;
};

struct LemmaSemidirectReport {
  PermGroupPtr group;        // V x| H
  FusionSystemPtr system;    // F_S(G)
  size_t aut_f_order;
  size_t subgroups_examined; // subgroups of Aut(F) leaving V invariant
  bool all_rejected;         // no such U is a T-automorphism group
  std::vector<LemmaUResult> results;
};

/// Exhaustive check of the semidirect-product lemma: no subgroup of Aut(F)
/// leaving V invariant is a T-automorphism group.
LemmaSemidirectReport check_lemma_semidirect(const PermGroupPtr& v, const PermGroupPtr& h,
                                             const std::vector<GroupHom>& action,
                                             const Caps& caps = {});

/// Hom-set size table and object summary, attached to contradiction reports.
std::string diagnostic_dump(const FusionSystem& f);

}  // namespace fuskit
