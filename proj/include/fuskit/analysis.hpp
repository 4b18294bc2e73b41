#pragma once

#include "fuskit/fusion.hpp"

namespace fuskit {

/// P and all its F-conjugates contain their S-centralizers.
bool is_centric(const FusionSystem& f, int object);
bool is_centric(const FusionSystem& f, const Subgroup& p);

/// Out_F(P) has no nontrivial normal p-subgroup.
bool is_radical(const FusionSystem& f, int object);
bool is_radical(const FusionSystem& f, const Subgroup& p);

/// The F-conjugacy class of Q is {Q}.
bool is_weakly_closed(const FusionSystem& f, int object);
bool is_weakly_closed(const FusionSystem& f, const Subgroup& q);

/// Q is normal in S and N_F(Q) has the same hom-sets as F.
bool is_normal_in_F(const FusionSystem& f, int object);
bool is_normal_in_F(const FusionSystem& f, const Subgroup& q);

/// Objects that are fully normalized, F-centric and F-radical, ascending.
std::vector<int> alperin_family(const FusionSystem& f);

/// Normalizer fusion system over N_S(Q): morphisms of F extending to PQ -> P'Q
/// with the extension fixing Q setwise.
FusionSystemPtr normalizer_fusion_system(const FusionSystemPtr& f, const Subgroup& q);

struct QuotientFusion {
  FusionSystemPtr system;   // over S/Q
  QuotientGroup quotient;   // S -> S/Q with projection
};

/// Quotient system F/Q at a weakly closed Q normal in S.
QuotientFusion quotient_fusion_system(const FusionSystemPtr& f, const Subgroup& q);

struct AlperinStep {
  int q_object;        // fully normalized, centric, radical subgroup index
  FusionMorphism aut;  // element of Aut_F(Q_i)
  int from_object;     // P_{i-1}
  int to_object;       // P_i = aut(P_{i-1})
};

struct AlperinDecomposition {
  FusionMorphism target;
  std::vector<AlperinStep> steps;  // composite of restrictions equals target
};

/// Factors an F-isomorphism through automorphisms of fully normalized centric
/// radical subgroups (breadth-first, complete at desk scale).
AlperinDecomposition alperin_decompose(const FusionSystemPtr& f, const FusionMorphism& psi);

}  // namespace fuskit
