#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fuskit/caps.hpp"
#include "fuskit/grouphom.hpp"
#include "fuskit/subgroup.hpp"

namespace fuskit {

uint64_t p_part(uint64_t n, int p);
bool is_prime(uint64_t n);
std::vector<int> prime_divisors(uint64_t n);
std::map<int, size_t> element_order_histogram(const Subgroup& g);

bool is_abelian(const Subgroup& g);
bool is_normal_in(const Subgroup& g, const Subgroup& n);
/// Prime p with |s| = p^k, or 0 if |s| is not a prime power (or is 1).
int p_group_prime(const Subgroup& s);
bool is_elementary_abelian(const Subgroup& s);

Subgroup centralizer(const Subgroup& g, const Subgroup& p);
Subgroup normalizer(const Subgroup& g, const Subgroup& p);
inline Subgroup center(const Subgroup& g) { return centralizer(g, g); }

/// Sylow p-subgroup by normalizer ascent; trivial when p does not divide |g|.
Subgroup sylow_subgroup(const Subgroup& g, int p);
Subgroup sylow_subgroup(const PermGroupPtr& g, int p);
std::vector<Subgroup> all_sylow_subgroups(const Subgroup& g, int p);

/// All subgroups, each once, sorted by (order, canonical element key).
std::vector<Subgroup> enumerate_subgroups(const Subgroup& p, const Caps& caps = {});

std::vector<Subgroup> normal_subgroups(const Subgroup& g);
/// Largest normal subgroup of order coprime to p.
Subgroup o_p_prime(const Subgroup& g, int p);

struct QuotientGroup {
  PermGroupPtr group;   // coset action of g on g/n, degree [g:n]
  GroupHom projection;  // g -> group (both as whole subgroups)
};
QuotientGroup quotient_group(const Subgroup& g, const Subgroup& n);

std::vector<GroupHom> automorphism_group(const Subgroup& p, const Caps& caps = {});

bool isomorphic_to(const Subgroup& a, const Subgroup& b, const Caps& caps = {});
bool isomorphic_to(const PermGroupPtr& a, const PermGroupPtr& b, const Caps& caps = {});

struct SemidirectProduct {
  PermGroupPtr group;
  GroupHom embed_normal;      // v -> group
  GroupHom embed_complement;  // h -> group
};
/// v x| h acting on the regular domain of v plus the natural domain of h;
/// action_on_h_gens[i] is the automorphism of v assigned to h's i-th generator.
SemidirectProduct semidirect_product(const PermGroupPtr& v, const PermGroupPtr& h,
                                     const std::vector<GroupHom>& action_on_h_gens);

struct NilpotencyData {
  std::vector<Subgroup> lower_central_series;  // gamma_1 = g, ..., until stable
  bool nilpotent;
};
NilpotencyData nilpotency_data(const Subgroup& g);

struct CharacteristicSubgroups {
  Subgroup center;
  Subgroup omega_center;           // generated by order-p elements of Z(S)
  Subgroup thompson;               // generated by elementary abelians of maximal order
  Subgroup omega_center_thompson;  // generated by order-p elements of Z(J(S))
};
CharacteristicSubgroups characteristic_subgroups(const Subgroup& s, const Caps& caps = {});

/// [a, b] = < a^-1 b^-1 a b > as a subgroup of the common ambient,
/// normal-closed under conjugation by closure_under.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b, const Subgroup& closure_under);

}  // namespace fuskit
