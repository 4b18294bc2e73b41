#pragma once

#include <cstddef>

namespace fuskit {

/// Search and materialization limits. Groups here are small by design;
/// caps turn runaway inputs into reported errors instead of hangs.
struct Caps {
  size_t element_cap = 10000;     // ambient group element materialization
  size_t small_group_cap = 256;   // subgroup enumeration / automorphism search
  size_t morphism_cap = 100000;   // closure-generated fusion systems
  int alperin_depth = 8;          // decomposition search depth
  size_t out_realize_cap = 5000;  // Out_F(P) permutation realization
  size_t aut_f_cap = 2000;        // Aut(F) subgroup enumeration
};

}  // namespace fuskit
