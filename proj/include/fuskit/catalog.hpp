#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "fuskit/grouphom.hpp"
#include "fuskit/permgroup.hpp"

namespace fuskit {

/// Parsed catalog constructor call, e.g. psl2(17) or
/// direct_product(cyclic(3),cyclic(3)). Arguments are integers or nested specs.
struct NamedGroupSpec {
  std::string name;
  struct Arg;
  std::vector<Arg> args;
};
struct NamedGroupSpec::Arg : std::variant<long long, NamedGroupSpec> {
  using std::variant<long long, NamedGroupSpec>::variant;
};

NamedGroupSpec parse_group_name(const std::string& text);

/// Supported constructors: cyclic(n), dihedral(2n), elementary_abelian(p,k),
/// quaternion8, sym(n), alt(n), psl2(q) for prime q <= 23, direct_product(a,b),
/// frobenius(p^k,m) with m | p^k - 1.
PermGroupPtr make_named_group(const NamedGroupSpec& spec);
PermGroupPtr make_named_group(const std::string& text);

std::vector<std::string> catalog_constructor_names();

/// Group together with an automorphism used by the fixed-point-free fixtures.
struct FpfExample {
  std::string name;
  PermGroupPtr group;
  GroupHom automorphism;  // whole group -> whole group
  std::string notes;
};

/// Names: a4_conj12, c3c3_inversion, c2cubed_singer.
FpfExample make_fpf_example(const std::string& name);
std::vector<std::string> fpf_example_names();

}  // namespace fuskit
