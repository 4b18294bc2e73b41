#include "fuskit/fsaut.hpp"

#include <algorithm>
#include <set>

#include "fuskit/analysis.hpp"
#include "fuskit/errors.hpp"

namespace fuskit {

namespace {

// Table of phi o alpha o (phi|_P)^-1 on phi(P), aligned with the image
// object's element list; alpha is an atom with domain P.
std::vector<Perm> conjugate_atom_table(const FusionSystem& f, const GroupHom& phi,
                                       const GroupHom& phi_inv, int dom, const MorphAtom& alpha,
                                       const Subgroup& phi_dom) {
  const Subgroup& p = f.object(dom);
  std::vector<Perm> out;
  out.reserve(phi_dom.order());
  for (const Perm& y : phi_dom.elements()) {
    Perm x = phi_inv.apply(y);
    out.push_back(phi.apply(alpha.table[static_cast<size_t>(p.element_index(x))]));
  }
  return out;
}

Subgroup image_of(const FusionSystem& f, const GroupHom& phi, const Subgroup& p) {
  std::vector<Perm> elts;
  elts.reserve(p.order());
  for (const Perm& x : p.elements()) elts.push_back(phi.apply(x));
  std::sort(elts.begin(), elts.end());
  return Subgroup::from_elements(f.sylow().ambient(), std::move(elts));
}

bool preserves_on(const FusionSystem& f, const GroupHom& phi, const std::vector<int>& objects,
                  bool auts_only) {
  GroupHom phi_inv = phi.inverse_iso();
  for (int dom : objects) {
    const Subgroup& p = f.object(dom);
    Subgroup phi_p = image_of(f, phi, p);
    int phi_dom = f.object_index(phi_p);
    for (const MorphAtom& a : f.atoms(dom)) {
      if (auts_only && a.img != dom) continue;
      std::vector<Perm> t = conjugate_atom_table(f, phi, phi_inv, dom, a, phi_p);
      if (!f.has_atom(phi_dom, t)) return false;
    }
  }
  return true;
}

}  // namespace

bool preserves_fusion_on_family(const FusionSystem& f, const GroupHom& phi) {
  return preserves_on(f, phi, alperin_family(f), true);
}

bool preserves_fusion_exhaustive(const FusionSystem& f, const GroupHom& phi) {
  std::vector<int> all(f.objects().size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return preserves_on(f, phi, all, false);
}

FusionAut::FusionAut(FusionSystemPtr system, GroupHom phi)
    : system_(std::move(system)), phi_(std::move(phi)) {
  if (!(phi_.domain() == system_->sylow()) || !(phi_.codomain() == system_->sylow()))
    throw precondition_error("fusion automorphism must be an automorphism of S");
  if (!phi_.is_bijective()) throw precondition_error("fusion automorphism must be bijective");
  if (!preserves_fusion_exhaustive(*system_, phi_))
    throw precondition_error("automorphism of S does not preserve the fusion system");
}

bool FusionAut::is_identity() const {
  return phi_.table() == system_->sylow().elements();
}

FusionAut FusionAut::inverse() const { return FusionAut(system_, phi_.inverse_iso()); }

FusionAut operator*(const FusionAut& a, const FusionAut& b) {
  return FusionAut(a.system_, compose(a.phi_, b.phi_));
}

std::vector<FusionAut> fusion_preserving_automorphisms(const FusionSystemPtr& f) {
  std::vector<FusionAut> out;
  for (const GroupHom& h : automorphism_group(f->sylow(), f->caps()))
    if (preserves_fusion_on_family(*f, h)) out.emplace_back(f, h);
  std::sort(out.begin(), out.end());
  return out;
}

SharpAction induced_sharp(const FusionAut& phi, int object) {
  const FusionSystem& f = *phi.system();
  const Subgroup& p = f.object(object);
  Subgroup phi_p = image_of(f, phi.hom(), p);
  if (!(phi_p == p)) throw precondition_error("P is not phi-invariant");
  GroupHom phi_inv = phi.hom().inverse_iso();
  std::vector<MorphAtom> auts;
  for (const MorphAtom& a : f.atoms(object))
    if (a.img == object) auts.push_back(a);
  SharpAction out{object, {}};
  out.mapping.reserve(auts.size());
  for (const MorphAtom& a : auts) {
    std::vector<Perm> t = conjugate_atom_table(f, phi.hom(), phi_inv, object, a, p);
    auto it = std::lower_bound(auts.begin(), auts.end(), t,
                               [](const MorphAtom& x, const std::vector<Perm>& v) {
                                 return x.table < v;
                               });
    if (it == auts.end() || !(it->table == t))
      throw contradiction_error("phi_sharp image escaped Aut_F(P)");
    out.mapping.push_back(static_cast<int>(it - auts.begin()));
  }
  return out;
}

SharpAction induced_sharp(const FusionAut& phi, const Subgroup& p) {
  return induced_sharp(phi, phi.system()->object_index(p));
}

std::vector<int> invariant_subgroup_indices(const FusionAut& phi) {
  const FusionSystem& f = *phi.system();
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(f.objects().size()); ++i) {
    Subgroup img = image_of(f, phi.hom(), f.object(i));
    if (img == f.object(i)) out.push_back(i);
  }
  return out;
}

std::vector<Subgroup> invariant_subgroups(const FusionAut& phi) {
  std::vector<Subgroup> out;
  for (int i : invariant_subgroup_indices(phi)) out.push_back(phi.system()->object(i));
  return out;
}

bool is_fpf_fusion_aut(const FusionAut& phi) {
  if (phi.hom().fixed_points().size() != 1) return false;  // identity only
  const FusionSystem& f = *phi.system();
  for (int i : invariant_subgroup_indices(phi)) {
    const Subgroup& p = f.object(i);
    std::vector<MorphAtom> auts;
    for (const MorphAtom& a : f.atoms(i))
      if (a.img == i) auts.push_back(a);
    SharpAction sharp = induced_sharp(phi, i);
    for (size_t k = 0; k < sharp.mapping.size(); ++k) {
      if (sharp.mapping[k] != static_cast<int>(k)) continue;
      if (!(auts[k].table == p.elements())) return false;  // fixes a non-identity
    }
  }
  return true;
}

InducedFusionAut induced_fusion_aut_from_group(const PermGroupPtr& g, const GroupHom& phi, int p,
                                               const Caps& caps) {
  Subgroup whole = Subgroup::whole(g, caps.element_cap);
  if (!(phi.domain() == whole) || !phi.is_automorphism())
    throw precondition_error("phi must be an automorphism of G");
  std::vector<Subgroup> sylows = all_sylow_subgroups(whole, p);
  std::vector<Subgroup> invariant;
  for (const Subgroup& s : sylows) {
    std::vector<Perm> img;
    img.reserve(s.order());
    for (const Perm& x : s.elements()) img.push_back(phi.apply(x));
    std::sort(img.begin(), img.end());
    if (img == s.elements()) invariant.push_back(s);
  }
  bool fpf_on_g = phi.fixed_points().size() == 1;
  if (invariant.empty())
    throw precondition_error("no phi-invariant Sylow p-subgroup exists");
  if (fpf_on_g && invariant.size() != 1)
    throw contradiction_error(
        "fixed-point-free automorphism with several invariant Sylow subgroups");
  const Subgroup& s = invariant.front();
  FusionSystemPtr f = fusion_from_group_at(g, s, p, caps);
  std::vector<Perm> table;
  table.reserve(s.order());
  for (const Perm& x : s.elements()) table.push_back(phi.apply(x));
  GroupHom restricted = GroupHom::from_table(f->sylow(), f->sylow(), std::move(table));
  try {
    FusionAut aut(f, std::move(restricted));
    return InducedFusionAut{f, s, std::move(aut), invariant.size(), sylows.size()};
  } catch (const precondition_error& e) {
    throw contradiction_error(
        std::string("induced automorphism failed fusion preservation: ") + e.what());
  }
}

FusionAutGroup FusionAutGroup::trivial(const FusionSystemPtr& f) {
  return FusionAutGroup(f, {FusionAut(f, GroupHom::identity(f->sylow()))});
}

FusionAutGroup FusionAutGroup::generated(const FusionSystemPtr& f, std::vector<FusionAut> gens) {
  std::set<std::vector<Perm>> seen;
  std::vector<FusionAut> elements{FusionAut(f, GroupHom::identity(f->sylow()))};
  seen.insert(elements.front().table());
  std::vector<FusionAut> frontier = elements;
  while (!frontier.empty()) {
    std::vector<FusionAut> next;
    for (const FusionAut& x : frontier) {
      for (const FusionAut& ggen : gens) {
        FusionAut y = x * ggen;
        if (seen.insert(y.table()).second) {
          if (seen.size() > f->caps().aut_f_cap)
            throw cap_exceeded("aut_f_cap", f->caps().aut_f_cap, "Aut(F) subgroup closure");
          elements.push_back(y);
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(elements.begin(), elements.end());
  return FusionAutGroup(f, std::move(elements));
}

std::optional<int> p_group_auts_violation(const FusionSystem& f, const FusionAutGroup& u) {
  for (int i = 0; i < static_cast<int>(f.objects().size()); ++i) {
    if (f.normalizer_in_s(i).order() != f.sylow().order()) continue;
    bool u_invariant = true;
    for (const FusionAut& sigma : u.elements()) {
      std::vector<Perm> img;
      for (const Perm& x : f.object(i).elements()) img.push_back(sigma.apply(x));
      std::sort(img.begin(), img.end());
      if (!(img == f.object(i).elements())) {
        u_invariant = false;
        break;
      }
    }
    if (!u_invariant) continue;
    uint64_t n = static_cast<uint64_t>(f.aut_f(i).size());
    if (p_part(n, f.prime()) != n) return i;
  }
  return std::nullopt;
}

TAutReport is_T_automorphism_group(const FusionSystem& f, const FusionAutGroup& u) {
  TAutReport rep;
  // Branch 1: U = <phi> with phi fixed-point-free of prime order.
  if (is_prime(u.order())) {
    for (const FusionAut& sigma : u.elements()) {
      if (sigma.is_identity()) continue;
      if (is_fpf_fusion_aut(sigma)) {
        rep.holds = true;
        rep.branch = TBranch::fpf;
        rep.note = "generated by a fixed-point-free automorphism of order " +
                   std::to_string(u.order());
        return rep;
      }
    }
  }
  // Branch 2: Aut_F(Q) is a p-group for every U-invariant normal Q <= S.
  std::optional<int> violation = p_group_auts_violation(f, u);
  if (violation) {
    rep.witness_object = violation;
    rep.note = "Aut_F(Q) has order " + std::to_string(f.aut_f(*violation).size()) +
               " for a U-invariant normal Q";
  } else {
    rep.holds = true;
    rep.branch = TBranch::p_group_auts;
    rep.note = "Aut_F(Q) is a " + std::to_string(f.prime()) +
               "-group for every U-invariant normal Q";
  }
  return rep;
}

}  // namespace fuskit
