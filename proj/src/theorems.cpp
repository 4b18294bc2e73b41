#include "fuskit/theorems.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "fuskit/analysis.hpp"
#include "fuskit/catalog.hpp"
#include "fuskit/errors.hpp"

namespace fuskit {

std::string diagnostic_dump(const FusionSystem& f) {
  std::ostringstream os;
  os << "p = " << f.prime() << ", |S| = " << f.sylow().order() << "\n";
  for (int i = 0; i < static_cast<int>(f.objects().size()); ++i) {
    const Subgroup& p = f.object(i);
    os << "object " << i << " order " << p.order() << " gens";
    for (const Perm& g : p.generators()) os << " " << g.cycle_string();
    os << " : |Aut_F| = " << f.aut_f(i).size() << ", |Aut_S| = " << f.aut_s_order(i)
       << ", morphisms out = " << f.atoms(i).size() << "\n";
  }
  return os.str();
}

bool is_nilpotent_fusion(const FusionSystem& f) {
  // Route 1: every morphism is an S-conjugation.
  bool direct = true;
  for (int i = 0; i < static_cast<int>(f.objects().size()) && direct; ++i) {
    const auto& fa = f.atoms(i);
    const auto& sa = f.s_atoms(i);
    direct = fa.size() == sa.size();
    for (size_t k = 0; k < fa.size() && direct; ++k) direct = fa[k].table == sa[k].table;
  }
  // Route 2: Alperin criterion on fully normalized centric radical subgroups.
  bool alperin = true;
  for (int q : alperin_family(f)) {
    uint64_t aut_f_n = static_cast<uint64_t>(f.aut_f(q).size());
    if (aut_f_n != f.aut_s_order(q)) {
      alperin = false;
      break;
    }
  }
  if (direct != alperin)
    throw contradiction_error("nilpotency routes disagree", diagnostic_dump(f));
  return direct;
}

namespace {

Subgroup map_subgroup(const GroupHom& proj, const Subgroup& sub, const PermGroupPtr& into) {
  std::vector<Perm> elts;
  elts.reserve(sub.order());
  for (const Perm& x : sub.elements()) elts.push_back(proj.apply(x));
  std::sort(elts.begin(), elts.end());
  elts.erase(std::unique(elts.begin(), elts.end()), elts.end());
  return Subgroup::from_elements(into, std::move(elts));
}

}  // namespace

ModelGroup model_group(const FusionSystemPtr& f, int object) {
  if (!f->realized())
    throw precondition_error("model groups are computed for group-realized systems only");
  if (!is_centric(*f, object) || !f->fullness_status(object).fully_normalized)
    throw precondition_error("model group needs an F-centric, fully normalized subgroup");
  const Subgroup& g = f->realizing_group();
  const Subgroup& p = f->object(object);
  int prime = f->prime();

  Subgroup n = normalizer(g, p);
  Subgroup c = centralizer(g, p);
  Subgroup k = o_p_prime(c, prime);

  PermGroupPtr l;
  GroupHom proj = GroupHom::identity(n);  // placeholder, reassigned below
  if (k.is_trivial()) {
    l = n.as_group();
    proj = GroupHom::from_table(n, Subgroup::whole(l), n.elements());
  } else {
    QuotientGroup q = quotient_group(n, k);
    l = q.group;
    proj = std::move(q.projection);
  }

  const Subgroup& ns_p = f->normalizer_in_s(object);
  Subgroup sylow_image = map_subgroup(proj, ns_p, l);
  if (sylow_image.order() != ns_p.order())
    throw contradiction_error("N_S(P) does not embed into the model group");
  if (sylow_image.order() != p_part(l->order(), prime))
    throw contradiction_error("N_S(P) is not a Sylow p-subgroup of the model group");

  Subgroup p_image = map_subgroup(proj, p, l);
  Subgroup cl = centralizer(Subgroup::whole(l), p_image);
  Subgroup zp = centralizer(p_image, p_image);
  if (!(cl == zp)) throw contradiction_error("C_L(P) != Z(P) in the model group");

  // N_F(P) = F_{N_S(P)}(L), compared extensionally through the projection.
  FusionSystemPtr nfp = normalizer_fusion_system(f, p);
  FusionSystemPtr fl = fusion_from_group_at(l, sylow_image, prime, f->caps());
  std::map<Perm, Perm> backward;
  for (const Perm& x : ns_p.elements()) backward.emplace(proj.apply(x), x);
  for (int i = 0; i < static_cast<int>(nfp->objects().size()); ++i) {
    const Subgroup& a = nfp->object(i);
    Subgroup a_image = map_subgroup(proj, a, l);
    int li = fl->object_index(a_image);
    const auto& left = nfp->atoms(i);
    const auto& right = fl->atoms(li);
    if (left.size() != right.size())
      throw contradiction_error("model group fusion identity failed (hom-set sizes)",
                                diagnostic_dump(*nfp));
    for (const MorphAtom& atom : left) {
      std::vector<Perm> mapped(a_image.order(), Perm(l->degree()));
      for (size_t x = 0; x < a.order(); ++x) {
        int yi = a_image.element_index(proj.apply(a.elements()[x]));
        mapped[static_cast<size_t>(yi)] = proj.apply(atom.table[x]);
      }
      if (!fl->has_atom(li, mapped))
        throw contradiction_error("model group fusion identity failed (morphism mismatch)",
                                  diagnostic_dump(*nfp));
    }
  }
  return ModelGroup{p, l, std::move(proj), std::move(sylow_image)};
}

ModelGroup model_group(const FusionSystemPtr& f, const Subgroup& p) {
  return model_group(f, f->object_index(p));
}

bool involves(const Subgroup& l, const Subgroup& h, const Caps& caps) {
  if (h.order() > l.order()) return false;
  Subgroup hw = h;
  for (const Subgroup& a : enumerate_subgroups(l, caps)) {
    if (a.order() % h.order() != 0) continue;
    for (const Subgroup& b : normal_subgroups(a)) {
      if (a.order() != b.order() * h.order()) continue;
      QuotientGroup q = quotient_group(a, b);
      if (isomorphic_to(Subgroup::whole(q.group), hw, caps)) return true;
    }
  }
  return false;
}

bool involves(const PermGroupPtr& l, const PermGroupPtr& h, const Caps& caps) {
  return involves(Subgroup::whole(l), Subgroup::whole(h), caps);
}

HFreeReport is_H_free(const FusionSystemPtr& f, const PermGroupPtr& h) {
  HFreeReport rep;
  Subgroup hw = Subgroup::whole(h);
  for (int i = 0; i < static_cast<int>(f->objects().size()); ++i) {
    if (!f->fullness_status(i).fully_normalized || !is_centric(*f, i)) continue;
    ModelGroup m = model_group(f, i);
    ++rep.models_checked;
    if (involves(Subgroup::whole(m.model), hw, f->caps())) {
      rep.free = false;
      rep.witness_object = i;
      rep.witness_model = m.model;
      return rep;
    }
  }
  return rep;
}

namespace {

Hypothesis sigma4_hypothesis(const FusionSystemPtr& f, std::optional<bool>& sigma4_info) {
  Hypothesis hyp{"p odd or Sigma4-free", false, ""};
  std::optional<HFreeReport> hf;
  if (f->realized()) {
    hf = is_H_free(f, make_named_group("sym(4)"));
    sigma4_info = hf->free;
  }
  if (f->prime() != 2) {
    hyp.holds = true;
    hyp.witness = "p = " + std::to_string(f->prime()) + " is odd";
  } else if (!hf) {
    throw precondition_error("Sigma4-freeness needs a group-realized system at p = 2");
  } else {
    hyp.holds = hf->free;
    hyp.witness = hf->free
                      ? "no model group involves Sigma4 (" +
                            std::to_string(hf->models_checked) + " models checked)"
                      : "model group of a centric subgroup involves Sigma4";
  }
  return hyp;
}

}  // namespace

TheoremReport check_theorem_A(const FusionSystemPtr& f, const FusionAutGroup& u) {
  TheoremReport rep;
  rep.hypotheses.push_back(sigma4_hypothesis(f, rep.sigma4_free));

  Hypothesis hyp2{"Aut_F(Q) is a p-group for every U-invariant normal Q <= S", false, ""};
  std::optional<int> violation = p_group_auts_violation(*f, u);
  if (violation) {
    const Subgroup& q = f->object(*violation);
    std::string gens;
    for (const Perm& x : q.generators()) gens += (gens.empty() ? "" : " ") + x.cycle_string();
    hyp2.witness = "Q = <" + gens + "> has |Aut_F(Q)| = " +
                   std::to_string(f->aut_f(*violation).size());
  } else {
    hyp2.holds = true;
    hyp2.witness = "all U-invariant normal subgroups pass";
  }
  rep.hypotheses.push_back(std::move(hyp2));

  rep.applicable = std::all_of(rep.hypotheses.begin(), rep.hypotheses.end(),
                               [](const Hypothesis& h) { return h.holds; });
  rep.conclusion_holds = is_nilpotent_fusion(*f);
  rep.contradiction = rep.applicable && !rep.conclusion_holds;
  if (rep.contradiction) rep.diagnostic = diagnostic_dump(*f);
  return rep;
}

TheoremReport check_theorem_B(const FusionSystemPtr& f, const FusionAut& phi) {
  TheoremReport rep;
  rep.hypotheses.push_back(sigma4_hypothesis(f, rep.sigma4_free));

  int order = phi.is_identity() ? 1 : phi.order();
  Hypothesis hyp2{"phi has prime order", is_prime(static_cast<uint64_t>(order)),
                  "order(phi) = " + std::to_string(order)};
  rep.hypotheses.push_back(std::move(hyp2));

  bool fpf = is_fpf_fusion_aut(phi);
  rep.hypotheses.push_back(
      Hypothesis{"phi is a fixed-point-free automorphism of (S, F)", fpf,
                 fpf ? "phi fixes only 1 in S and phi_sharp fixes only identities"
                     : "phi or some phi_sharp has a nontrivial fixed point"});

  rep.applicable = std::all_of(rep.hypotheses.begin(), rep.hypotheses.end(),
                               [](const Hypothesis& h) { return h.holds; });
  rep.conclusion_holds = is_nilpotent_fusion(*f);
  rep.contradiction = rep.applicable && !rep.conclusion_holds;
  if (rep.contradiction) rep.diagnostic = diagnostic_dump(*f);
  return rep;
}

LemmaSemidirectReport check_lemma_semidirect(const PermGroupPtr& v, const PermGroupPtr& h,
                                             const std::vector<GroupHom>& action,
                                             const Caps& caps) {
  Subgroup vw = Subgroup::whole(v);
  if (!is_elementary_abelian(vw) || vw.is_trivial())
    throw precondition_error("V must be a nontrivial elementary abelian p-group");
  int p = p_group_prime(vw);

  SemidirectProduct sd = semidirect_product(v, h, action);
  Subgroup gw = Subgroup::whole(sd.group);
  Subgroup v_embed = sd.embed_normal.image_subgroup();

  // Some element of H of order prime to p must act nontrivially on V.
  bool witness = false;
  Subgroup hwhole = Subgroup::whole(h);
  for (const Perm& x : hwhole.elements()) {
    if (x.order() % p == 0 || x.is_identity()) continue;
    Perm b = sd.embed_complement.apply(x);
    for (const Perm& ve : v_embed.generators()) {
      if (!(conjugated(b, ve) == ve)) {
        witness = true;
        break;
      }
    }
    if (witness) break;
  }
  if (!witness)
    throw precondition_error(
        "H has no element of order prime to p acting nontrivially on V");

  FusionSystemPtr f = fusion_from_group(sd.group, p, caps);
  if (!f->sylow().contains_subgroup(v_embed))
    throw contradiction_error("V is not contained in the Sylow p-subgroup");

  std::vector<FusionAut> aut_f = fusion_preserving_automorphisms(f);
  if (aut_f.size() > caps.aut_f_cap)
    throw cap_exceeded("aut_f_cap", caps.aut_f_cap, "Aut(F) enumeration for the lemma");

  // Regular realization of Aut(F) so the generic subgroup enumerator applies.
  std::map<std::vector<Perm>, int> index;
  for (size_t i = 0; i < aut_f.size(); ++i) index.emplace(aut_f[i].table(), static_cast<int>(i));
  const Subgroup& s = f->sylow();
  auto compose_idx = [&](int a, int b) {
    std::vector<Perm> t;
    t.reserve(s.order());
    for (const Perm& y : aut_f[static_cast<size_t>(b)].table())
      t.push_back(aut_f[static_cast<size_t>(a)].table()[static_cast<size_t>(s.element_index(y))]);
    return index.at(t);
  };
  int nel = static_cast<int>(aut_f.size());
  std::vector<Perm> regular;
  for (int a = 0; a < nel; ++a) {
    std::vector<int> im(static_cast<size_t>(nel));
    for (int b = 0; b < nel; ++b) im[static_cast<size_t>(b)] = compose_idx(a, b);
    regular.push_back(Perm::from_images(std::move(im)));
  }
  PermGroupPtr reg_group = group_from_generators(regular, std::max(nel, 1));
  int id_idx = index.at(s.elements());

  LemmaSemidirectReport rep{sd.group, f, aut_f.size(), 0, true, {}};
  for (const Subgroup& ur : enumerate_subgroups(Subgroup::whole(reg_group), caps)) {
    std::vector<FusionAut> members;
    bool leaves_v = true;
    for (const Perm& sigma : ur.elements()) {
      const FusionAut& m = aut_f[static_cast<size_t>(sigma.apply(id_idx))];
      std::vector<Perm> img;
      for (const Perm& x : v_embed.elements()) img.push_back(m.apply(x));
      std::sort(img.begin(), img.end());
      if (!(img == v_embed.elements())) {
        leaves_v = false;
        break;
      }
      members.push_back(m);
    }
    if (!leaves_v) continue;
    FusionAutGroup u = FusionAutGroup::generated(f, members);
    if (u.order() != ur.order())
      throw contradiction_error("regular realization of Aut(F) is inconsistent");
    TAutReport t = is_T_automorphism_group(*f, u);
    rep.results.push_back(LemmaUResult{u.order(), t.holds, t.branch, t.note});
    ++rep.subgroups_examined;
    if (t.holds) rep.all_rejected = false;
  }
  return rep;
}

}  // namespace fuskit
