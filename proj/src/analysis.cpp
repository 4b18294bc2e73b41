#include "fuskit/analysis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "fuskit/errors.hpp"

namespace fuskit {

bool is_centric(const FusionSystem& f, int object) {
  for (int j : f.class_of(object))
    if (!f.object(j).contains_subgroup(f.centralizer_in_s(j))) return false;
  return true;
}

bool is_centric(const FusionSystem& f, const Subgroup& p) {
  return is_centric(f, f.object_index(p));
}

bool is_radical(const FusionSystem& f, int object) {
  OutFRealization out = f.out_f(object);
  int p = f.prime();
  for (const Subgroup& n : normal_subgroups(Subgroup::whole(out.group)))
    if (n.order() > 1 && p_part(n.order(), p) == n.order()) return false;
  return true;
}

bool is_radical(const FusionSystem& f, const Subgroup& p) {
  return is_radical(f, f.object_index(p));
}

bool is_weakly_closed(const FusionSystem& f, int object) {
  return f.class_of(object).size() == 1;
}

bool is_weakly_closed(const FusionSystem& f, const Subgroup& q) {
  return is_weakly_closed(f, f.object_index(q));
}

std::vector<int> alperin_family(const FusionSystem& f) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(f.objects().size()); ++i)
    if (f.fullness_status(i).fully_normalized && is_centric(f, i) && is_radical(f, i))
      out.push_back(i);
  return out;
}

namespace {

// Atoms of the normalizer system: F-morphisms P -> * inside N_S(Q) that
// extend over PQ with the extension fixing Q setwise.
bool extends_fixing_q(const FusionSystem& f, int dom, const MorphAtom& a, const Subgroup& q,
                      int join_idx) {
  const Subgroup& p = f.object(dom);
  const Subgroup& pq = f.object(join_idx);
  for (const MorphAtom& psi : f.atoms(join_idx)) {
    bool restricts = true;
    for (size_t i = 0; i < p.order() && restricts; ++i) {
      int j = pq.element_index(p.elements()[i]);
      restricts = psi.table[static_cast<size_t>(j)] == a.table[i];
    }
    if (!restricts) continue;
    bool fixes_q = true;
    for (const Perm& x : q.elements()) {
      int j = pq.element_index(x);
      if (!q.contains(psi.table[static_cast<size_t>(j)])) {
        fixes_q = false;
        break;
      }
    }
    if (fixes_q) return true;
  }
  return false;
}

}  // namespace

FusionSystemPtr normalizer_fusion_system(const FusionSystemPtr& f, const Subgroup& q) {
  f->object_index(q);  // Q must be a subgroup of S
  Subgroup ns_q = normalizer(f->sylow(), q);
  FusionSystemPtr shell = inner_fusion_system(ns_q, f->caps());
  std::map<int, std::vector<MorphAtom>> atoms;
  for (int i = 0; i < static_cast<int>(shell->objects().size()); ++i) {
    const Subgroup& p = shell->object(i);
    int fi = f->object_index(p);
    int join_idx = f->join_index(fi, f->object_index(q));
    std::vector<MorphAtom> list;
    for (const MorphAtom& a : f->atoms(fi)) {
      const Subgroup& img = f->object(a.img);
      if (!ns_q.contains_subgroup(img)) continue;
      if (!extends_fixing_q(*f, fi, a, q, join_idx)) continue;
      list.push_back(MorphAtom{i, shell->object_index(img), a.table});
    }
    atoms.emplace(i, std::move(list));
  }
  return fusion_from_atoms(ns_q, f->prime(), std::move(atoms), f->caps());
}

bool is_normal_in_F(const FusionSystem& f, int object) {
  const Subgroup& q = f.object(object);
  if (f.normalizer_in_s(object).order() != f.sylow().order()) return false;
  auto self = f.shared_from_this();
  FusionSystemPtr n = normalizer_fusion_system(self, q);
  // Q normal in S means N_S(Q) = S, so both systems enumerate the same
  // objects in the same canonical order.
  for (int i = 0; i < static_cast<int>(f.objects().size()); ++i) {
    const auto& fa = f.atoms(i);
    const auto& na = n->atoms(i);
    if (fa.size() != na.size()) return false;
    for (size_t k = 0; k < fa.size(); ++k)
      if (fa[k].table != na[k].table) return false;
  }
  return true;
}

bool is_normal_in_F(const FusionSystem& f, const Subgroup& q) {
  return is_normal_in_F(f, f.object_index(q));
}

QuotientFusion quotient_fusion_system(const FusionSystemPtr& f, const Subgroup& q) {
  int qi = f->object_index(q);
  if (f->normalizer_in_s(qi).order() != f->sylow().order())
    throw precondition_error("quotient requires Q normal in S");
  if (!is_weakly_closed(*f, qi))
    throw precondition_error("quotient requires a weakly F-closed subgroup");
  QuotientGroup qg = quotient_group(f->sylow(), q);
  Subgroup new_s = Subgroup::whole(qg.group);
  FusionSystemPtr shell = inner_fusion_system(new_s, f->caps());

  std::map<int, std::set<std::vector<Perm>>> seen;
  std::map<int, std::vector<MorphAtom>> atoms;
  for (int i = 0; i < static_cast<int>(f->objects().size()); ++i) {
    const Subgroup& p = f->object(i);
    if (!p.contains_subgroup(q)) continue;
    // Image object in S/Q.
    std::vector<Perm> proj_elts;
    for (const Perm& x : p.elements()) proj_elts.push_back(qg.projection.apply(x));
    Subgroup p_over_q = Subgroup::from_elements(new_s.ambient(), proj_elts);
    int dom = shell->object_index(p_over_q);
    for (const MorphAtom& a : f->atoms(i)) {
      // Weak closure forces every morphism on P >= Q to fix Q setwise.
      for (const Perm& x : q.elements())
        if (!q.contains(a.table[static_cast<size_t>(p.element_index(x))]))
          throw contradiction_error("morphism moves a weakly closed subgroup");
      std::vector<Perm> t(p_over_q.order(), Perm(new_s.degree()));
      for (size_t k = 0; k < p.order(); ++k) {
        int ci = p_over_q.element_index(qg.projection.apply(p.elements()[k]));
        t[static_cast<size_t>(ci)] = qg.projection.apply(a.table[k]);
      }
      if (seen[dom].insert(t).second) {
        std::vector<Perm> img_elts = t;
        std::sort(img_elts.begin(), img_elts.end());
        int img = shell->object_index(Subgroup::from_elements(new_s.ambient(), img_elts));
        atoms[dom].push_back(MorphAtom{dom, img, std::move(t)});
      }
    }
  }
  FusionSystemPtr sys = fusion_from_atoms(new_s, f->prime(), std::move(atoms), f->caps());
  return QuotientFusion{std::move(sys), std::move(qg)};
}

AlperinDecomposition alperin_decompose(const FusionSystemPtr& f, const FusionMorphism& psi) {
  if (psi.img_index() != psi.cod_index())
    throw precondition_error("alperin decomposition needs an isomorphism onto the codomain");
  const Subgroup& p0 = psi.domain();
  std::vector<int> family = alperin_family(*f);

  struct Node {
    int object;
    std::vector<Perm> table;  // accumulated map from P0
    int parent;
    int via_family;           // family object index
    std::vector<Perm> via_aut;
  };
  std::vector<Node> nodes{{psi.dom_index(), p0.elements(), -1, -1, {}}};
  std::set<std::vector<Perm>> visited{nodes[0].table};
  size_t frontier_begin = 0, frontier_end = 1;

  auto finish = [&](size_t goal) {
    AlperinDecomposition out{psi, {}};
    std::vector<size_t> path;
    for (size_t at = goal; nodes[at].parent >= 0; at = static_cast<size_t>(nodes[at].parent))
      path.push_back(at);
    std::reverse(path.begin(), path.end());
    for (size_t at : path) {
      const Node& nd = nodes[at];
      const Node& prev = nodes[static_cast<size_t>(nd.parent)];
      out.steps.push_back(AlperinStep{
          nd.via_family,
          FusionMorphism(f, nd.via_family, nd.via_family, nd.via_family, nd.via_aut),
          prev.object, nd.object});
    }
    return out;
  };

  if (nodes[0].table == psi.table()) return finish(0);

  for (int depth = 0; depth < f->caps().alperin_depth; ++depth) {
    for (size_t ni = frontier_begin; ni < frontier_end; ++ni) {
      int cur = nodes[ni].object;
      for (int qidx : family) {
        if (!f->object_leq(cur, qidx)) continue;
        const Subgroup& qsub = f->object(qidx);
        for (const MorphAtom& chi : f->atoms(qidx)) {
          if (chi.img != qidx) continue;
          std::vector<Perm> t;
          t.reserve(nodes[ni].table.size());
          for (const Perm& y : nodes[ni].table)
            t.push_back(chi.table[static_cast<size_t>(qsub.element_index(y))]);
          if (!visited.insert(t).second) continue;
          std::vector<Perm> img_elts = t;
          std::sort(img_elts.begin(), img_elts.end());
          int obj = f->object_index(Subgroup::from_elements(f->sylow().ambient(), img_elts));
          nodes.push_back(Node{obj, t, static_cast<int>(ni), qidx, chi.table});
          if (t == psi.table()) return finish(nodes.size() - 1);
        }
      }
    }
    frontier_begin = frontier_end;
    frontier_end = nodes.size();
    if (frontier_begin == frontier_end) break;
  }
  throw contradiction_error(
      "no Alperin decomposition found; this falsifies saturation or the implementation");
}

}  // namespace fuskit
