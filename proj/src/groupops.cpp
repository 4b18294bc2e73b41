#include "fuskit/groupops.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "fuskit/errors.hpp"

namespace fuskit {

uint64_t p_part(uint64_t n, int p) {
  uint64_t q = 1;
  while (n % static_cast<uint64_t>(p) == 0) {
    n /= static_cast<uint64_t>(p);
    q *= static_cast<uint64_t>(p);
  }
  return q;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> prime_divisors(uint64_t n) {
  std::vector<int> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<int>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

std::map<int, size_t> element_order_histogram(const Subgroup& g) {
  std::map<int, size_t> h;
  for (const Perm& x : g.elements()) ++h[x.order()];
  return h;
}

bool is_abelian(const Subgroup& g) {
  const auto& gens = g.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

bool is_normal_in(const Subgroup& g, const Subgroup& n) {
  for (const Perm& x : g.generators())
    for (const Perm& y : n.generators())
      if (!n.contains(conjugated(x, y))) return false;
  return true;
}

int p_group_prime(const Subgroup& s) {
  uint64_t n = s.order();
  if (n == 1) return 0;
  std::vector<int> ps = prime_divisors(n);
  return ps.size() == 1 ? ps.front() : 0;
}

bool is_elementary_abelian(const Subgroup& s) {
  if (s.is_trivial()) return true;
  if (!is_abelian(s)) return false;
  int p = p_group_prime(s);
  if (p == 0) return false;
  for (const Perm& x : s.elements())
    if (!x.is_identity() && x.order() != p) return false;
  return true;
}

Subgroup centralizer(const Subgroup& g, const Subgroup& p) {
  std::vector<Perm> found;
  for (const Perm& x : g.elements()) {
    bool ok = true;
    for (const Perm& y : p.generators()) {
      if (!(x * y == y * x)) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(x);
  }
  return Subgroup::from_elements(g.ambient(), std::move(found));
}

Subgroup normalizer(const Subgroup& g, const Subgroup& p) {
  std::vector<Perm> found;
  for (const Perm& x : g.elements()) {
    bool ok = true;
    for (const Perm& y : p.generators()) {
      if (!p.contains(conjugated(x, y))) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(x);
  }
  return Subgroup::from_elements(g.ambient(), std::move(found));
}

Subgroup sylow_subgroup(const Subgroup& g, int p) {
  if (!is_prime(static_cast<uint64_t>(p))) throw precondition_error("p must be prime");
  uint64_t target = p_part(g.order(), p);
  Subgroup s = Subgroup::trivial(g.ambient());
  while (s.order() < target) {
    Subgroup n = normalizer(g, s);
    // Some gS of order p exists in N_g(S)/S while S is not yet Sylow.
    bool grown = false;
    for (const Perm& x : n.elements()) {
      if (s.contains(x)) continue;
      if (!s.contains(perm_pow(x, p))) continue;
      std::vector<Perm> gens = s.generators();
      gens.push_back(x);
      s = Subgroup(g.ambient(), std::move(gens));
      grown = true;
      break;
    }
    if (!grown)
      throw contradiction_error("normalizer ascent stalled below the full p-part");
  }
  return s;
}

Subgroup sylow_subgroup(const PermGroupPtr& g, int p) {
  return sylow_subgroup(Subgroup::whole(g), p);
}

std::vector<Subgroup> all_sylow_subgroups(const Subgroup& g, int p) {
  Subgroup s0 = sylow_subgroup(g, p);
  std::set<std::vector<Perm>> seen{s0.elements()};
  std::vector<Subgroup> out{s0};
  for (size_t i = 0; i < out.size(); ++i) {
    for (const Perm& x : g.generators()) {
      std::vector<Perm> conj;
      conj.reserve(out[i].order());
      for (const Perm& y : out[i].elements()) conj.push_back(conjugated(x, y));
      std::sort(conj.begin(), conj.end());
      if (seen.insert(conj).second) out.push_back(Subgroup::from_elements(g.ambient(), conj));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> enumerate_subgroups(const Subgroup& p, const Caps& caps) {
  if (p.order() > caps.small_group_cap)
    throw cap_exceeded("small_group_cap", caps.small_group_cap,
                       "subgroup enumeration on a group of order " + std::to_string(p.order()));
  std::set<std::vector<Perm>> seen;
  std::vector<Subgroup> subs;
  auto add = [&](Subgroup s) {
    if (seen.insert(s.elements()).second) subs.push_back(std::move(s));
  };
  add(Subgroup::trivial(p.ambient()));
  for (const Perm& x : p.elements()) add(Subgroup(p.ambient(), {x}));
  // Close under pairwise joins; every subgroup is a join of cyclic ones.
  for (size_t i = 0; i < subs.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      Subgroup s = join(subs[i], subs[j]);
      add(std::move(s));
    }
  }
  std::sort(subs.begin(), subs.end());
  return subs;
}

std::vector<Subgroup> normal_subgroups(const Subgroup& g) {
  // Conjugacy classes, then joins of their normal closures.
  const std::vector<Perm>& els = g.elements();
  std::vector<char> assigned(els.size(), 0);
  std::vector<std::vector<Perm>> classes;
  for (size_t i = 0; i < els.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<Perm> cls{els[i]};
    assigned[i] = 1;
    for (size_t k = 0; k < cls.size(); ++k) {
      for (const Perm& x : g.generators()) {
        Perm y = conjugated(x, cls[k]);
        int idx = g.element_index(y);
        if (idx >= 0 && !assigned[static_cast<size_t>(idx)]) {
          assigned[static_cast<size_t>(idx)] = 1;
          cls.push_back(std::move(y));
        }
      }
    }
    classes.push_back(std::move(cls));
  }
  std::set<std::vector<Perm>> seen;
  std::vector<Subgroup> normals;
  auto add = [&](Subgroup s) {
    if (seen.insert(s.elements()).second) normals.push_back(std::move(s));
  };
  add(Subgroup::trivial(g.ambient()));
  for (const auto& cls : classes) add(Subgroup(g.ambient(), cls, g.order()));
  for (size_t i = 0; i < normals.size(); ++i)
    for (size_t j = 0; j < i; ++j) add(join(normals[i], normals[j]));
  std::sort(normals.begin(), normals.end());
  return normals;
}

Subgroup o_p_prime(const Subgroup& g, int p) {
  Subgroup acc = Subgroup::trivial(g.ambient());
  for (const Subgroup& n : normal_subgroups(g))
    if (n.order() % static_cast<uint64_t>(p) != 0) acc = join(acc, n);
  if (acc.order() % static_cast<uint64_t>(p) == 0)
    throw contradiction_error("join of normal p'-subgroups is not a p'-group");
  return acc;
}

QuotientGroup quotient_group(const Subgroup& g, const Subgroup& n) {
  if (!g.contains_subgroup(n) || !is_normal_in(g, n))
    throw precondition_error("quotient requires a normal subgroup");
  const std::vector<Perm>& els = g.elements();
  // Deterministic coset numbering: scan elements in canonical order.
  std::vector<int> coset_of(els.size(), -1);
  std::vector<Perm> reps;
  for (size_t i = 0; i < els.size(); ++i) {
    if (coset_of[i] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(els[i]);
    for (const Perm& x : n.elements()) {
      int idx = g.element_index(els[i] * x);
      coset_of[static_cast<size_t>(idx)] = c;
    }
  }
  int deg = static_cast<int>(reps.size());
  auto action_of = [&](const Perm& x) {
    std::vector<int> im(static_cast<size_t>(deg));
    for (int c = 0; c < deg; ++c) {
      int idx = g.element_index(x * reps[static_cast<size_t>(c)]);
      im[static_cast<size_t>(c)] = coset_of[static_cast<size_t>(idx)];
    }
    return Perm::from_images(std::move(im));
  };
  std::vector<Perm> qgens;
  for (const Perm& x : g.generators()) qgens.push_back(action_of(x));
  PermGroupPtr q = group_from_generators(std::move(qgens), deg);
  if (q->order() * n.order() != g.order())
    throw contradiction_error("coset action order mismatch");
  std::vector<Perm> table;
  table.reserve(els.size());
  for (const Perm& x : els) table.push_back(action_of(x));
  Subgroup qwhole = Subgroup::whole(q);
  GroupHom proj = GroupHom::from_table_hom(g, qwhole, std::move(table));
  return QuotientGroup{q, std::move(proj)};
}

namespace {

// Backtracking over generator images, pruned by element order and partial
// relation checking. on_found returns false to stop the search.
template <typename Callback>
void image_backtrack(const Subgroup& a, const Subgroup& b, Callback&& on_found) {
  std::vector<Perm> gens = a.generators();
  if (gens.empty()) {
    GroupHom h = GroupHom::build(a, b, {});
    on_found(h);
    return;
  }
  std::vector<std::vector<Perm>> candidates(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    int ord = gens[i].order();
    for (const Perm& y : b.elements())
      if (y.order() == ord) candidates[i].push_back(y);
  }
  std::vector<std::pair<Perm, Perm>> chosen;
  bool stop = false;
  auto rec = [&](auto&& self, size_t level) -> void {
    if (stop) return;
    if (level == gens.size()) {
      auto h = GroupHom::try_build(a, b, chosen);
      if (h && !on_found(*h)) stop = true;
      return;
    }
    // Partial consistency: the map on <g_0..g_level-1> must already be a hom.
    if (level > 0) {
      std::vector<Perm> sub_gens;
      for (const auto& [x, y] : chosen) sub_gens.push_back(x);
      Subgroup part(a.ambient(), sub_gens);
      std::vector<std::pair<Perm, Perm>> part_images = chosen;
      if (!GroupHom::try_build(part, b, part_images)) return;
    }
    for (const Perm& y : candidates[level]) {
      chosen.emplace_back(gens[level], y);
      self(self, level + 1);
      chosen.pop_back();
      if (stop) return;
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<GroupHom> automorphism_group(const Subgroup& p, const Caps& caps) {
  if (p.order() > caps.small_group_cap)
    throw cap_exceeded("small_group_cap", caps.small_group_cap,
                       "automorphism search on a group of order " + std::to_string(p.order()));
  std::vector<GroupHom> out;
  image_backtrack(p, p, [&](const GroupHom& h) {
    if (h.is_bijective()) out.push_back(h);
    return true;
  });
  std::sort(out.begin(), out.end(),
            [](const GroupHom& x, const GroupHom& y) { return x.table() < y.table(); });
  return out;
}

bool isomorphic_to(const Subgroup& a, const Subgroup& b, const Caps& caps) {
  if (a.order() != b.order()) return false;
  if (a.order() > caps.small_group_cap)
    throw cap_exceeded("small_group_cap", caps.small_group_cap,
                       "isomorphism test on groups of order " + std::to_string(a.order()));
  if (is_abelian(a) != is_abelian(b)) return false;
  if (element_order_histogram(a) != element_order_histogram(b)) return false;
  bool found = false;
  image_backtrack(a, b, [&](const GroupHom& h) {
    if (h.is_bijective()) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool isomorphic_to(const PermGroupPtr& a, const PermGroupPtr& b, const Caps& caps) {
  return isomorphic_to(Subgroup::whole(a), Subgroup::whole(b), caps);
}

SemidirectProduct semidirect_product(const PermGroupPtr& v, const PermGroupPtr& h,
                                     const std::vector<GroupHom>& action_on_h_gens) {
  Subgroup vw = Subgroup::whole(v);
  Subgroup hw = Subgroup::whole(h);
  if (action_on_h_gens.size() != h->generators().size())
    throw precondition_error("one action automorphism per complement generator required");
  const std::vector<Perm>& velts = vw.elements();
  int nv = static_cast<int>(velts.size());

  // Realize each automorphism of v as a permutation of v's element indices and
  // verify the assignment extends to a homomorphism h -> Sym(v).
  auto index_perm = [&](const GroupHom& alpha) {
    if (!(alpha.domain() == vw) || !alpha.is_automorphism())
      throw precondition_error("action entries must be automorphisms of the normal part");
    std::vector<int> im(static_cast<size_t>(nv));
    for (int i = 0; i < nv; ++i)
      im[static_cast<size_t>(i)] = vw.element_index(alpha.table()[static_cast<size_t>(i)]);
    return Perm::from_images(std::move(im));
  };
  std::vector<Perm> twist_gens;
  for (const GroupHom& alpha : action_on_h_gens) twist_gens.push_back(index_perm(alpha));
  {
    // Relation check: the generator assignment must extend to a well-defined
    // map on all of h (injectivity is not required of an action).
    std::deque<std::pair<Perm, Perm>> queue;
    std::map<Perm, Perm> table;
    table.emplace(Perm(h->degree()), Perm(nv));
    queue.emplace_back(Perm(h->degree()), Perm(nv));
    while (!queue.empty()) {
      auto [x, fx] = queue.front();
      queue.pop_front();
      for (size_t i = 0; i < twist_gens.size(); ++i) {
        Perm y = x * h->generators()[i];
        Perm fy = fx * twist_gens[i];
        auto it = table.find(y);
        if (it == table.end()) {
          table.emplace(y, fy);
          queue.emplace_back(std::move(y), std::move(fy));
        } else if (!(it->second == fy)) {
          throw precondition_error("action is not a homomorphism");
        }
      }
    }
    if (table.size() != hw.order())
      throw precondition_error("action generators do not match the complement generators");
  }

  int deg = nv + h->degree();
  auto pad = [&](const Perm& vpart, const Perm& hpart) {
    std::vector<int> im(static_cast<size_t>(deg));
    for (int i = 0; i < nv; ++i) im[static_cast<size_t>(i)] = vpart.apply(i);
    for (int i = 0; i < h->degree(); ++i)
      im[static_cast<size_t>(nv + i)] = nv + hpart.apply(i);
    return Perm::from_images(std::move(im));
  };
  auto translation = [&](const Perm& x) {
    // Left translation on v's element list.
    std::vector<int> im(static_cast<size_t>(nv));
    for (int i = 0; i < nv; ++i)
      im[static_cast<size_t>(i)] = vw.element_index(x * velts[static_cast<size_t>(i)]);
    return Perm::from_images(std::move(im));
  };

  std::vector<Perm> gens;
  for (const Perm& x : v->generators()) gens.push_back(pad(translation(x), Perm(h->degree())));
  for (size_t i = 0; i < h->generators().size(); ++i)
    gens.push_back(pad(twist_gens[i], h->generators()[i]));
  PermGroupPtr g = group_from_generators(gens, deg);
  if (g->order() != vw.order() * hw.order())
    throw contradiction_error("semidirect product order mismatch");

  Subgroup gw = Subgroup::whole(g);
  std::vector<Perm> vtab;
  for (const Perm& x : velts) vtab.push_back(pad(translation(x), Perm(h->degree())));
  GroupHom embed_v = GroupHom::from_table(vw, gw, std::move(vtab));
  if (!is_normal_in(gw, embed_v.image_subgroup()))
    throw contradiction_error("embedded normal part is not normal");

  std::vector<std::pair<Perm, Perm>> h_gen_images;
  for (size_t i = 0; i < h->generators().size(); ++i)
    h_gen_images.emplace_back(h->generators()[i], pad(twist_gens[i], h->generators()[i]));
  GroupHom embed_h = GroupHom::build(hw, gw, h_gen_images);

  return SemidirectProduct{g, std::move(embed_v), std::move(embed_h)};
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b,
                             const Subgroup& closure_under) {
  std::vector<Perm> gens;
  for (const Perm& x : a.generators())
    for (const Perm& y : b.generators())
      gens.push_back(x.inverse() * y.inverse() * x * y);
  // Normal closure under the given group.
  Subgroup s(a.ambient(), gens);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Perm> extra;
    for (const Perm& x : s.generators())
      for (const Perm& c : closure_under.generators()) {
        Perm y = conjugated(c, x);
        if (!s.contains(y)) extra.push_back(y);
      }
    if (!extra.empty()) {
      std::vector<Perm> all = s.generators();
      all.insert(all.end(), extra.begin(), extra.end());
      s = Subgroup(a.ambient(), std::move(all));
      changed = true;
    }
  }
  return s;
}

NilpotencyData nilpotency_data(const Subgroup& g) {
  NilpotencyData out;
  out.lower_central_series.push_back(g);
  while (true) {
    const Subgroup& prev = out.lower_central_series.back();
    Subgroup next = commutator_subgroup(prev, g, g);
    if (next == prev) break;
    out.lower_central_series.push_back(next);
    if (next.is_trivial()) break;
  }
  out.nilpotent = out.lower_central_series.back().is_trivial();
  // Cross-check: nilpotent iff every Sylow subgroup is normal.
  bool sylow_criterion = true;
  for (int p : prime_divisors(g.order()))
    if (!is_normal_in(g, sylow_subgroup(g, p))) {
      sylow_criterion = false;
      break;
    }
  if (sylow_criterion != out.nilpotent)
    throw contradiction_error("lower central series disagrees with the Sylow product criterion");
  return out;
}

CharacteristicSubgroups characteristic_subgroups(const Subgroup& s, const Caps& caps) {
  int p = p_group_prime(s);
  if (p == 0 && !s.is_trivial()) throw precondition_error("not a p-group");
  auto omega = [&](const Subgroup& a) {
    std::vector<Perm> gens;
    for (const Perm& x : a.elements())
      if (x.order() == p) gens.push_back(x);
    return gens.empty() ? Subgroup::trivial(s.ambient()) : Subgroup(s.ambient(), gens);
  };
  Subgroup z = center(s);
  Subgroup omega_z = s.is_trivial() ? z : omega(z);
  // Thompson subgroup: join of the elementary abelian subgroups of maximal order.
  std::vector<Subgroup> subs = enumerate_subgroups(s, caps);
  size_t max_ea = 1;
  for (const Subgroup& q : subs)
    if (is_elementary_abelian(q)) max_ea = std::max(max_ea, q.order());
  Subgroup j = Subgroup::trivial(s.ambient());
  for (const Subgroup& q : subs)
    if (q.order() == max_ea && is_elementary_abelian(q)) j = join(j, q);
  Subgroup zj = centralizer(j, j);
  Subgroup omega_zj = s.is_trivial() ? zj : omega(zj);
  if (!omega_zj.contains_subgroup(omega_z))
    throw contradiction_error("sandwich Omega(Z(S)) <= Omega(Z(J(S))) failed");
  return CharacteristicSubgroups{std::move(z), std::move(omega_z), std::move(j),
                                 std::move(omega_zj)};
}

}  // namespace fuskit
