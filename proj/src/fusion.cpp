#include "fuskit/fusion.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "fuskit/errors.hpp"

namespace fuskit {

namespace {

// b after a on a common object table: (b . a)(x) = b(a(x)).
std::vector<Perm> compose_tables(const Subgroup& mid, const std::vector<Perm>& b,
                                 const std::vector<Perm>& a) {
  std::vector<Perm> out;
  out.reserve(a.size());
  for (const Perm& y : a) out.push_back(b[static_cast<size_t>(mid.element_index(y))]);
  return out;
}

}  // namespace

const Subgroup& FusionMorphism::domain() const { return system_->object(dom_); }
const Subgroup& FusionMorphism::codomain() const { return system_->object(cod_); }
const Subgroup& FusionMorphism::image() const { return system_->object(img_); }

Perm FusionMorphism::apply(const Perm& x) const {
  int i = domain().element_index(x);
  if (i < 0) throw precondition_error("element not in morphism domain");
  return table_[static_cast<size_t>(i)];
}

GroupHom FusionMorphism::as_hom() const {
  return GroupHom::from_table(domain(), codomain(), table_);
}

bool FusionMorphism::is_identity_map() const { return table_ == domain().elements(); }

FusionSystem::FusionSystem(int p, Subgroup s, std::optional<Subgroup> conj_source,
                           std::optional<std::map<int, std::vector<MorphAtom>>> fixed_atoms,
                           Caps caps)
    : p_(p),
      caps_(caps),
      s_(std::move(s)),
      conj_source_(std::move(conj_source)),
      fixed_atoms_(std::move(fixed_atoms)) {
  if (!is_prime(static_cast<uint64_t>(p_))) throw precondition_error("p must be prime");
  if (!s_.is_trivial()) {
    int sp = p_group_prime(s_);
    if (sp != p_) throw precondition_error("S is not a p-group for the given prime");
  }
  if (conj_source_ && !conj_source_->contains_subgroup(s_))
    throw precondition_error("conjugating group must contain S");
  objects_ = enumerate_subgroups(s_, caps_);
  for (size_t i = 0; i < objects_.size(); ++i)
    object_index_.emplace(objects_[i].elements(), static_cast<int>(i));
  incl_.assign(objects_.size(), std::vector<char>(objects_.size(), 0));
  for (size_t a = 0; a < objects_.size(); ++a)
    for (size_t b = 0; b < objects_.size(); ++b)
      incl_[a][b] = objects_[b].contains_subgroup(objects_[a]) ? 1 : 0;
}

const Subgroup& FusionSystem::realizing_group() const {
  if (!conj_source_) throw precondition_error("fusion system is not group-realized");
  return *conj_source_;
}

int FusionSystem::object_index(const Subgroup& p) const {
  auto it = object_index_.find(p.elements());
  if (it == object_index_.end())
    throw precondition_error("subgroup is not a subgroup of S");
  return it->second;
}

int FusionSystem::join_index(int a, int b) const {
  return object_index(join(objects_[static_cast<size_t>(a)], objects_[static_cast<size_t>(b)]));
}

std::vector<MorphAtom> FusionSystem::conjugation_atoms(const Subgroup& source, int dom) const {
  const Subgroup& p = objects_[static_cast<size_t>(dom)];
  const std::vector<Perm>& els = source.elements();
  // Left cosets of C_source(P) carry exactly one restriction each.
  std::vector<Perm> cent;
  for (const Perm& g : els) {
    bool ok = true;
    for (const Perm& x : p.generators())
      if (!(g * x == x * g)) {
        ok = false;
        break;
      }
    if (ok) cent.push_back(g);
  }
  std::vector<char> visited(els.size(), 0);
  std::vector<MorphAtom> out;
  for (size_t gi = 0; gi < els.size(); ++gi) {
    if (visited[gi]) continue;
    const Perm& g = els[gi];
    for (const Perm& c : cent)
      visited[static_cast<size_t>(source.element_index(g * c))] = 1;
    Perm ginv = g.inverse();
    bool inside = true;
    for (const Perm& x : p.generators())
      if (!s_.contains(g * x * ginv)) {
        inside = false;
        break;
      }
    if (!inside) continue;
    std::vector<Perm> table;
    table.reserve(p.order());
    for (const Perm& x : p.elements()) table.push_back(g * x * ginv);
    std::vector<Perm> img_elts = table;
    std::sort(img_elts.begin(), img_elts.end());
    auto it = object_index_.find(img_elts);
    if (it == object_index_.end())
      throw contradiction_error("conjugate of an object escaped the object table");
    out.push_back(MorphAtom{dom, it->second, std::move(table)});
  }
  std::sort(out.begin(), out.end(),
            [](const MorphAtom& a, const MorphAtom& b) { return a.table < b.table; });
  return out;
}

const std::vector<MorphAtom>& FusionSystem::atoms(int dom) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = atom_cache_.find(dom);
    if (it != atom_cache_.end()) return it->second;
  }
  std::vector<MorphAtom> computed;
  if (fixed_atoms_) {
    auto it = fixed_atoms_->find(dom);
    if (it != fixed_atoms_->end()) computed = it->second;
  } else {
    computed = conjugation_atoms(*conj_source_, dom);
  }
  std::lock_guard<std::mutex> lock(mu_);
  return atom_cache_.emplace(dom, std::move(computed)).first->second;
}

const std::vector<MorphAtom>& FusionSystem::s_atoms(int dom) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = s_atom_cache_.find(dom);
    if (it != s_atom_cache_.end()) return it->second;
  }
  std::vector<MorphAtom> computed = conjugation_atoms(s_, dom);
  std::lock_guard<std::mutex> lock(mu_);
  return s_atom_cache_.emplace(dom, std::move(computed)).first->second;
}

namespace {
bool table_in(const std::vector<MorphAtom>& atoms, const std::vector<Perm>& table) {
  auto it = std::lower_bound(atoms.begin(), atoms.end(), table,
                             [](const MorphAtom& a, const std::vector<Perm>& t) {
                               return a.table < t;
                             });
  return it != atoms.end() && it->table == table;
}
}  // namespace

bool FusionSystem::has_atom(int dom, const std::vector<Perm>& table) const {
  return table_in(atoms(dom), table);
}

bool FusionSystem::has_s_atom(int dom, const std::vector<Perm>& table) const {
  return table_in(s_atoms(dom), table);
}

std::vector<FusionMorphism> FusionSystem::hom_set(int dom, int cod) const {
  auto self = shared_from_this();
  std::vector<FusionMorphism> out;
  for (const MorphAtom& a : atoms(dom))
    if (incl_[static_cast<size_t>(a.img)][static_cast<size_t>(cod)])
      out.emplace_back(self, dom, cod, a.img, a.table);
  return out;
}

std::vector<FusionMorphism> FusionSystem::hom_set(const Subgroup& p, const Subgroup& q) const {
  return hom_set(object_index(p), object_index(q));
}

std::vector<FusionMorphism> FusionSystem::aut_f(int p) const {
  auto self = shared_from_this();
  std::vector<FusionMorphism> out;
  for (const MorphAtom& a : atoms(p))
    if (a.img == p) out.emplace_back(self, p, p, p, a.table);
  return out;
}

std::vector<FusionMorphism> FusionSystem::aut_f(const Subgroup& p) const {
  return aut_f(object_index(p));
}

OutFRealization FusionSystem::out_f(int pi) const {
  const Subgroup& p = objects_[static_cast<size_t>(pi)];
  std::vector<std::vector<Perm>> auts;
  for (const MorphAtom& a : atoms(pi))
    if (a.img == pi) auts.push_back(a.table);
  std::map<std::vector<Perm>, int> aut_index;
  for (size_t i = 0; i < auts.size(); ++i) aut_index.emplace(auts[i], static_cast<int>(i));

  std::vector<std::vector<Perm>> inn;
  {
    std::set<std::vector<Perm>> seen;
    for (const Perm& x : p.elements()) {
      std::vector<Perm> t;
      t.reserve(p.order());
      Perm xi = x.inverse();
      for (const Perm& e : p.elements()) t.push_back(x * e * xi);
      if (seen.insert(t).second) inn.push_back(std::move(t));
    }
  }

  std::vector<int> coset_of(auts.size(), -1);
  std::vector<int> reps;
  for (size_t i = 0; i < auts.size(); ++i) {
    if (coset_of[i] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(i));
    for (const auto& iota : inn) {
      std::vector<Perm> member = compose_tables(p, auts[i], iota);
      auto it = aut_index.find(member);
      if (it == aut_index.end())
        throw contradiction_error("inner automorphism missing from Aut_F(P)");
      coset_of[static_cast<size_t>(it->second)] = c;
    }
  }
  size_t ncosets = reps.size();
  if (ncosets > caps_.out_realize_cap)
    throw cap_exceeded("out_realize_cap", caps_.out_realize_cap, "Out_F(P) realization");

  std::vector<Perm> gens;
  for (const auto& alpha : auts) {
    std::vector<int> im(ncosets);
    for (size_t c = 0; c < ncosets; ++c) {
      std::vector<Perm> prod = compose_tables(p, alpha, auts[static_cast<size_t>(reps[c])]);
      im[c] = coset_of[static_cast<size_t>(aut_index.at(prod))];
    }
    gens.push_back(Perm::from_images(std::move(im)));
  }
  PermGroupPtr grp = group_from_generators(std::move(gens), static_cast<int>(ncosets));
  if (grp->order() != ncosets)
    throw contradiction_error("coset action of Aut_F(P) on Out_F(P) has the wrong order");
  return OutFRealization{std::move(grp), std::move(coset_of)};
}

OutFRealization FusionSystem::out_f(const Subgroup& p) const { return out_f(object_index(p)); }

const std::vector<std::vector<int>>& FusionSystem::f_conjugacy_classes() const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (classes_) return *classes_;
  }
  size_t n = objects_.size();
  std::vector<int> parent(n);
  for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (size_t i = 0; i < n; ++i)
    for (const MorphAtom& a : atoms(static_cast<int>(i))) {
      int ra = find(static_cast<int>(i)), rb = find(a.img);
      if (ra != rb) parent[static_cast<size_t>(std::max(ra, rb))] = std::min(ra, rb);
    }
  std::map<int, std::vector<int>> by_root;
  for (size_t i = 0; i < n; ++i) by_root[find(static_cast<int>(i))].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> classes;
  std::vector<int> class_id(n, -1);
  for (auto& [root, members] : by_root) {
    for (int m : members) class_id[static_cast<size_t>(m)] = static_cast<int>(classes.size());
    classes.push_back(std::move(members));
  }
  std::lock_guard<std::mutex> lock(mu_);
  if (!classes_) {
    classes_ = std::move(classes);
    class_id_ = std::move(class_id);
  }
  return *classes_;
}

const std::vector<int>& FusionSystem::class_of(int object) const {
  const auto& cls = f_conjugacy_classes();
  return cls[static_cast<size_t>((*class_id_)[static_cast<size_t>(object)])];
}

const Subgroup& FusionSystem::centralizer_in_s(int object) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cs_cache_.find(object);
    if (it != cs_cache_.end()) return it->second;
  }
  Subgroup c = centralizer(s_, objects_[static_cast<size_t>(object)]);
  std::lock_guard<std::mutex> lock(mu_);
  return cs_cache_.emplace(object, std::move(c)).first->second;
}

const Subgroup& FusionSystem::normalizer_in_s(int object) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ns_cache_.find(object);
    if (it != ns_cache_.end()) return it->second;
  }
  Subgroup c = normalizer(s_, objects_[static_cast<size_t>(object)]);
  std::lock_guard<std::mutex> lock(mu_);
  return ns_cache_.emplace(object, std::move(c)).first->second;
}

FullnessStatus FusionSystem::fullness_status(int object) const {
  size_t cs = centralizer_in_s(object).order();
  size_t ns = normalizer_in_s(object).order();
  bool fc = true, fn = true;
  for (int j : class_of(object)) {
    fc = fc && centralizer_in_s(j).order() <= cs;
    fn = fn && normalizer_in_s(j).order() <= ns;
  }
  return FullnessStatus{fc, fn};
}

FullnessStatus FusionSystem::fullness_status(const Subgroup& p) const {
  return fullness_status(object_index(p));
}

uint64_t FusionSystem::aut_s_order(int object) const {
  return normalizer_in_s(object).order() / centralizer_in_s(object).order();
}

SaturationReport FusionSystem::check_saturation() const {
  SaturationReport rep;
  auto self = shared_from_this();
  int n = static_cast<int>(objects_.size());
  int s_idx = n - 1;

  for (int i = 0; i < n; ++i) {
    FullnessStatus fs = fullness_status(i);
    if (!fs.fully_normalized) continue;
    if (!fs.fully_centralized)
      rep.axiom_I_failures.emplace_back(i, "fully normalized but not fully centralized");
    uint64_t aut_s = aut_s_order(i);
    uint64_t aut_f_n = static_cast<uint64_t>(aut_f(i).size());
    if (aut_s != p_part(aut_f_n, p_))
      rep.axiom_I_failures.emplace_back(
          i, "Aut_S(P) has order " + std::to_string(aut_s) + " but the " +
                 std::to_string(p_) + "-part of |Aut_F(P)| = " + std::to_string(aut_f_n) +
                 " differs");
  }

  for (int dom = 0; dom < n; ++dom) {
    const Subgroup& p = objects_[static_cast<size_t>(dom)];
    for (const MorphAtom& a : atoms(dom)) {
      if (!fullness_status(a.img).fully_centralized) continue;
      const Subgroup& img = objects_[static_cast<size_t>(a.img)];
      // Inverse lookup of the atom table.
      std::map<Perm, int> inv;
      for (size_t i = 0; i < a.table.size(); ++i)
        inv.emplace(a.table[i], static_cast<int>(i));
      std::vector<Perm> n_phi_elems;
      for (const Perm& g : normalizer_in_s(dom).elements()) {
        Perm gi = g.inverse();
        std::vector<Perm> m;
        m.reserve(img.order());
        bool ok = true;
        for (const Perm& y : img.elements()) {
          int xi = inv.at(y);
          Perm z = g * p.elements()[static_cast<size_t>(xi)] * gi;
          int zi = p.element_index(z);
          if (zi < 0) {
            ok = false;
            break;
          }
          m.push_back(a.table[static_cast<size_t>(zi)]);
        }
        if (ok && has_s_atom(a.img, m)) n_phi_elems.push_back(g);
      }
      Subgroup n_phi = Subgroup::from_elements(s_.ambient(), std::move(n_phi_elems));
      int nphi_idx = object_index(n_phi);
      bool extended = false;
      std::optional<FusionMorphism> ext;
      for (const MorphAtom& psi : atoms(nphi_idx)) {
        bool matches = true;
        for (size_t i = 0; i < p.order() && matches; ++i) {
          int j = n_phi.element_index(p.elements()[i]);
          matches = psi.table[static_cast<size_t>(j)] == a.table[i];
        }
        if (matches) {
          extended = true;
          ext = FusionMorphism(self, nphi_idx, s_idx, psi.img, psi.table);
          break;
        }
      }
      if (!extended)
        rep.axiom_II_failures.push_back(ExtensionProblem{
            FusionMorphism(self, dom, s_idx, a.img, a.table), std::move(n_phi), std::nullopt});
      (void)ext;
    }
  }
  rep.saturated = rep.axiom_I_failures.empty() && rep.axiom_II_failures.empty();
  return rep;
}

FusionSystemPtr fusion_from_group(const PermGroupPtr& g, int p, const Caps& caps) {
  Subgroup whole = Subgroup::whole(g, caps.element_cap);
  Subgroup s = sylow_subgroup(whole, p);
  return FusionSystemPtr(
      new FusionSystem(p, std::move(s), std::move(whole), std::nullopt, caps));
}

FusionSystemPtr fusion_from_group_at(const PermGroupPtr& g, const Subgroup& sylow, int p,
                                     const Caps& caps) {
  Subgroup whole = Subgroup::whole(g, caps.element_cap);
  if (!whole.contains_subgroup(sylow))
    throw precondition_error("given Sylow subgroup is not inside the group");
  if (sylow.order() != p_part(whole.order(), p))
    throw precondition_error("subgroup is not a Sylow p-subgroup");
  return FusionSystemPtr(new FusionSystem(p, sylow, std::move(whole), std::nullopt, caps));
}

FusionSystemPtr inner_fusion_system(const Subgroup& s, const Caps& caps) {
  int p = s.is_trivial() ? 2 : p_group_prime(s);
  if (p == 0) throw precondition_error("S must be a p-group");
  return FusionSystemPtr(new FusionSystem(p, s, s, std::nullopt, caps));
}

FusionSystemPtr fusion_from_atoms(const Subgroup& s, int p,
                                  std::map<int, std::vector<MorphAtom>> atoms, const Caps& caps) {
  for (auto& [dom, list] : atoms)
    std::sort(list.begin(), list.end(),
              [](const MorphAtom& a, const MorphAtom& b) { return a.table < b.table; });
  return FusionSystemPtr(new FusionSystem(p, s, std::nullopt, std::move(atoms), caps));
}

FusionSystemPtr generate_fusion_system(const Subgroup& s, const std::vector<GroupHom>& gens,
                                       const Caps& caps) {
  FusionSystemPtr inner = inner_fusion_system(s, caps);
  int p = inner->prime();
  size_t total = 0;
  std::map<int, std::set<std::vector<Perm>>> known;
  std::deque<MorphAtom> queue;
  std::vector<MorphAtom> all;

  auto add = [&](int dom, std::vector<Perm> table) {
    auto& set = known[dom];
    if (!set.insert(table).second) return;
    if (++total > caps.morphism_cap)
      throw cap_exceeded("morphism_cap", caps.morphism_cap, "fusion closure diverged");
    std::vector<Perm> img_elts = table;
    std::sort(img_elts.begin(), img_elts.end());
    int img = inner->object_index(Subgroup::from_elements(s.ambient(), img_elts));
    MorphAtom a{dom, img, std::move(table)};
    queue.push_back(a);
    all.push_back(std::move(a));
  };

  for (int i = 0; i < static_cast<int>(inner->objects().size()); ++i)
    for (const MorphAtom& a : inner->atoms(i)) add(i, a.table);
  for (const GroupHom& h : gens) {
    if (!s.contains_subgroup(h.domain()) || !s.contains_subgroup(h.image_subgroup()))
      throw precondition_error("generating morphisms must map subgroups of S into S");
    add(inner->object_index(h.domain()), h.table());
  }

  while (!queue.empty()) {
    MorphAtom a = std::move(queue.front());
    queue.pop_front();
    const Subgroup& dom = inner->object(a.dom);
    const Subgroup& img = inner->object(a.img);
    // Inverse of the isomorphism onto the image.
    {
      std::vector<Perm> t(img.order(), Perm(s.degree()));
      for (size_t i = 0; i < a.table.size(); ++i)
        t[static_cast<size_t>(img.element_index(a.table[i]))] = dom.elements()[i];
      add(a.img, std::move(t));
    }
    // Restrictions to proper subobjects.
    for (int r = 0; r < static_cast<int>(inner->objects().size()); ++r) {
      if (r == a.dom || !inner->object_leq(r, a.dom)) continue;
      const Subgroup& sub = inner->object(r);
      std::vector<Perm> t;
      t.reserve(sub.order());
      for (const Perm& x : sub.elements())
        t.push_back(a.table[static_cast<size_t>(dom.element_index(x))]);
      add(r, std::move(t));
    }
    // Compositions with everything seen so far (later atoms pair when popped).
    size_t snapshot = all.size();
    for (size_t bi = 0; bi < snapshot; ++bi) {
      MorphAtom b = all[bi];
      if (b.dom == a.img) add(a.dom, compose_tables(inner->object(b.dom), b.table, a.table));
      if (a.dom == b.img) add(b.dom, compose_tables(dom, a.table, b.table));
    }
  }

  std::map<int, std::vector<MorphAtom>> final_atoms;
  for (const MorphAtom& a : all) final_atoms[a.dom].push_back(a);
  return fusion_from_atoms(s, p, std::move(final_atoms), caps);
}

}  // namespace fuskit
