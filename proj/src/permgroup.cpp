#include "fuskit/permgroup.hpp"

#include <algorithm>

#include "fuskit/errors.hpp"

namespace fuskit {

StabChain::StabChain(int degree, const std::vector<Perm>& gens) : degree_(degree) {
  for (const Perm& g : gens) {
    if (g.degree() != degree) throw precondition_error("generator degree mismatch");
    add_generator(g, 0);
  }
}

void StabChain::rebuild_orbit(size_t level) {
  Level& lv = levels_[level];
  lv.transversal.clear();
  lv.transversal.emplace(lv.base, Perm(degree_));
  std::vector<int> frontier{lv.base};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int p : frontier) {
      const Perm& u = lv.transversal.at(p);
      for (const Perm& g : lv.gens) {
        int q = g.apply(p);
        if (!lv.transversal.count(q)) {
          lv.transversal.emplace(q, g * u);
          next.push_back(q);
        }
      }
    }
    frontier = std::move(next);
  }
}

void StabChain::add_generator(const Perm& g, size_t level) {
  if (g.is_identity()) return;
  // Membership pre-test: a full sift to the identity proves g is already a
  // product of transversal elements. A failed sift proves nothing during
  // construction, so g is then added at its arrival level, which keeps the
  // invariant that level-i generators generate the full prefix stabilizer.
  {
    Perm r = g;
    size_t at = level;
    bool stuck = false;
    while (at < levels_.size()) {
      const Level& lv = levels_[at];
      auto it = lv.transversal.find(r.apply(lv.base));
      if (it == lv.transversal.end()) {
        stuck = true;
        break;
      }
      r = it->second.inverse() * r;
      ++at;
    }
    if (!stuck && r.is_identity()) return;
  }
  if (level == levels_.size()) {
    int base = 0;
    while (g.apply(base) == base) ++base;
    levels_.push_back(Level{base, {}, {}});
  }
  Level& lv = levels_[level];
  if (std::find(lv.gens.begin(), lv.gens.end(), g) != lv.gens.end()) return;
  lv.gens.push_back(g);
  rebuild_orbit(level);
  // Close the level: every Schreier generator must sift to identity below.
  // Collect them first; the recursion below may grow levels_.
  std::vector<Perm> schreier;
  {
    const Level& cur = levels_[level];
    for (const auto& [point, u] : cur.transversal) {
      for (const Perm& h : cur.gens) {
        const Perm& v = cur.transversal.at(h.apply(point));
        schreier.push_back(v.inverse() * h * u);
      }
    }
  }
  for (const Perm& s : schreier) add_generator(s, level + 1);
}

uint64_t StabChain::order() const {
  uint64_t n = 1;
  for (const Level& lv : levels_) n *= lv.transversal.size();
  return n;
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  Perm r = g;
  for (const Level& lv : levels_) {
    auto it = lv.transversal.find(r.apply(lv.base));
    if (it == lv.transversal.end()) return false;
    r = it->second.inverse() * r;
  }
  return r.is_identity();
}

std::vector<Perm> StabChain::elements(size_t cap) const {
  if (order() > cap) throw cap_exceeded("element_cap", cap, "group too large to materialize");
  std::vector<Perm> out{Perm(degree_)};
  // Walk levels deepest-first: elements factor as u_0 * u_1 * ... * u_k.
  for (size_t i = levels_.size(); i-- > 0;) {
    std::vector<Perm> next;
    next.reserve(out.size() * levels_[i].transversal.size());
    for (const auto& [point, u] : levels_[i].transversal)
      for (const Perm& tail : out) next.push_back(u * tail);
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators) : degree_(degree) {
  if (degree < 1) throw precondition_error("group degree must be >= 1");
  for (const Perm& g : generators) {
    if (g.degree() != degree) throw precondition_error("generator degree mismatch");
    if (!g.is_identity()) generators_.push_back(g);
  }
}

const StabChain& PermGroup::chain() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!chain_) chain_ = std::make_unique<StabChain>(degree_, generators_);
  return *chain_;
}

uint64_t PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Perm& g) const {
  return g.degree() == degree_ && chain().contains(g);
}

const std::vector<Perm>& PermGroup::elements(size_t cap) const {
  const StabChain& ch = chain();
  std::lock_guard<std::mutex> lock(mu_);
  if (!elements_) elements_ = std::make_unique<std::vector<Perm>>(ch.elements(cap));
  return *elements_;
}

PermGroupPtr group_from_generators(std::vector<Perm> gens, int degree) {
  if (degree < 0) {
    if (gens.empty())
      throw precondition_error("cannot infer degree from an empty generator list");
    degree = gens.front().degree();
  }
  return std::make_shared<const PermGroup>(degree, std::move(gens));
}

}  // namespace fuskit
