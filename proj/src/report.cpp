#include "fuskit/report.hpp"

#include <sstream>

namespace fuskit {

json subgroup_json(const Subgroup& s) {
  json gens = json::array();
  for (const Perm& g : s.generators()) gens.push_back(g.cycle_string());
  return json{{"order", s.order()}, {"generators", gens}};
}

json group_json(const std::string& label, const PermGroupPtr& g) {
  json gens = json::array();
  for (const Perm& x : g->generators()) gens.push_back(x.cycle_string());
  return json{{"source", label},
              {"degree", g->degree()},
              {"order", g->order()},
              {"generators", gens}};
}

json morphism_json(const Subgroup& dom, const std::vector<Perm>& table) {
  json d = json::array(), im = json::array();
  for (const Perm& g : dom.generators()) {
    d.push_back(g.cycle_string());
    im.push_back(table[static_cast<size_t>(dom.element_index(g))].cycle_string());
  }
  return json{{"domain_generators", d}, {"images", im}};
}

json morphism_json(const FusionMorphism& m) { return morphism_json(m.domain(), m.table()); }

json fusion_summary_json(const std::string& label, const FusionSystem& f) {
  json out{{"source", label}, {"p", f.prime()}};
  if (f.realized()) out["group_order"] = f.realizing_group().order();
  out["sylow"] = subgroup_json(f.sylow());
  out["objects"] = f.objects().size();
  return out;
}

json saturation_json(const FusionSystem& f, const SaturationReport& rep) {
  json ax1 = json::array();
  for (const auto& [obj, reason] : rep.axiom_I_failures)
    ax1.push_back(json{{"subgroup", subgroup_json(f.object(obj))}, {"reason", reason}});
  json ax2 = json::array();
  for (const ExtensionProblem& e : rep.axiom_II_failures)
    ax2.push_back(json{{"phi", morphism_json(e.phi)}, {"n_phi", subgroup_json(e.n_phi)}});
  return json{{"saturated", rep.saturated},
              {"axiom_I_failures", ax1},
              {"axiom_II_failures", ax2}};
}

json theorem_json(const FusionSystem& f, const TheoremReport& rep) {
  (void)f;
  json hyps = json::array();
  for (const Hypothesis& h : rep.hypotheses)
    hyps.push_back(json{{"name", h.name}, {"holds", h.holds}, {"witness", h.witness}});
  json out{{"hypotheses", hyps},
           {"applicable", rep.applicable},
           {"conclusion_holds", rep.conclusion_holds},
           {"contradiction", rep.contradiction}};
  if (rep.sigma4_free)
    out["sigma4_free"] = *rep.sigma4_free;
  else
    out["sigma4_free"] = nullptr;
  if (!rep.diagnostic.empty()) out["diagnostic"] = rep.diagnostic;
  return out;
}

const char* t_branch_name(TBranch b) {
  switch (b) {
    case TBranch::fpf:
      return "fpf";
    case TBranch::p_group_auts:
      return "p-group-auts";
    default:
      return "none";
  }
}

namespace {

bool is_uniform_object_array(const json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& item : j)
    if (!item.is_object()) return false;
  std::vector<std::string> keys;
  for (auto it = j.front().begin(); it != j.front().end(); ++it) keys.push_back(it.key());
  for (const auto& item : j) {
    std::vector<std::string> k2;
    for (auto it = item.begin(); it != item.end(); ++it) k2.push_back(it.key());
    if (k2 != keys) return false;
  }
  return true;
}

std::string scalar_str(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render(const json& j, const std::string& prefix, std::ostringstream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    if (v.is_object()) {
      os << prefix << it.key() << ":\n";
      render(v, prefix + "  ", os);
    } else if (is_uniform_object_array(v)) {
      os << prefix << it.key() << ":\n";
      std::vector<std::string> keys;
      for (auto kit = v.front().begin(); kit != v.front().end(); ++kit) keys.push_back(kit.key());
      std::vector<size_t> width(keys.size());
      for (size_t c = 0; c < keys.size(); ++c) width[c] = keys[c].size();
      std::vector<std::vector<std::string>> rows;
      for (const auto& item : v) {
        std::vector<std::string> row;
        for (size_t c = 0; c < keys.size(); ++c) {
          row.push_back(scalar_str(item.at(keys[c])));
          width[c] = std::max(width[c], row.back().size());
        }
        rows.push_back(std::move(row));
      }
      os << prefix << "  ";
      for (size_t c = 0; c < keys.size(); ++c)
        os << keys[c] << std::string(width[c] - keys[c].size() + 2, ' ');
      os << "\n";
      for (const auto& row : rows) {
        os << prefix << "  ";
        for (size_t c = 0; c < keys.size(); ++c)
          os << row[c] << std::string(width[c] - row[c].size() + 2, ' ');
        os << "\n";
      }
    } else if (v.is_array()) {
      os << prefix << it.key() << ": " << v.dump() << "\n";
    } else {
      os << prefix << it.key() << ": " << scalar_str(v) << "\n";
    }
  }
}

}  // namespace

std::string render_table(const json& j) {
  std::ostringstream os;
  render(j, "", os);
  return os.str();
}

}  // namespace fuskit
