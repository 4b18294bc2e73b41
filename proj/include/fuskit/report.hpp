#pragma once

#include <json.hpp>

#include "fuskit/fusion.hpp"
#include "fuskit/theorems.hpp"

namespace fuskit {

using json = nlohmann::ordered_json;

json subgroup_json(const Subgroup& s);
json group_json(const std::string& label, const PermGroupPtr& g);
json morphism_json(const Subgroup& dom, const std::vector<Perm>& table);
json morphism_json(const FusionMorphism& m);
json fusion_summary_json(const std::string& label, const FusionSystem& f);
json saturation_json(const FusionSystem& f, const SaturationReport& rep);
json theorem_json(const FusionSystem& f, const TheoremReport& rep);

/// Plain-text rendering of a report: scalars as key/value lines, arrays of
/// uniform objects as aligned tables.
std::string render_table(const json& j);

const char* t_branch_name(TBranch b);

}  // namespace fuskit
