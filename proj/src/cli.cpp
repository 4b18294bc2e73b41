#include "fuskit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>

#include "fuskit/analysis.hpp"
#include "fuskit/catalog.hpp"
#include "fuskit/errors.hpp"
#include "fuskit/groupfile.hpp"
#include "fuskit/report.hpp"

namespace fuskit {

namespace {

struct Ctx {
  std::string format = "json";
  Caps caps;
  std::ostream* out = nullptr;
};

void emit(const Ctx& ctx, const json& j) {
  if (ctx.format == "table")
    *ctx.out << render_table(j);
  else
    *ctx.out << j.dump(2) << "\n";
}

struct FusionChoice {
  std::string label;
  FusionSystemPtr system;
};

FusionChoice resolve_fusion(const std::string& fusion_spec, const std::string& group_spec,
                            int p, bool inner, const Caps& caps) {
  if (!fusion_spec.empty()) {
    std::string kind, rest = fusion_spec;
    std::string src;
    int pp = -1;
    size_t eq = rest.find('=');
    if (eq == std::string::npos) throw parse_error("--fusion expects group=<src>,p=<prime> or inner=<src>");
    kind = rest.substr(0, eq);
    rest = rest.substr(eq + 1);
    if (kind == "inner") {
      src = rest;
    } else if (kind == "group") {
      size_t comma = rest.rfind(",p=");
      if (comma == std::string::npos) throw parse_error("--fusion group=<src>,p=<prime>");
      src = rest.substr(0, comma);
      pp = std::stoi(rest.substr(comma + 3));
    } else {
      throw parse_error("--fusion kind must be group or inner");
    }
    GroupSource g = parse_group_source(src);
    if (kind == "inner")
      return FusionChoice{"inner=" + src, inner_fusion_system(Subgroup::whole(g.group, caps.element_cap), caps)};
    return FusionChoice{"group=" + src + ",p=" + std::to_string(pp),
                        fusion_from_group(g.group, pp, caps)};
  }
  if (group_spec.empty()) throw parse_error("a group source is required (--group or --fusion)");
  GroupSource g = parse_group_source(group_spec);
  if (inner)
    return FusionChoice{"inner=" + group_spec,
                        inner_fusion_system(Subgroup::whole(g.group, caps.element_cap), caps)};
  if (p <= 0) throw parse_error("--p <prime> is required for a conjugation fusion system");
  return FusionChoice{"group=" + group_spec + ",p=" + std::to_string(p),
                      fusion_from_group(g.group, p, caps)};
}

std::vector<std::pair<Perm, Perm>> parse_image_pairs(const std::string& text, int degree) {
  std::vector<std::pair<Perm, Perm>> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ';')) {
    if (piece.find_first_not_of(" \t") == std::string::npos) continue;
    size_t arrow = piece.find("->");
    if (arrow == std::string::npos) throw parse_error("expected lhs->rhs in: " + piece);
    out.emplace_back(parse_cycles(piece.substr(0, arrow), degree),
                     parse_cycles(piece.substr(arrow + 2), degree));
  }
  if (out.empty()) throw parse_error("empty generator-image list");
  return out;
}

FusionAut parse_fusion_aut(const FusionSystemPtr& f, const std::string& text) {
  auto pairs = parse_image_pairs(text, f->sylow().degree());
  GroupHom h = GroupHom::build(f->sylow(), f->sylow(), pairs);
  return FusionAut(f, std::move(h));
}

json object_flags_json(const FusionSystem& f, int i) {
  const Subgroup& p = f.object(i);
  FullnessStatus fs = f.fullness_status(i);
  json gens = json::array();
  for (const Perm& g : p.generators()) gens.push_back(g.cycle_string());
  return json{{"index", i},
              {"order", p.order()},
              {"generators", gens},
              {"centric", is_centric(f, i)},
              {"radical", is_radical(f, i)},
              {"fully_normalized", fs.fully_normalized},
              {"fully_centralized", fs.fully_centralized},
              {"weakly_closed", is_weakly_closed(f, i)},
              {"normal_in_F", is_normal_in_F(f, i)},
              {"aut_f_order", f.aut_f(i).size()}};
}

int theorem_exit(const TheoremReport& rep) {
  if (rep.contradiction) return 3;
  return rep.applicable ? 0 : 2;
}

json check_entry(const std::string& name, const json& expected, const json& actual) {
  return json{{"name", name}, {"expected", expected}, {"actual", actual},
              {"pass", expected == actual}};
}

int emit_example_report(const Ctx& ctx, const std::string& name, json checks) {
  bool all = true;
  for (const auto& c : checks)
    if (!c.at("pass").get<bool>()) all = false;
  json j{{"schema", 1}, {"command", "examples"}, {"name", name}, {"checks", checks},
         {"all_pass", all}};
  emit(ctx, j);
  return all ? 0 : 3;
}

int run_example_l217(const Ctx& ctx) {
  auto g = make_named_group("psl2(17)");
  auto f = fusion_from_group(g, 2, ctx.caps);
  json checks = json::array();
  checks.push_back(check_entry("group order", 2448, g->order()));
  checks.push_back(check_entry("sylow order", 16, f->sylow().order()));
  checks.push_back(check_entry(
      "sylow isomorphic to dihedral(16)", true,
      isomorphic_to(f->sylow(), Subgroup::whole(make_named_group("dihedral(16)")), ctx.caps)));
  checks.push_back(check_entry("saturated", true, f->check_saturation().saturated));
  checks.push_back(check_entry("nilpotent fusion", false, is_nilpotent_fusion(*f)));
  bool all2 = true;
  for (int i = 0; i < static_cast<int>(f->objects().size()); ++i) {
    if (f->normalizer_in_s(i).order() != f->sylow().order()) continue;
    uint64_t n = f->aut_f(i).size();
    all2 = all2 && p_part(n, 2) == n;
  }
  checks.push_back(check_entry("Aut_F(Q) a 2-group for every normal Q <= S", true, all2));
  auto s4 = make_named_group("sym(4)");
  HFreeReport hf = is_H_free(f, s4);
  checks.push_back(check_entry("Sigma4-free", false, hf.free));
  checks.push_back(check_entry("witness is a Klein four subgroup", true,
                               hf.witness_object.has_value() &&
                                   f->object(*hf.witness_object).order() == 4 &&
                                   is_elementary_abelian(f->object(*hf.witness_object))));
  checks.push_back(check_entry("witness model isomorphic to Sigma4", true,
                               hf.witness_model && isomorphic_to(hf.witness_model, s4, ctx.caps)));
  TheoremReport rep = check_theorem_A(f, FusionAutGroup::trivial(f));
  checks.push_back(check_entry("theorem A applicable", false, rep.applicable));
  checks.push_back(check_entry("theorem A contradiction", false, rep.contradiction));
  return emit_example_report(ctx, "l217", std::move(checks));
}

int run_example_fpf(const Ctx& ctx, const std::string& name) {
  FpfExample ex = make_fpf_example(name);
  json checks = json::array();
  size_t fixed = ex.automorphism.fixed_points().size();
  int p = prime_divisors(ex.group->order()).front();
  if (name == "a4_conj12") {
    p = 3;
    checks.push_back(check_entry("phi fixes a nontrivial element of G", true, fixed > 1));
  } else {
    checks.push_back(check_entry("phi is fixed-point-free on G", true, fixed == 1));
  }
  InducedFusionAut ind = induced_fusion_aut_from_group(ex.group, ex.automorphism, p, ctx.caps);
  checks.push_back(check_entry("induced fusion automorphism is fixed-point-free", true,
                               is_fpf_fusion_aut(ind.aut)));
  if (name == "a4_conj12")
    checks.push_back(check_entry("invariant Sylow 3-subgroup order", 3, ind.sylow.order()));
  if (fixed == 1)
    checks.push_back(check_entry("invariant Sylow is unique", 1, ind.invariant_sylow_count));
  TheoremReport rep = check_theorem_B(ind.system, ind.aut);
  checks.push_back(check_entry("theorem B applicable", true, rep.applicable));
  checks.push_back(check_entry("theorem B conclusion (F = F_S(S))", true, rep.conclusion_holds));
  checks.push_back(check_entry("theorem B contradiction", false, rep.contradiction));
  return emit_example_report(ctx, name, std::move(checks));
}

struct LemmaFixture {
  PermGroupPtr v;
  PermGroupPtr h;
  std::vector<GroupHom> action;
};

LemmaFixture lemma_fixture(const std::string& name) {
  if (name == "v4_c3") {
    auto v = make_named_group("elementary_abelian(2,2)");
    auto h = make_named_group("cyclic(3)");
    for (const GroupHom& a : automorphism_group(Subgroup::whole(v)))
      if (a.order() == 3) return LemmaFixture{v, h, {a}};
  }
  if (name == "c3_c2") {
    auto v = make_named_group("cyclic(3)");
    auto h = make_named_group("cyclic(2)");
    for (const GroupHom& a : automorphism_group(Subgroup::whole(v)))
      if (a.order() == 2) return LemmaFixture{v, h, {a}};
  }
  if (name == "c2cubed_c7") {
    auto v = make_named_group("elementary_abelian(2,3)");
    auto h = make_named_group("cyclic(7)");
    FpfExample singer = make_fpf_example("c2cubed_singer");
    return LemmaFixture{v, h, {singer.automorphism}};
  }
  throw parse_error("unknown lemma fixture: " + name + " (v4_c3, c3_c2, c2cubed_c7)");
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Ctx ctx;
  ctx.out = &out;

  CLI::App app{"computing with saturated fusion systems over finite p-groups"};
  app.name("fuskit");
  app.fallthrough();
  app.add_option("--format", ctx.format, "output format")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--cap-elements", ctx.caps.element_cap, "ambient element cap");
  app.add_option("--cap-subgroups", ctx.caps.small_group_cap,
                 "subgroup enumeration / automorphism search cap");

  std::string group_spec, fusion_spec, aut_spec_b, from_spec, action_spec, fixture;
  std::string v_spec, h_spec, example_name = "list";
  std::vector<std::string> aut_specs;
  int p = -1;
  bool inner = false;

  CLI::App* grp = app.add_subcommand("group", "group-level queries");
  CLI::App* grp_info = grp->add_subcommand("info", "order and structure of a group");
  grp_info->add_option("--group", group_spec, "group file or name:<spec>")->required();

  CLI::App* fus = app.add_subcommand("fusion", "fusion system computations");
  CLI::App* fus_build = fus->add_subcommand("build", "objects, classes and hom-sets");
  CLI::App* fus_sat = fus->add_subcommand("saturation", "check the saturation axioms");
  CLI::App* fus_nil = fus->add_subcommand("nilpotent", "decide F = F_S(S)");
  CLI::App* fus_cr = fus->add_subcommand("centric-radical", "per-subgroup predicate table");
  CLI::App* fus_alp = fus->add_subcommand("alperin", "decompose a morphism");
  for (CLI::App* sub : {fus_build, fus_sat, fus_nil, fus_cr, fus_alp}) {
    sub->add_option("--group", group_spec, "group file or name:<spec>");
    sub->add_option("--p", p, "prime");
    sub->add_flag("--inner", inner, "inner fusion system of the (p-)group");
    sub->add_option("--fusion", fusion_spec, "group=<src>,p=<prime> or inner=<src>");
  }
  fus_alp->add_option("--from", from_spec, "morphism as gen->image;... list")->required();

  CLI::App* chk = app.add_subcommand("check", "theorem checkers");
  CLI::App* chk_a = chk->add_subcommand("theorem-a", "invariant-normal-subgroup criterion");
  CLI::App* chk_b = chk->add_subcommand("theorem-b", "fixed-point-free automorphism criterion");
  CLI::App* chk_lem = chk->add_subcommand("lemma-semidirect", "semidirect product lemma");
  CLI::App* chk_s4 = chk->add_subcommand("sigma4-free", "Sigma4-freeness of a fusion system");
  for (CLI::App* sub : {chk_a, chk_b, chk_s4}) {
    sub->add_option("--group", group_spec, "group file or name:<spec>");
    sub->add_option("--p", p, "prime");
    sub->add_flag("--inner", inner, "inner fusion system");
    sub->add_option("--fusion", fusion_spec, "group=<src>,p=<prime> or inner=<src>");
  }
  chk_a->add_option("--aut", aut_specs, "generator of U as gen->image;... (repeatable)");
  chk_b->add_option("--aut", aut_spec_b, "automorphism as gen->image;... list")->required();
  chk_lem->add_option("--v", v_spec, "elementary abelian normal part");
  chk_lem->add_option("--h", h_spec, "acting complement");
  chk_lem->add_option("--action",
                      action_spec, "hgen : vgen->vimage,... ; one entry per H generator");
  chk_lem->add_option("--fixture", fixture, "built-in instance (v4_c3, c3_c2, c2cubed_c7)");

  CLI::App* exs = app.add_subcommand("examples", "bundled paper examples");
  exs->add_option("name", example_name, "l217, a4_conj12, c3c3_inversion, c2cubed_singer, list");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (grp_info->parsed()) {
      GroupSource src = parse_group_source(group_spec);
      Subgroup w = Subgroup::whole(src.group, ctx.caps.element_cap);
      NilpotencyData nd = nilpotency_data(w);
      json divisors = json::array();
      for (int q : prime_divisors(w.order())) divisors.push_back(q);
      json j{{"schema", 1},
             {"command", "group info"},
             {"group", group_json(group_spec, src.group)},
             {"name", src.label},
             {"abelian", is_abelian(w)},
             {"nilpotent", nd.nilpotent},
             {"lower_central_length", nd.lower_central_series.size()},
             {"center_order", center(w).order()},
             {"prime_divisors", divisors}};
      emit(ctx, j);
      return 0;
    }

    if (fus_build->parsed() || fus_sat->parsed() || fus_nil->parsed() || fus_cr->parsed() ||
        fus_alp->parsed()) {
      FusionChoice fc = resolve_fusion(fusion_spec, group_spec, p, inner, ctx.caps);
      const FusionSystem& f = *fc.system;
      if (fus_build->parsed()) {
        json objs = json::array();
        for (int i = 0; i < static_cast<int>(f.objects().size()); ++i) {
          json o = subgroup_json(f.object(i));
          o["index"] = i;
          objs.push_back(o);
        }
        json classes = json::array();
        for (const auto& cls : f.f_conjugacy_classes()) classes.push_back(cls);
        json hom_sets = json::array();
        for (int a = 0; a < static_cast<int>(f.objects().size()); ++a)
          for (int b = 0; b < static_cast<int>(f.objects().size()); ++b) {
            auto hs = f.hom_set(a, b);
            if (hs.empty()) continue;
            json morphs = json::array();
            for (const FusionMorphism& m : hs) morphs.push_back(morphism_json(m));
            hom_sets.push_back(json{{"from", a}, {"to", b}, {"size", hs.size()},
                                    {"morphisms", morphs}});
          }
        emit(ctx, json{{"schema", 1},
                       {"command", "fusion build"},
                       {"fusion", fusion_summary_json(fc.label, f)},
                       {"objects", objs},
                       {"f_conjugacy_classes", classes},
                       {"hom_sets", hom_sets}});
        return 0;
      }
      if (fus_sat->parsed()) {
        SaturationReport rep = f.check_saturation();
        json j{{"schema", 1},
               {"command", "fusion saturation"},
               {"fusion", fusion_summary_json(fc.label, f)}};
        j.update(saturation_json(f, rep));
        emit(ctx, j);
        return 0;
      }
      if (fus_nil->parsed()) {
        emit(ctx, json{{"schema", 1},
                       {"command", "fusion nilpotent"},
                       {"fusion", fusion_summary_json(fc.label, f)},
                       {"nilpotent", is_nilpotent_fusion(f)}});
        return 0;
      }
      if (fus_cr->parsed()) {
        json rows = json::array();
        for (int i = 0; i < static_cast<int>(f.objects().size()); ++i)
          rows.push_back(object_flags_json(f, i));
        emit(ctx, json{{"schema", 1},
                       {"command", "fusion centric-radical"},
                       {"fusion", fusion_summary_json(fc.label, f)},
                       {"subgroups", rows}});
        return 0;
      }
      // fusion alperin
      auto pairs = parse_image_pairs(from_spec, f.sylow().degree());
      std::vector<Perm> dom_gens;
      for (const auto& [a, b] : pairs) dom_gens.push_back(a);
      Subgroup dom(f.sylow().ambient(), dom_gens);
      GroupHom h = GroupHom::build(dom, f.sylow(), pairs);
      Subgroup img = h.image_subgroup();
      int di = f.object_index(dom);
      std::vector<Perm> table = h.table();
      if (!f.has_atom(di, table))
        throw precondition_error("the given map is not a morphism of the fusion system");
      FusionMorphism psi(fc.system, di, f.object_index(img), f.object_index(img), table);
      AlperinDecomposition dec = alperin_decompose(fc.system, psi);
      // Recompose to double-check the witness before printing it.
      std::vector<Perm> acc = dom.elements();
      for (const AlperinStep& st : dec.steps) {
        const Subgroup& q = f.object(st.q_object);
        for (Perm& x : acc) x = st.aut.table()[static_cast<size_t>(q.element_index(x))];
      }
      json steps = json::array();
      for (const AlperinStep& st : dec.steps)
        steps.push_back(json{{"q", subgroup_json(f.object(st.q_object))},
                             {"aut", morphism_json(st.aut)},
                             {"from", subgroup_json(f.object(st.from_object))},
                             {"to", subgroup_json(f.object(st.to_object))}});
      emit(ctx, json{{"schema", 1},
                     {"command", "fusion alperin"},
                     {"fusion", fusion_summary_json(fc.label, f)},
                     {"morphism", morphism_json(psi)},
                     {"steps", steps},
                     {"recomposes", acc == table}});
      return acc == table ? 0 : 3;
    }

    if (chk_a->parsed() || chk_b->parsed()) {
      FusionChoice fc = resolve_fusion(fusion_spec, group_spec, p, inner, ctx.caps);
      TheoremReport rep;
      std::string command;
      if (chk_a->parsed()) {
        command = "check theorem-a";
        std::vector<FusionAut> gens;
        for (const std::string& s : aut_specs) gens.push_back(parse_fusion_aut(fc.system, s));
        FusionAutGroup u = gens.empty() ? FusionAutGroup::trivial(fc.system)
                                        : FusionAutGroup::generated(fc.system, gens);
        rep = check_theorem_A(fc.system, u);
      } else {
        command = "check theorem-b";
        FusionAut phi = parse_fusion_aut(fc.system, aut_spec_b);
        rep = check_theorem_B(fc.system, phi);
      }
      json j{{"schema", 1}, {"command", command},
             {"fusion", fusion_summary_json(fc.label, *fc.system)}};
      j.update(theorem_json(*fc.system, rep));
      int code = theorem_exit(rep);
      j["exit_code"] = code;
      emit(ctx, j);
      return code;
    }

    if (chk_lem->parsed()) {
      LemmaFixture fx{nullptr, nullptr, {}};
      std::string label;
      if (!fixture.empty()) {
        fx = lemma_fixture(fixture);
        label = "fixture:" + fixture;
      } else {
        if (v_spec.empty() || h_spec.empty() || action_spec.empty())
          throw parse_error("lemma-semidirect needs --fixture or --v/--h/--action");
        GroupSource vs = parse_group_source(v_spec);
        GroupSource hs = parse_group_source(h_spec);
        Subgroup vw = Subgroup::whole(vs.group);
        // One entry per H generator: hgen : vgen->vimage, ...
        std::map<Perm, GroupHom> by_hgen;
        std::stringstream ss(action_spec);
        std::string entry;
        while (std::getline(ss, entry, ';')) {
          if (entry.find_first_not_of(" \t") == std::string::npos) continue;
          size_t colon = entry.find(':');
          if (colon == std::string::npos)
            throw parse_error("action entry needs hgen : vgen->vimage,...");
          Perm hgen = parse_cycles(entry.substr(0, colon), hs.group->degree());
          std::vector<std::pair<Perm, Perm>> vpairs;
          std::stringstream ps(entry.substr(colon + 1));
          std::string pairtext;
          while (std::getline(ps, pairtext, ',')) {
            size_t arrow = pairtext.find("->");
            if (arrow == std::string::npos) throw parse_error("expected vgen->vimage");
            vpairs.emplace_back(parse_cycles(pairtext.substr(0, arrow), vs.group->degree()),
                                parse_cycles(pairtext.substr(arrow + 2), vs.group->degree()));
          }
          by_hgen.emplace(hgen, GroupHom::build(vw, vw, vpairs));
        }
        std::vector<GroupHom> action;
        for (const Perm& g : hs.group->generators()) {
          auto it = by_hgen.find(g);
          if (it == by_hgen.end())
            throw parse_error("no action entry for H generator " + g.cycle_string());
          action.push_back(it->second);
        }
        fx = LemmaFixture{vs.group, hs.group, std::move(action)};
        label = v_spec + " x| " + h_spec;
      }
      LemmaSemidirectReport rep = check_lemma_semidirect(fx.v, fx.h, fx.action, ctx.caps);
      json results = json::array();
      for (const LemmaUResult& r : rep.results)
        results.push_back(json{{"u_order", r.u_order},
                               {"t_automorphisms", r.t_holds},
                               {"branch", t_branch_name(r.branch)},
                               {"note", r.note}});
      emit(ctx, json{{"schema", 1},
                     {"command", "check lemma-semidirect"},
                     {"instance", label},
                     {"group_order", rep.group->order()},
                     {"p", rep.system->prime()},
                     {"aut_f_order", rep.aut_f_order},
                     {"subgroups_examined", rep.subgroups_examined},
                     {"all_rejected", rep.all_rejected},
                     {"results", results}});
      return rep.all_rejected ? 0 : 3;
    }

    if (chk_s4->parsed()) {
      FusionChoice fc = resolve_fusion(fusion_spec, group_spec, p, inner, ctx.caps);
      HFreeReport rep = is_H_free(fc.system, make_named_group("sym(4)"));
      json witness;
      if (!rep.free) {
        witness = json{{"subgroup", subgroup_json(fc.system->object(*rep.witness_object))},
                       {"model_order", rep.witness_model->order()},
                       {"model_isomorphic_to_sym4",
                        isomorphic_to(rep.witness_model, make_named_group("sym(4)"), ctx.caps)}};
      } else {
        witness = nullptr;
      }
      emit(ctx, json{{"schema", 1},
                     {"command", "check sigma4-free"},
                     {"fusion", fusion_summary_json(fc.label, *fc.system)},
                     {"free", rep.free},
                     {"models_checked", rep.models_checked},
                     {"witness", witness}});
      return 0;
    }

    if (exs->parsed()) {
      if (example_name == "list") {
        json names = json::array();
        names.push_back("l217");
        for (const std::string& n : fpf_example_names()) names.push_back(n);
        emit(ctx, json{{"schema", 1}, {"command", "examples"}, {"available", names}});
        return 0;
      }
      if (example_name == "l217") return run_example_l217(ctx);
      return run_example_fpf(ctx, example_name);
    }

    err << "error: no subcommand given (try --help)\n";
    return 1;
  } catch (const contradiction_error& e) {
    err << "contradiction: " << e.what() << "\n";
    if (!e.diagnostic.empty()) err << e.diagnostic;
    return 3;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace fuskit
