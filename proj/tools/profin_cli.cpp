#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "profin/abdual.hpp"
#include "profin/catalog.hpp"
#include "profin/charorbit.hpp"
#include "profin/findex.hpp"
#include "profin/fingrp.hpp"
#include "profin/heisen.hpp"
#include "profin/lamptower.hpp"
#include "profin/report.hpp"
#include "profin/verify.hpp"
#include "profin/wreath.hpp"

namespace {

using nlohmann::json;
using namespace profin;

std::vector<long long> parse_ll_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  return out;
}

// Accepts inline JSON, an @file reference, or plain text.
std::string slurp_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw std::invalid_argument("cannot read file: " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

/// A group reference: catalog name, inline JSON table, or @file.
GroupPtr resolve_group(const std::string& ref) {
  const std::string text = slurp_arg(ref);
  if (!text.empty() && text[0] == '{') return group_from_json(text);
  return catalog_group(text);
}

json rotation_json(const Rotation& r) {
  return json{{"num", r.num}, {"den", r.den}};
}

Report cmd_dual(const std::string& factors_arg, const std::string& sub_arg) {
  Report r;
  r.command = "dual";
  AbGroup a(parse_ll_list(factors_arg));
  r.inputs["factors"] = a.factors();
  r.results["order"] = a.order();
  r.results["dual_factors"] = dual_group(a).factors();

  if (!sub_arg.empty()) {
    std::vector<std::vector<long long>> gens;
    for (long long idx : parse_ll_list(sub_arg)) gens.push_back(a.element(idx));
    auto s = ab_span(a, gens);
    auto ann = annihilator(a, s);
    r.inputs["subgroup_gens"] = parse_ll_list(sub_arg);
    r.results["subgroup_order"] = s.order();
    r.results["annihilator_size"] = ann.size();
    auto chars = json::array();
    for (const auto& chi : ann) chars.push_back(json{{"exps", chi.exps}});
    r.results["annihilator"] = std::move(chars);
    r.add_check("annihilator_size_identity",
                s.order() * static_cast<long long>(ann.size()) == a.order());
  } else {
    auto subs = json::array();
    bool ok = true;
    for (const auto& s : all_subgroups(a)) {
      const auto ann = annihilator(a, s).size();
      if (s.order() * static_cast<long long>(ann) != a.order()) ok = false;
      subs.push_back(json{{"subgroup_order", s.order()},
                          {"annihilator_size", ann}});
    }
    r.results["subgroups"] = std::move(subs);
    r.add_check("annihilator_size_identity_all_subgroups", ok);
  }
  return r;
}

DualAction parse_action(const std::string& arg) {
  const json j = json::parse(slurp_arg(arg));
  GroupPtr h = j.at("H").is_string()
                   ? resolve_group(j.at("H").get<std::string>())
                   : group_from_json(j.at("H").dump());
  AbGroup n(j.at("N").at("factors").get<std::vector<long long>>());
  std::vector<IntMat> mats(h->order());
  std::vector<char> seen(h->order(), 0);
  for (const auto& [key, val] : j.at("mats").items()) {
    const int idx = std::stoi(key);
    if (idx < 0 || idx >= h->order())
      throw std::invalid_argument("action: matrix index out of range");
    mats[idx] = val.get<IntMat>();
    seen[idx] = 1;
  }
  for (char s : seen)
    if (!s) throw std::invalid_argument("action: missing matrix for an H element");
  return DualAction(std::move(h), std::move(n), std::move(mats));
}

Report cmd_orbit(const std::string& action_arg, const std::string& chi_arg) {
  Report r;
  r.command = "orbit";
  auto act = parse_action(action_arg);
  Character chi(act.n, act.n.reduce(parse_ll_list(chi_arg)));
  r.inputs["chi"] = chi.exps;
  auto res = orbit_and_stabilizer(act, chi);
  auto orbit = json::array();
  for (const auto& c : res.orbit) orbit.push_back(json{{"exps", c.exps}});
  r.results["orbit"] = std::move(orbit);
  r.results["orbit_size"] = res.orbit.size();
  r.results["stabilizer"] = res.stabilizer.elems;
  r.add_check("orbit_stabilizer_identity",
              static_cast<long long>(res.orbit.size()) *
                      res.stabilizer.order() ==
                  act.h->order());
  return r;
}

Report cmd_reconstruct(const std::string& group_ref, const std::string& n_arg,
                       const std::string& h_arg) {
  Report r;
  r.command = "reconstruct";
  auto g = resolve_group(group_ref);
  r.inputs["group"] = g->label();
  std::vector<Index> n_gens, h_gens;
  for (long long v : parse_ll_list(n_arg)) n_gens.push_back(static_cast<Index>(v));
  for (long long v : parse_ll_list(h_arg)) h_gens.push_back(static_cast<Index>(v));
  r.inputs["n_gens"] = n_gens;
  r.inputs["h_gens"] = h_gens;
  auto rec = reconstruct_cor1(g, generate_subgroup(g, n_gens),
                              generate_subgroup(g, h_gens));
  r.results["b_factors"] = rec.b_factors;
  r.results["rebuilt_order"] = rec.group->order();
  r.add_check("isomorphism_witness", rec.witness.is_bijective());
  return r;
}

Report cmd_wreath(const std::string& lambda_ref, const std::string& top_ref,
                  bool with_abelianization, long long cap) {
  Report r;
  r.command = "wreath";
  auto lambda = resolve_group(lambda_ref);
  auto top = resolve_group(top_ref);
  r.inputs["lambda"] = lambda->label();
  r.inputs["top"] = top->label();
  auto w = wreath_product(lambda, top, cap);
  r.results["order"] = w.carrier->order();
  r.results["base_order"] = w.base_order();
  r.results["top_order"] = top->order();
  r.add_check("carrier_order",
              static_cast<long long>(w.carrier->order()) ==
                  w.base_order() * top->order());
  if (with_abelianization) {
    auto q = abelianization_quotient(w, cap);
    r.results["abelianization_quotient_order"] = q.target.carrier->order();
    r.results["abelianization_kernel_size"] = q.proj.kernel().size();
    r.add_check("abelianization_quotient_epi", q.proj.is_surjective());
  }
  return r;
}

Report cmd_rf_map(const RfMapFlags& flags) {
  Report r;
  r.command = "rf-map";
  r.inputs["lambda_map"] = flags.lambda_map;
  r.inputs["lambda_rf"] = flags.lambda_rf;
  r.inputs["lambda_abelian"] = flags.lambda_abelian;
  r.inputs["lambda_trivial"] = flags.lambda_trivial;
  r.inputs["h_finite"] = flags.h_finite;
  r.inputs["h_rf"] = flags.h_rf;
  auto v = rf_map_verdict(flags);
  r.results["map"] = v.g_map;
  r.results["rf"] = v.g_rf;
  r.add_check("flags_admissible", true);
  return r;
}

Report cmd_separate(const std::string& f_arg) {
  Report r;
  r.command = "separate";
  const json j = json::parse(slurp_arg(f_arg));
  std::vector<std::pair<long long, long long>> entries;
  for (const auto& kv : j.at("support"))
    entries.emplace_back(kv.at(0).get<long long>(), kv.at(1).get<long long>());
  SupportedMap f(j.at("n0").get<long long>(), std::move(entries));
  r.inputs["f"] = j;
  if (f.empty()) throw std::invalid_argument("separate: map is zero");
  auto sc = separating_character(f);
  r.results["m"] = sc.m;
  r.results["exps"] = sc.exps;
  r.results["value"] = rotation_json(sc.value);
  r.add_check("pairing_nonzero", !sc.value.is_zero());
  r.add_check("pairing_matches",
              periodic_pairing(f.n0, sc.m, sc.exps, f) == sc.value);
  return r;
}

Report cmd_lamp_tower(long long n0, long long max_m, const std::string& emit,
                      long long cap) {
  Report r;
  r.command = "lamp-tower";
  r.inputs["n0"] = n0;
  r.inputs["max_m"] = max_m;
  r.inputs["emit"] = emit;
  const bool want_levels = emit == "levels" || emit == "checks";
  const bool want_maps = emit == "maps" || emit == "checks";

  std::map<long long, LampLevel> levels;
  long long nhat = 1;
  auto level_arr = json::array();
  for (long long m = 1; m <= max_m; ++m) {
    nhat *= n0;
    if (nhat * m > cap) continue;
    levels.emplace(m, lamp_level(n0, m, cap));
    const auto& lv = levels.at(m);
    if (want_levels)
      level_arr.push_back(json{{"m", m},
                               {"order", lv.wr.carrier->order()},
                               {"nhat", lv.nhat_size()}});
    if (emit == "checks")
      r.add_check("level_order_m=" + std::to_string(m),
                  lv.wr.carrier->order() == nhat * m &&
                      lv.nhat_size() == nhat);
  }
  if (want_levels) r.results["levels"] = std::move(level_arr);

  if (want_maps) {
    auto map_arr = json::array();
    bool epi_ok = true;
    for (const auto& [m1, from] : levels)
      for (const auto& [m2, to] : levels) {
        if (m1 == m2 || m1 % m2 != 0) continue;
        auto map = tower_projection(from, to);
        if (!map.group_proj.is_surjective()) epi_ok = false;
        map_arr.push_back(json{{"m1", m1},
                               {"m2", m2},
                               {"kernel_size", map.group_proj.kernel().size()}});
      }
    r.results["maps"] = std::move(map_arr);
    if (emit == "checks")
      r.add_check("projections_epimorphisms", epi_ok);
  }
  if (r.checks.empty()) r.add_check("tower_built", true);
  return r;
}

Report cmd_heisenberg(const std::string& ring_arg, const std::string& report,
                      long long cap) {
  Report r;
  r.command = "heisenberg";
  FiniteRing ring = FiniteRing::parse(ring_arg);
  r.inputs["ring"] = ring.label();
  r.inputs["report"] = report;
  auto h = heisenberg(ring, cap);
  const long long q = ring.order();
  r.results["order"] = h.group->order();

  if (report == "orbits") {
    auto arr = json::array();
    bool ok = true;
    for (long long bi = 0; bi < q; ++bi)
      for (long long pi = 0; pi < q; ++pi) {
        RingCharacter beta(ring, ring.element(bi));
        RingCharacter psi(ring, ring.element(pi));
        auto data = char_orbit_data(h, beta, psi);
        if (data.orbit_size * data.i_psi.order() != q) ok = false;
        arr.push_back(json{{"beta", beta.exps},
                           {"psi", psi.exps},
                           {"orbit_size", data.orbit_size},
                           {"i_psi", data.i_psi.elems}});
      }
    r.results["orbits"] = std::move(arr);
    r.add_check("orbit_size_identity", ok);
  } else if (report == "levels") {
    auto arr = json::array();
    bool ok = true;
    for (const auto& ideal : ideals(ring)) {
      auto level = h_level(h, ideal);
      std::vector<Index> want;
      for (long long c : ideal.elems)
        want.push_back(static_cast<Index>(h.encode(0, 0, c)));
      std::sort(want.begin(), want.end());
      if (level.proj.kernel() != want) ok = false;
      arr.push_back(json{{"ideal", ideal.elems},
                         {"level_order", level.group->order()},
                         {"kernel_size", level.proj.kernel().size()}});
    }
    r.results["levels"] = std::move(arr);
    r.add_check("level_kernels", ok);
  } else if (report == "recon") {
    auto rec = reconstruct_cor1(h.group, h.n_part, h.h_part);
    r.results["b_factors"] = rec.b_factors;
    r.add_check("isomorphism_witness", rec.witness.is_bijective());
  } else {
    throw std::invalid_argument("heisenberg: unknown report kind " + report);
  }
  return r;
}

Report cmd_low_index(const std::string& pres_arg, int max_index, int core_n,
                     long long cap) {
  Report r;
  r.command = "low-index";
  auto p = Presentation::parse(pres_arg);
  r.inputs["pres"] = p.to_string();
  r.inputs["max"] = max_index;
  auto records = low_index_subgroups(p, max_index);
  std::vector<int> counts(max_index, 0);
  auto arr = json::array();
  bool ok = true;
  for (const auto& rec : records) {
    ++counts[rec.index - 1];
    if (!verify_record(p, rec)) ok = false;
    arr.push_back(json{{"index", rec.index}, {"table", rec.table}});
  }
  r.results["counts"] = counts;
  r.results["subgroups"] = std::move(arr);
  r.add_check("records_verified", ok);
  if (core_n > 0) {
    auto core = core_quotient(p, core_n, cap);
    r.results["core_order"] = core.group->order();
    r.results["core_generator_images"] = core.generator_images;
    r.add_check("core_quotient_built", true);
  }
  return r;
}

int emit_report(const Report& r, int indent) {
  std::cout << r.to_json().dump(indent) << "\n";
  std::cerr << r.command << ":";
  for (const auto& [key, val] : r.results.items())
    if (!val.is_array() && !val.is_object())
      std::cerr << " " << key << "=" << val.dump();
  std::cerr << "\n";
  int failed = 0;
  for (const auto& c : r.checks) {
    std::cerr << (c.pass ? "  [ok]   " : "  [FAIL] ") << c.name;
    if (!c.detail.empty()) std::cerr << " (" << c.detail << ")";
    std::cerr << "\n";
    if (!c.pass) ++failed;
  }
  if (failed)
    std::cerr << failed << " check(s) failed\n";
  else
    std::cerr << "all " << r.checks.size() << " check(s) passed\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite shadows of profinite completions of group extensions"};
  app.require_subcommand(1);
  app.fallthrough();
  int indent = 2;
  long long cap = kDefaultTableCap;
  app.add_option("--json-indent", indent, "JSON indent width (-1 = compact)");
  app.add_option("--cap", cap, "Multiplication-table order cap");

  std::string factors, subgroup;
  auto* dual = app.add_subcommand("dual", "Dual group and annihilators");
  dual->add_option("--factors", factors, "Invariant factors, e.g. 2,4")
      ->required();
  dual->add_option("--subgroup", subgroup, "Subgroup generator indices");

  std::string action, chi;
  auto* orbit = app.add_subcommand("orbit", "Character orbit and stabilizer");
  orbit->add_option("--action", action, "Dual action JSON or @file")->required();
  orbit->add_option("--chi", chi, "Character exponents, e.g. 1,0")->required();

  std::string group_ref, n_gens, h_gens;
  auto* recon =
      app.add_subcommand("reconstruct", "Rebuild a split extension from duals");
  recon->add_option("--group", group_ref, "Catalog name, JSON, or @file")
      ->required();
  recon->add_option("--n-gens", n_gens, "Generators of abelian normal N")
      ->required();
  recon->add_option("--h-gens", h_gens, "Generators of a complement H")
      ->required();

  std::string lambda_ref, top_ref;
  bool with_ab = false;
  auto* wreath = app.add_subcommand("wreath", "Wreath product at finite scale");
  wreath->add_option("--lambda", lambda_ref, "Base group")->required();
  wreath->add_option("--top", top_ref, "Acting group")->required();
  wreath->add_flag("--abelianization", with_ab,
                   "Also build the coordinatewise abelianization quotient");

  RfMapFlags flags;
  auto* rfmap = app.add_subcommand("rf-map", "MAP/RF verdict for a wreath product");
  rfmap->add_flag("--lambda-map", flags.lambda_map);
  rfmap->add_flag("--lambda-rf", flags.lambda_rf);
  rfmap->add_flag("--lambda-abelian", flags.lambda_abelian);
  rfmap->add_flag("--lambda-trivial", flags.lambda_trivial);
  rfmap->add_flag("--h-finite", flags.h_finite);
  rfmap->add_flag("--h-rf", flags.h_rf);

  std::string f_arg;
  auto* separate =
      app.add_subcommand("separate", "Periodic character separating a map");
  separate->add_option("--f", f_arg, "Map JSON {\"support\":[[k,v],...],\"n0\":n}")
      ->required();

  long long n0 = 2, max_m = 6;
  std::string emit = "checks";
  auto* tower = app.add_subcommand("lamp-tower", "Finite lamplighter tower");
  tower->add_option("--n0", n0, "Lamp group order")->required();
  tower->add_option("--max-m", max_m, "Largest level");
  tower->add_option("--emit", emit, "levels|maps|checks")
      ->check(CLI::IsMember({"levels", "maps", "checks"}));

  std::string ring_arg, report_kind = "orbits";
  auto* heis = app.add_subcommand("heisenberg", "Heisenberg group over a ring");
  heis->add_option("--ring", ring_arg, "Ring, e.g. 4 or 2x3")->required();
  heis->add_option("--report", report_kind, "orbits|levels|recon")
      ->check(CLI::IsMember({"orbits", "levels", "recon"}));

  std::string pres_arg;
  int max_index = 4, core_n = 0;
  auto* lowidx = app.add_subcommand("low-index", "Low-index subgroup enumeration");
  lowidx->add_option("--pres", pres_arg, "Presentation, e.g. \"a,b;abAB\"")
      ->required();
  lowidx->add_option("--max", max_index, "Index bound");
  lowidx->add_option("--core", core_n, "Also build the core quotient at this index");

  auto* verify = app.add_subcommand("verify-all", "Run the full acceptance suite");
  (void)verify;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Report r;
    if (dual->parsed())
      r = cmd_dual(factors, subgroup);
    else if (orbit->parsed())
      r = cmd_orbit(action, chi);
    else if (recon->parsed())
      r = cmd_reconstruct(group_ref, n_gens, h_gens);
    else if (wreath->parsed())
      r = cmd_wreath(lambda_ref, top_ref, with_ab, cap);
    else if (rfmap->parsed())
      r = cmd_rf_map(flags);
    else if (separate->parsed())
      r = cmd_separate(f_arg);
    else if (tower->parsed())
      r = cmd_lamp_tower(n0, max_m, emit, cap);
    else if (heis->parsed())
      r = cmd_heisenberg(ring_arg, report_kind, cap);
    else if (lowidx->parsed())
      r = cmd_low_index(pres_arg, max_index, core_n, cap);
    else
      r = profin::verify_all(cap);
    return emit_report(r, indent);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
