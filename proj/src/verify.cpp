#include "profin/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "profin/abdual.hpp"
#include "profin/catalog.hpp"
#include "profin/charorbit.hpp"
#include "profin/findex.hpp"
#include "profin/heisen.hpp"
#include "profin/lamptower.hpp"
#include "profin/wreath.hpp"

namespace profin {

namespace {

std::string join_ll(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

Report verify_duality() {
  Report r;
  r.command = "duality";

  // Double duality: evaluation A -> dual(dual(A)) is an isomorphism;
  // concretely, the factors agree and the pairing separates points.
  bool factors_ok = true, separates = true;
  int groups = 0;
  for (const auto& chain : invariant_factor_chains(64)) {
    AbGroup a(chain);
    ++groups;
    if (!(dual_group(a).factors() == a.factors())) factors_ok = false;
    for (long long i = 1; i < a.order() && separates; ++i) {
      auto x = a.element(i);
      bool separated = false;
      for (long long c = 0; c < a.order() && !separated; ++c)
        separated = !pairing(Character(a, a.element(c)), x).is_zero();
      if (!separated) separates = false;
    }
  }
  r.results["groups_checked"] = groups;
  r.add_check("double_dual_factors_order_le_64", factors_ok);
  r.add_check("pairing_separates_points_order_le_64", separates);

  bool ann_ok = true;
  long long subgroups = 0;
  for (const auto& chain : invariant_factor_chains(36)) {
    AbGroup a(chain);
    for (const auto& s : all_subgroups(a)) {
      ++subgroups;
      if (s.order() * static_cast<long long>(annihilator(a, s).size()) !=
          a.order())
        ann_ok = false;
    }
  }
  r.results["subgroups_checked"] = subgroups;
  r.add_check("annihilator_size_identity_order_le_36", ann_ok);
  return r;
}

std::vector<SplitCase> split_extension_catalog() {
  std::vector<SplitCase> cases;
  cases.push_back({"S3", symmetric3(), {2}, {1}});
  cases.push_back({"D4", dihedral_group(4), {2}, {1}});
  cases.push_back({"D5", dihedral_group(5), {2}, {1}});
  cases.push_back({"D6", dihedral_group(6), {2}, {1}});
  cases.push_back({"A4", alternating4(), {3, 6}, {1}});
  cases.push_back({"C7:C3", c7_c3(), {3}, {1}});
  {
    auto w = wreath_product(cyclic_group(2), cyclic_group(2));
    cases.push_back({"C2wrC2", w.carrier, w.base.elems, w.complement.elems});
  }
  return cases;
}

Report verify_reconstruction() {
  Report r;
  r.command = "reconstruct";
  for (const auto& c : split_extension_catalog()) {
    bool pass = false;
    std::string detail;
    try {
      Subgroup n = generate_subgroup(c.group, c.n_gens);
      Subgroup h = generate_subgroup(c.group, c.h_gens);
      auto rec = reconstruct_cor1(c.group, n, h);
      pass = rec.witness.is_bijective();
      detail = "B=[" + join_ll(rec.b_factors) + "]";
    } catch (const std::exception& e) {
      detail = e.what();
    }
    r.add_check("reconstruct_" + c.name, pass, detail);
  }
  return r;
}

Report verify_lamplighter_tower(long long cap) {
  Report r;
  r.command = "lamp-tower";
  auto results = nlohmann::json::array();

  for (long long n0 : {2LL, 3LL}) {
    std::map<long long, LampLevel> levels;
    long long expected = 1;  // n0^m
    for (long long m = 1; m <= 6; ++m) {
      expected *= n0;
      if (expected * m > cap) continue;
      levels.emplace(m, lamp_level(n0, m, cap));
      const auto& lv = levels.at(m);
      nlohmann::json lj;
      lj["n0"] = n0;
      lj["m"] = m;
      lj["order"] = lv.wr.carrier->order();
      lj["nhat"] = lv.nhat_size();
      results.push_back(std::move(lj));
      r.add_check("level_order_n0=" + std::to_string(n0) +
                      "_m=" + std::to_string(m),
                  lv.wr.carrier->order() == expected * m &&
                      lv.nhat_size() == expected);
    }

    // Projections for every divisor pair, with kernel-size bookkeeping.
    std::map<std::pair<long long, long long>, TowerMap> maps;
    bool proj_ok = true, kernel_ok = true;
    for (const auto& [m1, from] : levels)
      for (const auto& [m2, to] : levels) {
        if (m1 % m2 != 0) continue;
        auto map = tower_projection(from, to);
        if (!map.group_proj.is_surjective()) proj_ok = false;
        const long long want =
            from.wr.carrier->order() / to.wr.carrier->order();
        if (static_cast<long long>(map.group_proj.kernel().size()) != want)
          kernel_ok = false;
        maps.emplace(std::make_pair(m1, m2), std::move(map));
      }
    r.add_check("projections_epimorphisms_n0=" + std::to_string(n0), proj_ok);
    r.add_check("projection_kernel_sizes_n0=" + std::to_string(n0), kernel_ok);

    // Coherence along divisibility chains m2 | m1 | m0.
    bool coherent = true;
    for (const auto& [m0, l0] : levels)
      for (const auto& [m1, l1] : levels) {
        if (m1 == m0 || m0 % m1 != 0) continue;
        for (const auto& [m2, l2] : levels) {
          if (m2 == m1 || m1 % m2 != 0) continue;
          const auto& direct = maps.at({m0, m2}).group_proj;
          const auto& first = maps.at({m0, m1}).group_proj;
          const auto& second = maps.at({m1, m2}).group_proj;
          for (int x = 0; x < l0.wr.carrier->order(); ++x)
            if (direct.image[x] != second.image[first.image[x]]) {
              coherent = false;
              break;
            }
        }
      }
    r.add_check("tower_coherence_n0=" + std::to_string(n0), coherent);

    // Fixed characters of the shift subgroup are exactly the injected ones.
    bool inj_ok = true;
    for (const auto& [key, map] : maps) {
      const auto& [m1, m2] = key;
      if (m1 == m2) continue;
      std::set<std::vector<long long>> injected;
      const auto& to = levels.at(m2);
      for (long long ci = 0; ci < to.a_m.order(); ++ci)
        injected.insert(map.char_inj(to.a_m.element(ci)));
      auto fixed = shift_fixed_characters(levels.at(m1), m2);
      if (injected != std::set<std::vector<long long>>(fixed.begin(),
                                                       fixed.end()))
        inj_ok = false;
    }
    r.add_check("char_inj_image_is_shift_fixed_n0=" + std::to_string(n0),
                inj_ok);
  }

  // Defining pairing identity for the projection, exhaustively at the
  // pinned level pairs.
  const std::vector<std::array<long long, 3>> pairs = {
      {2, 4, 2}, {2, 6, 3}, {2, 6, 2}, {3, 6, 3}, {3, 4, 2}};
  for (const auto& [n0, m1, m2] : pairs) {
    auto from = lamp_level(n0, m1, cap);
    auto to = lamp_level(n0, m2, cap);
    auto map = tower_projection(from, to);
    r.add_check("duality_identity_" + std::to_string(n0) + "_" +
                    std::to_string(m1) + "_" + std::to_string(m2),
                check_duality_identity(from, to, map));
  }

  // Level groups match their character-side reconstruction.
  for (const auto& [n0, m] : std::vector<std::pair<long long, long long>>{
           {2, 1}, {2, 2}, {2, 3}, {3, 2}}) {
    bool pass = false;
    std::string detail;
    try {
      auto iso = verify_level_iso(n0, m, cap);
      pass = iso.witness.is_bijective();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    r.add_check("level_iso_" + std::to_string(n0) + "_" + std::to_string(m),
                pass, detail);
  }

  r.results["levels"] = std::move(results);
  return r;
}

Report verify_heisenberg_suite(long long cap) {
  Report r;
  r.command = "heisenberg";
  const std::vector<std::string> rings = {"2", "3", "4", "6", "2x2"};
  for (const auto& spec : rings) {
    FiniteRing ring = FiniteRing::parse(spec);
    auto h = heisenberg(ring, cap);
    const long long q = ring.order();
    r.add_check("order_" + spec, h.group->order() == q * q * q);
    r.add_check("center_" + spec,
                static_cast<long long>(h.group->center().size()) >= q);

    // Orbit/stabilizer-ideal identity over every character pair.
    bool orbits_ok = true;
    std::string detail;
    for (long long bi = 0; bi < q && orbits_ok; ++bi)
      for (long long pi = 0; pi < q && orbits_ok; ++pi) {
        RingCharacter beta(ring, ring.element(bi));
        RingCharacter psi(ring, ring.element(pi));
        try {
          auto data = char_orbit_data(h, beta, psi);
          if (data.orbit_size * data.i_psi.order() != q) orbits_ok = false;
        } catch (const std::exception& e) {
          orbits_ok = false;
          detail = e.what();
        }
      }
    r.add_check("char_orbits_" + spec, orbits_ok, detail);

    // Level kernels: ker(H(R) -> H(R,I)) = {(0,0,c) : c in I}.
    bool kernels_ok = true;
    auto ids = ideals(ring);
    std::vector<HeisLevel> levels;
    for (const auto& ideal : ids) {
      auto level = h_level(h, ideal);
      std::vector<Index> want;
      for (long long c : ideal.elems)
        want.push_back(static_cast<Index>(h.encode(0, 0, c)));
      std::sort(want.begin(), want.end());
      if (level.proj.kernel() != want) kernels_ok = false;
      levels.push_back(std::move(level));
    }
    r.add_check("level_kernels_" + spec, kernels_ok);

    // Connecting maps form a coherent system over the ideal lattice.
    bool coherent = true;
    for (std::size_t i = 0; i < levels.size() && coherent; ++i)
      for (std::size_t j = 0; j < levels.size() && coherent; ++j) {
        if (i == j) continue;
        bool nested = true;
        for (long long e : levels[i].ideal.elems)
          if (!levels[j].ideal.contains(e)) nested = false;
        if (!nested) continue;
        auto conn = h_level_connecting(levels[i], levels[j]);
        for (int x = 0; x < h.group->order(); ++x)
          if (conn.image[levels[i].proj.image[x]] != levels[j].proj.image[x]) {
            coherent = false;
            break;
          }
      }
    r.add_check("level_system_coherent_" + spec, coherent);
  }

  {
    auto h2 = heisenberg(FiniteRing({2}), cap);
    r.add_check("h_z2_is_d4", are_isomorphic(h2.group, dihedral_group(4)));
  }
  return r;
}

Report verify_rf_map_table() {
  Report r;
  r.command = "rf-map";
  // Corollary-4 truth table, written out row by row as an independent
  // encoding: (λ_map, λ_rf, λ_ab, h_fin, h_rf) -> (g_map, g_rf).
  struct Row {
    bool lm, lr, la, hf, hr, gm, gr;
  };
  const std::vector<Row> table = {
      {1, 0, 1, 1, 1, 1, 0}, {1, 0, 1, 0, 1, 1, 0}, {1, 0, 1, 0, 0, 0, 0},
      {1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 0, 1, 1, 1}, {1, 1, 1, 0, 0, 0, 0},
      {0, 0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 0},
      {0, 1, 0, 1, 1, 0, 1}, {0, 1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 0, 0, 0},
      {1, 0, 0, 1, 1, 1, 0}, {1, 0, 0, 0, 1, 0, 0}, {1, 0, 0, 0, 0, 0, 0},
      {1, 1, 0, 1, 1, 1, 1}, {1, 1, 0, 0, 1, 0, 0}, {1, 1, 0, 0, 0, 0, 0},
  };
  bool all_ok = true;
  for (const auto& row : table) {
    RfMapFlags flags{row.lm, row.lr, row.la, false, row.hf, row.hr};
    auto v = rf_map_verdict(flags);
    if (v.g_map != row.gm || v.g_rf != row.gr) all_ok = false;
  }
  r.results["rows_checked"] = table.size();
  r.add_check("verdict_truth_table", all_ok);

  // The two pinned cases: the lamplighter and S3 wr Z.
  auto lamp = rf_map_verdict({true, true, true, false, false, true});
  r.add_check("lamplighter_map_rf", lamp.g_map && lamp.g_rf);
  auto s3z = rf_map_verdict({true, true, false, false, false, true});
  r.add_check("s3_wr_z_not_map_not_rf", !s3z.g_map && !s3z.g_rf);
  return r;
}

Report verify_separating_characters() {
  Report r;
  r.command = "separate";
  std::mt19937 rng(20260823);
  for (long long n0 : {2LL, 3LL, 4LL}) {
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 100 && ok; ++trial) {
      std::uniform_int_distribution<int> size_dist(1, 6);
      std::uniform_int_distribution<long long> pos_dist(-10, 10);
      std::uniform_int_distribution<long long> val_dist(1, n0 - 1);
      std::vector<std::pair<long long, long long>> entries;
      const int sz = size_dist(rng);
      for (int i = 0; i < sz; ++i)
        entries.emplace_back(pos_dist(rng), val_dist(rng));
      SupportedMap f(n0, entries);
      if (f.empty()) continue;  // collisions may cancel; not a nonzero input
      auto sc = separating_character(f);
      // Period, residue distinctness, nonzero pairing.
      if (static_cast<long long>(sc.exps.size()) != sc.m) ok = false;
      std::set<long long> residues;
      for (auto [k, v] : f.support)
        residues.insert(((k % sc.m) + sc.m) % sc.m);
      if (residues.size() != f.support.size()) ok = false;
      if (sc.value.is_zero() ||
          !(periodic_pairing(n0, sc.m, sc.exps, f) == sc.value))
        ok = false;
      if (!ok) detail = "trial " + std::to_string(trial);
    }
    r.add_check("separating_characters_n0=" + std::to_string(n0), ok, detail);
  }
  return r;
}

long long sigma_divisor_sum(long long n) {
  long long s = 0;
  for (long long d = 1; d <= n; ++d)
    if (n % d == 0) s += d;
  return s;
}

long long hermite_sublattice_count(long long n) {
  // Hermite normal forms [[a, b], [0, d]] with a*d = n, 0 <= b < d.
  long long count = 0;
  for (long long d = 1; d <= n; ++d)
    if (n % d == 0) count += d;
  return count;
}

namespace {

void transitive_tuples(int r, int n, std::vector<std::vector<int>>& perms,
                       std::vector<int>& chosen, long long& count) {
  if (static_cast<int>(chosen.size()) == r) {
    std::vector<char> reached(n, 0);
    std::vector<int> stack = {0};
    reached[0] = 1;
    int hit = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int gi : chosen) {
        const auto& p = perms[gi];
        if (!reached[p[x]]) {
          reached[p[x]] = 1;
          ++hit;
          stack.push_back(p[x]);
        }
        // Inverse direction.
        for (int y = 0; y < n; ++y)
          if (p[y] == x && !reached[y]) {
            reached[y] = 1;
            ++hit;
            stack.push_back(y);
          }
      }
    }
    if (hit == n) ++count;
    return;
  }
  for (std::size_t i = 0; i < perms.size(); ++i) {
    chosen.push_back(static_cast<int>(i));
    transitive_tuples(r, n, perms, chosen, count);
    chosen.pop_back();
  }
}

}  // namespace

long long transitive_action_subgroup_count(int r, int n) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  long long count = 0;
  std::vector<int> chosen;
  transitive_tuples(r, n, perms, chosen, count);
  long long fact = 1;
  for (int i = 2; i < n; ++i) fact *= i;
  return count / fact;
}

Report verify_low_index() {
  Report r;
  r.command = "low-index";

  auto z = Presentation::parse("a;");
  auto z_counts = low_index_counts(z, 7);
  r.results["z_counts"] = z_counts;
  r.add_check("z_one_subgroup_per_index",
              z_counts == std::vector<int>(7, 1));

  auto z2 = Presentation::parse("a,b;abAB");
  auto z2_counts = low_index_counts(z2, 6);
  r.results["z2_counts"] = z2_counts;
  bool z2_ok = true;
  for (int n = 1; n <= 6; ++n) {
    if (z2_counts[n - 1] != sigma_divisor_sum(n)) z2_ok = false;
    if (z2_counts[n - 1] != hermite_sublattice_count(n)) z2_ok = false;
  }
  r.add_check("z2_counts_match_hermite_oracle", z2_ok);

  auto f2 = Presentation::parse("a,b;");
  auto f2_counts = low_index_counts(f2, 3);
  r.results["f2_counts"] = f2_counts;
  r.add_check("f2_index2_count",
              f2_counts[1] == 3 && f2_counts[1] ==
                  transitive_action_subgroup_count(2, 2));
  r.add_check("f2_index3_count",
              f2_counts[2] == 13 && f2_counts[2] ==
                  transitive_action_subgroup_count(2, 3));

  auto core = core_quotient(z, 4);
  r.results["core_z_4_order"] = core.group->order();
  r.add_check("core_z_4_is_c12", are_isomorphic(core.group, cyclic_group(12)));
  return r;
}

Report verify_all(long long cap) {
  Report r;
  r.command = "verify-all";
  const std::vector<Report> parts = {
      verify_duality(),          verify_reconstruction(),
      verify_lamplighter_tower(cap), verify_heisenberg_suite(cap),
      verify_rf_map_table(),     verify_separating_characters(),
      verify_low_index()};
  for (const auto& part : parts) {
    r.results[part.command] = part.results;
    for (const auto& c : part.checks)
      r.add_check(part.command + "." + c.name, c.pass, c.detail);
  }
  return r;
}

}  // namespace profin
