#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "profin/abdual.hpp"
#include "profin/catalog.hpp"
#include "profin/charorbit.hpp"
#include "profin/findex.hpp"
#include "profin/heisen.hpp"
#include "profin/lamptower.hpp"
#include "profin/verify.hpp"
#include "profin/wreath.hpp"

namespace py = pybind11;
using namespace profin;

namespace {

GroupPtr resolve(const std::string& ref) {
  if (!ref.empty() && ref[0] == '{') return group_from_json(ref);
  return catalog_group(ref);
}

std::vector<Index> to_indices(const std::vector<long long>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

PYBIND11_MODULE(_profin, m) {
  m.doc() = "Finite shadows of profinite completions of group extensions";

  m.def("catalog_names", &catalog_names);
  m.def(
      "group_json",
      [](const std::string& ref, int indent) {
        return group_to_json(*resolve(ref), indent);
      },
      py::arg("ref"), py::arg("indent") = -1,
      "Multiplication table of a catalog group as JSON");
  m.def(
      "group_order",
      [](const std::string& ref) { return resolve(ref)->order(); },
      py::arg("ref"));
  m.def(
      "are_isomorphic",
      [](const std::string& ref1, const std::string& ref2) {
        return are_isomorphic(resolve(ref1), resolve(ref2));
      },
      py::arg("ref1"), py::arg("ref2"));
  m.def(
      "abelianization_factors",
      [](const std::string& ref) { return abelianize(resolve(ref)).factors; },
      py::arg("ref"));

  m.def(
      "smith_normal_form",
      [](const IntMat& mat) {
        auto r = smith_normal_form(mat);
        return py::make_tuple(r.d, r.u, r.v);
      },
      py::arg("mat"), "Returns (D, U, V) with U*M*V = D");
  m.def(
      "dual_factors",
      [](const std::vector<long long>& factors) {
        return dual_group(AbGroup(factors)).factors();
      },
      py::arg("factors"));
  m.def(
      "annihilator_exps",
      [](const std::vector<long long>& factors,
         const std::vector<std::vector<long long>>& gens) {
        AbGroup a(factors);
        std::vector<std::vector<long long>> out;
        for (const auto& chi : annihilator(a, ab_span(a, gens)))
          out.push_back(chi.exps);
        return out;
      },
      py::arg("factors"), py::arg("subgroup_gens"));

  m.def(
      "reconstruct",
      [](const std::string& ref, const std::vector<long long>& n_gens,
         const std::vector<long long>& h_gens) {
        auto g = resolve(ref);
        auto rec = reconstruct_cor1(g, generate_subgroup(g, to_indices(n_gens)),
                                    generate_subgroup(g, to_indices(h_gens)));
        return py::make_tuple(rec.witness.is_bijective(), rec.b_factors);
      },
      py::arg("ref"), py::arg("n_gens"), py::arg("h_gens"),
      "Returns (isomorphism_found, b_factors)");

  m.def(
      "rf_map_verdict",
      [](bool lambda_map, bool lambda_rf, bool lambda_abelian,
         bool lambda_trivial, bool h_finite, bool h_rf) {
        auto v = rf_map_verdict({lambda_map, lambda_rf, lambda_abelian,
                                 lambda_trivial, h_finite, h_rf});
        return py::make_tuple(v.g_map, v.g_rf);
      },
      py::arg("lambda_map"), py::arg("lambda_rf"), py::arg("lambda_abelian"),
      py::arg("lambda_trivial"), py::arg("h_finite"), py::arg("h_rf"));

  m.def(
      "separating_character",
      [](long long n0,
         const std::vector<std::pair<long long, long long>>& support) {
        auto sc = separating_character(SupportedMap(n0, support));
        py::dict out;
        out["m"] = sc.m;
        out["exps"] = sc.exps;
        out["num"] = sc.value.num;
        out["den"] = sc.value.den;
        return out;
      },
      py::arg("n0"), py::arg("support"));

  m.def(
      "lamp_level_orders",
      [](long long n0, long long m, long long cap) {
        auto lv = lamp_level(n0, m, cap);
        return py::make_tuple(lv.wr.carrier->order(), lv.nhat_size());
      },
      py::arg("n0"), py::arg("m"), py::arg("cap") = kDefaultTableCap,
      "Returns (level group order, character family size)");

  m.def(
      "heisenberg_orbit",
      [](const std::string& ring_spec, const std::vector<long long>& beta,
         const std::vector<long long>& psi) {
        auto ring = FiniteRing::parse(ring_spec);
        auto h = heisenberg(ring);
        auto data = char_orbit_data(h, RingCharacter(ring, beta),
                                    RingCharacter(ring, psi));
        return py::make_tuple(data.orbit_size, data.i_psi.elems);
      },
      py::arg("ring"), py::arg("beta"), py::arg("psi"),
      "Returns (orbit size, stabilizer ideal elements)");

  m.def(
      "low_index_counts",
      [](const std::string& pres, int n_max) {
        return low_index_counts(Presentation::parse(pres), n_max);
      },
      py::arg("pres"), py::arg("n_max"));

  m.def(
      "verify_all",
      [](long long cap, int indent) {
        auto r = verify_all(cap);
        return py::make_tuple(r.all_pass(), r.to_json().dump(indent));
      },
      py::arg("cap") = kDefaultTableCap, py::arg("indent") = -1,
      "Runs the full acceptance suite; returns (all_pass, report_json)");
}
