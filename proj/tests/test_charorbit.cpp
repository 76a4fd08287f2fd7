#include "doctest.h"

#include <set>
#include <vector>

#include "profin/catalog.hpp"
#include "profin/charorbit.hpp"

using namespace profin;

namespace {

DualAction c2_inverting(std::vector<long long> factors) {
  AbGroup n(factors);
  IntMat id(n.rank(), std::vector<long long>(n.rank(), 0));
  IntMat neg = id;
  for (int i = 0; i < n.rank(); ++i) {
    id[i][i] = 1;
    neg[i][i] = -1;
  }
  return DualAction(cyclic_group(2), n, {id, neg});
}

}  // namespace

TEST_CASE("orbit and stabilizer basics") {
  auto act = c2_inverting({3});
  auto triv = orbit_and_stabilizer(act, Character(act.n, {0}));
  CHECK(triv.orbit.size() == 1);
  CHECK(triv.stabilizer.order() == 2);

  auto res = orbit_and_stabilizer(act, Character(act.n, {1}));
  REQUIRE(res.orbit.size() == 2);
  CHECK(res.orbit[0].exps == std::vector<long long>{1});
  CHECK(res.orbit[1].exps == std::vector<long long>{2});
  CHECK(res.stabilizer.order() == 1);
}

TEST_CASE("v4 with c3 cycling involutions") {
  AbGroup v4({2, 2});
  IntMat id = {{1, 0}, {0, 1}};
  IntMat cyc = {{0, 1}, {1, 1}};            // (1,0) -> (0,1) -> (1,1)
  IntMat cyc2 = {{1, 1}, {1, 0}};
  DualAction act(cyclic_group(3), v4, {id, cyc, cyc2});
  for (long long i = 1; i < 4; ++i) {
    auto res = orbit_and_stabilizer(act, Character(v4, v4.element(i)));
    CHECK(res.orbit.size() == 3);
    CHECK(res.stabilizer.order() == 1);
  }
}

TEST_CASE("periodic character group and orbit partition") {
  auto act = c2_inverting({4});
  auto chars = periodic_character_group(act);
  REQUIRE(chars.size() == 4);
  std::set<std::vector<long long>> seen;
  std::vector<std::size_t> orbit_sizes;
  for (const auto& chi : chars) {
    if (seen.count(chi.exps)) continue;
    auto res = orbit_and_stabilizer(act, chi);
    orbit_sizes.push_back(res.orbit.size());
    for (const auto& c : res.orbit) CHECK(seen.insert(c.exps).second);
  }
  CHECK(seen.size() == 4);
  CHECK(orbit_sizes == std::vector<std::size_t>{1, 2, 1});  // {0}, {1,3}, {2}
}

TEST_CASE("orbit stabilizer identity over an action catalog") {
  std::vector<DualAction> catalog;
  for (long long n = 2; n <= 8; ++n) catalog.push_back(c2_inverting({n}));
  catalog.push_back(c2_inverting({2, 4}));
  {
    AbGroup v4({2, 2});
    catalog.push_back(DualAction(cyclic_group(3), v4,
                                 {{{1, 0}, {0, 1}},
                                  {{0, 1}, {1, 1}},
                                  {{1, 1}, {1, 0}}}));
  }
  for (const auto& act : catalog)
    for (long long i = 0; i < act.n.order(); ++i) {
      Character chi(act.n, act.n.element(i));
      auto res = orbit_and_stabilizer(act, chi);
      CHECK(static_cast<long long>(res.orbit.size()) * res.stabilizer.order() ==
            act.h->order());
      // Compatibility with the pairing on every (h, x) pair.
      for (Index h = 0; h < act.h->order(); ++h) {
        auto moved = char_action(act, chi, h);
        const Index h_inv = act.h->inv(h);
        for (long long xi = 0; xi < act.n.order(); ++xi) {
          auto x = act.n.element(xi);
          CHECK(pairing(moved, x) == pairing(chi, act.apply(h_inv, x)));
        }
      }
    }
}

TEST_CASE("reconstruction of split extensions") {
  auto s3 = symmetric3();
  auto rec = reconstruct_cor1(s3, generate_subgroup(s3, {2}),
                              generate_subgroup(s3, {1}));
  CHECK(rec.witness.is_bijective());
  CHECK(rec.b_factors == std::vector<long long>{3});

  // Direct product case: C_6 = C_3 x C_2 with trivial action.
  auto c6 = cyclic_group(6);
  auto rec6 = reconstruct_cor1(c6, generate_subgroup(c6, {2}),
                               generate_subgroup(c6, {3}));
  CHECK(rec6.witness.is_bijective());
  CHECK(rec6.group->is_abelian());

  auto a4 = alternating4();
  auto rec4 = reconstruct_cor1(a4, generate_subgroup(a4, {3, 6}),
                               generate_subgroup(a4, {1}));
  CHECK(rec4.witness.is_bijective());
  CHECK(rec4.b_factors == std::vector<long long>{2, 2});

  // Non-complement H is rejected.
  CHECK_THROWS_AS(reconstruct_cor1(s3, generate_subgroup(s3, {2}),
                                   generate_subgroup(s3, {2})),
                  std::invalid_argument);
}
