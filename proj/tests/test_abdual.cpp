#include "doctest.h"

#include <random>
#include <vector>

#include "profin/abdual.hpp"

using namespace profin;

namespace {

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  IntMat c(a.size(), std::vector<long long>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j)
        c[i][j] += a[i][k] * b[k][j];
  return c;
}

void check_snf(const IntMat& m) {
  auto r = smith_normal_form(m);
  CHECK(mat_mul(mat_mul(r.u, m), r.v) == r.d);
  CHECK(std::abs(det(r.u)) == 1);
  CHECK(std::abs(det(r.v)) == 1);
  long long prev = 0;
  for (std::size_t i = 0; i < r.d.size() && i < r.d[0].size(); ++i) {
    for (std::size_t j = 0; j < r.d[0].size(); ++j)
      if (j != i) CHECK(r.d[i][j] == 0);
    const long long cur = r.d[i][i];
    CHECK(cur >= 0);
    if (prev != 0) CHECK((cur == 0 || cur % prev == 0));
    prev = cur;
  }
}

}  // namespace

TEST_CASE("smith normal form examples") {
  IntMat id = {{1, 0}, {0, 1}};
  auto r = smith_normal_form(id);
  CHECK(r.d == id);

  auto r2 = smith_normal_form({{2, 0}, {0, 3}});
  CHECK(r2.d == IntMat{{1, 0}, {0, 6}});
  check_snf({{2, 0}, {0, 3}});

  // d1 = gcd of entries = 2, d2 = det / d1 = 2.
  auto r3 = smith_normal_form({{2, 4}, {0, 2}});
  CHECK(r3.d == IntMat{{2, 0}, {0, 2}});
  check_snf({{2, 4}, {0, 2}});

  auto r4 = smith_normal_form({{2, 4}, {0, 4}});
  CHECK(r4.d == IntMat{{2, 0}, {0, 4}});
  check_snf({{2, 4}, {0, 4}});

  CHECK(smith_normal_form(IntMat{}).d.empty());
}

TEST_CASE("smith normal form randomized") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<long long> entry(-10, 10);
  for (int t = 0; t < 1000; ++t) {
    IntMat m(dim(rng), std::vector<long long>(dim(rng)));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    check_snf(m);
  }
}

TEST_CASE("pairing") {
  AbGroup c4({4});
  CHECK(pairing(Character(c4, {0}), {2}).is_zero());
  CHECK(pairing(Character(c4, {1}), {2}) == Rotation::of(1, 2));

  AbGroup c2c6({2, 6});
  CHECK(pairing(Character(c2c6, {1, 2}), {1, 3}) == Rotation::of(1, 2));

  AbGroup trivial;
  CHECK(pairing(Character(trivial, {}), {}).is_zero());
}

TEST_CASE("pairing bilinearity randomized") {
  std::mt19937 rng(11);
  const std::vector<std::vector<long long>> groups = {
      {4}, {2, 6}, {3, 9}, {2, 2, 4}, {12}};
  std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1);
  for (int t = 0; t < 1000; ++t) {
    AbGroup a(groups[pick(rng)]);
    std::uniform_int_distribution<long long> idx(0, a.order() - 1);
    auto c1 = a.element(idx(rng)), c2 = a.element(idx(rng));
    auto x = a.element(idx(rng)), y = a.element(idx(rng));
    CHECK(pairing(Character(a, a.add(c1, c2)), x) ==
          pairing(Character(a, c1), x) + pairing(Character(a, c2), x));
    CHECK(pairing(Character(a, c1), a.add(x, y)) ==
          pairing(Character(a, c1), x) + pairing(Character(a, c1), y));
  }
}

TEST_CASE("annihilators") {
  AbGroup c4({4});
  auto zero = ab_span(c4, {});
  CHECK(annihilator(c4, zero).size() == 4);
  auto full = ab_span(c4, {{1}});
  CHECK(annihilator(c4, full).size() == 1);
  auto half = ab_span(c4, {{2}});
  auto ann = annihilator(c4, half);
  REQUIRE(ann.size() == 2);
  CHECK(ann[0].exps == std::vector<long long>{0});
  CHECK(ann[1].exps == std::vector<long long>{2});
}

TEST_CASE("dual group and quotient characters") {
  CHECK(dual_group(AbGroup({6})).factors() == std::vector<long long>{6});
  CHECK(dual_group(AbGroup()).factors().empty());

  AbGroup a({2, 4});
  auto s = ab_span(a, {{1, 0}});
  auto chars = characters_of_quotient(a, s);
  REQUIRE(chars.size() == 4);
  // They form a cyclic group of order 4: some element has order 4.
  bool has_order4 = false;
  for (const auto& chi : chars) {
    auto doubled = a.add(chi.exps, chi.exps);
    bool is_zero = doubled == a.zero();
    if (!is_zero) has_order4 = true;
    for (long long s_idx : s.elem_indices)
      CHECK(pairing(chi, a.element(s_idx)).is_zero());
  }
  CHECK(has_order4);
}

TEST_CASE("invariant factor chains") {
  auto chains = invariant_factor_chains(4);
  // Trivial, C2, C3, C4, C2xC2.
  CHECK(chains.size() == 5);
  for (const auto& c : chains) {
    long long order = 1, prev = 1;
    for (long long d : c) {
      CHECK(d % prev == 0);
      prev = d;
      order *= d;
    }
    CHECK(order <= 4);
  }
}

TEST_CASE("subgroup enumeration sizes") {
  // C_2 x C_2 has 5 subgroups, C_4 has 3, C_6 has 4.
  CHECK(all_subgroups(AbGroup({2, 2})).size() == 5);
  CHECK(all_subgroups(AbGroup({4})).size() == 3);
  CHECK(all_subgroups(AbGroup({6})).size() == 4);
}
