#include "doctest.h"

#include <vector>

#include "profin/catalog.hpp"
#include "profin/wreath.hpp"

using namespace profin;

TEST_CASE("wreath product construction") {
  auto w = wreath_product(cyclic_group(2), cyclic_group(2));
  CHECK(w.carrier->order() == 8);
  CHECK(are_isomorphic(w.carrier, dihedral_group(4)));
  CHECK(is_normal(w.base));

  auto trivial = wreath_product(cyclic_group(1), symmetric3());
  CHECK(are_isomorphic(trivial.carrier, symmetric3()));

  auto w23 = wreath_product(cyclic_group(2), cyclic_group(3));
  CHECK(w23.carrier->order() == 24);
  CHECK(abelianize(w23.carrier).factors == std::vector<long long>{6});

  CHECK_THROWS_AS(wreath_product(cyclic_group(4), cyclic_group(6)),
                  CapExceeded);
}

TEST_CASE("complement conjugation shifts coordinates") {
  for (const auto& lambda : {cyclic_group(2), cyclic_group(3), symmetric3()})
    for (const auto& top : {cyclic_group(2), cyclic_group(3)}) {
      auto w = wreath_product(lambda, top);
      CHECK(w.carrier->order() ==
            w.base_order() * top->order());
      CHECK(is_normal(w.base));
      const int nh = top->order();
      for (Index h = 0; h < nh; ++h) {
        const Index hc = w.complement.elems[h];
        for (long long bi = 0; bi < w.base_order(); ++bi) {
          const Index b = w.base.elems[bi];
          const Index conj =
              w.carrier->mul(w.carrier->mul(hc, b), w.carrier->inv(hc));
          auto f = w.base_element(bi);
          std::vector<Index> shifted(nh);
          for (Index k = 0; k < nh; ++k)
            shifted[k] = f[top->mul(top->inv(h), k)];
          CHECK(conj == w.base.elems[w.base_index(shifted)]);
        }
      }
    }
}

TEST_CASE("abelianization quotient") {
  auto ab = abelianization_quotient(wreath_product(cyclic_group(3), cyclic_group(2)));
  CHECK(ab.proj.is_injective());  // abelian base: isomorphism

  auto w = wreath_product(symmetric3(), cyclic_group(2));
  auto q = abelianization_quotient(w);
  CHECK(q.proj.is_surjective());
  CHECK(q.proj.kernel().size() == 9);  // |A_3|^2
  CHECK(are_isomorphic(q.target.carrier,
                       wreath_product(cyclic_group(2), cyclic_group(2)).carrier));

  // Kernel order is |[Λ,Λ]|^{|H|} across the catalog.
  for (const auto& lambda : {cyclic_group(2), cyclic_group(3), symmetric3()})
    for (const auto& top : {cyclic_group(2), cyclic_group(3)}) {
      auto wr = wreath_product(lambda, top);
      auto qq = abelianization_quotient(wr);
      long long want = 1;
      const auto derived = lambda->derived_subgroup().size();
      for (int i = 0; i < top->order(); ++i) want *= derived;
      CHECK(static_cast<long long>(qq.proj.kernel().size()) == want);
    }
}

TEST_CASE("rf map verdict") {
  auto lamp = rf_map_verdict({true, true, true, false, false, true});
  CHECK(lamp.g_map);
  CHECK(lamp.g_rf);

  auto s3z = rf_map_verdict({true, true, false, false, false, true});
  CHECK(!s3z.g_map);
  CHECK(!s3z.g_rf);

  auto s3fin = rf_map_verdict({true, true, false, false, true, true});
  CHECK(s3fin.g_map);
  CHECK(s3fin.g_rf);

  // Trivial lambda is outside the corollary's hypothesis.
  CHECK_THROWS_AS(rf_map_verdict({true, true, true, true, false, true}),
                  std::invalid_argument);
  // Abelian forces MAP.
  CHECK_THROWS_AS(rf_map_verdict({false, false, true, false, false, true}),
                  std::invalid_argument);
  // Finite forces RF.
  CHECK_THROWS_AS(rf_map_verdict({true, true, true, false, true, false}),
                  std::invalid_argument);
}

TEST_CASE("separating characters, pinned examples") {
  {
    SupportedMap f(2, {{0, 1}});
    auto sc = separating_character(f);
    CHECK(sc.m == 1);
    CHECK(sc.value == Rotation::of(1, 2));
  }
  {
    SupportedMap f(2, {{0, 1}, {3, 1}});
    auto sc = separating_character(f);
    // Exponent-1 characters cancel (1/2 + 1/2); the adjustment zeroes
    // one coordinate, leaving value 1/2.
    CHECK(sc.value == Rotation::of(1, 2));
    CHECK(periodic_pairing(2, sc.m, sc.exps, f) == sc.value);
  }
  {
    SupportedMap f(3, {{-1, 1}, {5, 2}});
    auto sc = separating_character(f);
    CHECK(sc.m == 7);  // residues collide at m = 6
    CHECK(!sc.value.is_zero());
    CHECK(sc.value.den == 3);
  }
  CHECK_THROWS_AS(separating_character(SupportedMap(2, {})),
                  std::invalid_argument);
  // Entries that cancel mod n0 leave the zero map.
  CHECK(SupportedMap(2, {{4, 1}, {4, 1}}).empty());
}
