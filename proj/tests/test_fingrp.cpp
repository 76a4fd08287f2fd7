#include "doctest.h"

#include <vector>

#include "profin/abdual.hpp"
#include "profin/catalog.hpp"
#include "profin/fingrp.hpp"

using namespace profin;

TEST_CASE("generate_subgroup basics") {
  auto c6 = cyclic_group(6);
  CHECK(generate_subgroup(c6, {}).elems == std::vector<Index>{0});
  CHECK(generate_subgroup(c6, {2}).elems == std::vector<Index>{0, 2, 4});

  auto s3 = symmetric3();
  // Any element of order 2 generates a subgroup of order 2.
  for (Index x = 0; x < s3->order(); ++x)
    if (s3->element_order(x) == 2)
      CHECK(generate_subgroup(s3, {x}).order() == 2);

  CHECK_THROWS_AS(generate_subgroup(c6, {6}), std::invalid_argument);
}

TEST_CASE("quotient") {
  auto c4 = cyclic_group(4);
  auto q1 = quotient(c4, generate_subgroup(c4, {2}));
  CHECK(q1.group->order() == 2);
  CHECK(q1.proj.is_surjective());

  auto s3 = symmetric3();
  Index rot = -1;
  for (Index x = 0; x < 6; ++x)
    if (s3->element_order(x) == 3) rot = x;
  auto a3 = generate_subgroup(s3, {rot});
  CHECK(a3.order() == 3);
  auto q2 = quotient(s3, a3);
  CHECK(q2.group->order() == 2);
  CHECK(q2.proj.kernel() == a3.elems);

  std::vector<Index> all(6);
  for (Index i = 0; i < 6; ++i) all[i] = i;
  CHECK(quotient(s3, Subgroup(s3, all)).group->order() == 1);

  // A non-normal subgroup is rejected.
  Index transp = -1;
  for (Index x = 0; x < 6; ++x)
    if (s3->element_order(x) == 2) transp = x;
  CHECK_THROWS_AS(quotient(s3, generate_subgroup(s3, {transp})),
                  std::invalid_argument);
}

TEST_CASE("quotient kernel exactness over normal subgroups") {
  for (const auto& g : {symmetric3(), dihedral_group(6), quaternion8(),
                        alternating4(), cyclic_group(12)}) {
    for (Index x = 0; x < g->order(); ++x) {
      auto s = generate_subgroup(g, {x});
      if (!is_normal(s)) continue;
      auto q = quotient(g, s);
      CHECK(q.proj.kernel() == s.elems);
      CHECK(q.group->order() * s.order() == g->order());
    }
  }
}

TEST_CASE("semidirect products") {
  auto c3 = cyclic_group(3);
  auto c2 = cyclic_group(2);
  auto sd = semidirect_product(c3, c2, {{0, 1, 2}, {0, 2, 1}});
  CHECK(sd.group->order() == 6);
  CHECK(!sd.group->is_abelian());
  CHECK(are_isomorphic(sd.group, symmetric3()));

  // Trivial action gives the direct product, table for table.
  auto trivial = semidirect_product(c3, c2, {{0, 1, 2}, {0, 1, 2}});
  CHECK(trivial.group->table() == direct_product(c3, c2)->table());
  CHECK(trivial.group->is_abelian());

  auto v4 = klein4();
  // Cycle the three involutions (1, 0) -> (0, 1) -> (1, 1).
  std::vector<std::vector<Index>> act = {
      {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  auto a4 = semidirect_product(v4, c3, act);
  CHECK(a4.group->order() == 12);
  CHECK(are_isomorphic(a4.group, alternating4()));

  // A non-homomorphic family is rejected: act[1]^2 = id but act[2] = inv.
  CHECK_THROWS_AS(
      semidirect_product(c3, cyclic_group(3), {{0, 1, 2}, {0, 2, 1}, {0, 2, 1}}),
      std::invalid_argument);
}

TEST_CASE("isomorphism testing") {
  CHECK(are_isomorphic(cyclic_group(6),
                       direct_product(cyclic_group(2), cyclic_group(3))));
  CHECK(!are_isomorphic(cyclic_group(8), dihedral_group(4)));
  CHECK(are_isomorphic(quaternion8(), quaternion8()));
  CHECK(!are_isomorphic(quaternion8(), dihedral_group(4)));
  auto w = find_isomorphism(symmetric3(), dihedral_group(3));
  REQUIRE(w.has_value());
  CHECK(w->is_bijective());
}

TEST_CASE("isomorphism is an equivalence on a small catalog") {
  std::vector<GroupPtr> cat;
  for (int n = 1; n <= 16; ++n) cat.push_back(cyclic_group(n));
  cat.push_back(klein4());
  cat.push_back(dihedral_group(4));
  cat.push_back(quaternion8());
  cat.push_back(symmetric3());
  cat.push_back(alternating4());
  cat.push_back(abelian_group({2, 4}));
  cat.push_back(abelian_group({2, 2, 2}));
  cat.push_back(dihedral_group(6));
  cat.push_back(direct_product(cyclic_group(2), cyclic_group(6)));

  for (std::size_t i = 0; i < cat.size(); ++i) {
    CHECK(are_isomorphic(cat[i], cat[i]));
    for (std::size_t j = i + 1; j < cat.size(); ++j) {
      const bool ij = are_isomorphic(cat[i], cat[j]);
      CHECK(ij == are_isomorphic(cat[j], cat[i]));
      if (ij)
        CHECK(fingerprint(*cat[i]) == fingerprint(*cat[j]));
    }
  }
  CHECK(are_isomorphic(cat[11], AbGroup::from_moduli({3, 4}).to_group()));
}

TEST_CASE("abelianization") {
  CHECK(abelianize(symmetric3()).factors == std::vector<long long>{2});
  CHECK(abelianize(cyclic_group(6)).factors == std::vector<long long>{6});
  CHECK(abelianize(abelian_group({2, 4})).factors ==
        std::vector<long long>{2, 4});
  CHECK(abelianize(quaternion8()).factors == std::vector<long long>{2, 2});
  CHECK(abelianize(alternating4()).factors == std::vector<long long>{3});
  auto ab = abelianize(dihedral_group(6));
  CHECK(ab.factors == std::vector<long long>{2, 2});
  CHECK(ab.proj.is_surjective());
}

TEST_CASE("json round trip") {
  auto g = dihedral_group(5);
  auto g2 = group_from_json(group_to_json(*g));
  CHECK(g2->order() == g->order());
  CHECK(g2->table() == g->table());
  CHECK(g2->label() == g->label());
  CHECK_THROWS(group_from_json("{\"label\":\"x\",\"order\":2,"
                               "\"table\":[[0,1],[0,1]]}"));
}

TEST_CASE("catalog lookups") {
  CHECK(catalog_group("S3")->order() == 6);
  CHECK(catalog_group("Q8")->order() == 8);
  CHECK(catalog_group("D6")->order() == 12);
  CHECK(catalog_group("C7:C3")->order() == 21);
  CHECK(catalog_group("Ab:2,4")->order() == 8);
  CHECK_THROWS_AS(catalog_group("nope"), std::invalid_argument);
}
