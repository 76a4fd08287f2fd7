#include "doctest.h"

#include <vector>

#include "profin/catalog.hpp"
#include "profin/charorbit.hpp"
#include "profin/heisen.hpp"

using namespace profin;

TEST_CASE("ring parsing and arithmetic") {
  auto r = FiniteRing::parse("2x3");
  CHECK(r.order() == 6);
  CHECK(r.rank() == 2);
  CHECK(r.mul(r.one(), 5) == 5);
  CHECK(r.add(5, 5) == r.index_of({0, 1}));
  CHECK_THROWS_AS(FiniteRing::parse("1"), std::invalid_argument);
}

TEST_CASE("heisenberg construction") {
  auto h2 = heisenberg(FiniteRing({2}));
  CHECK(h2.group->order() == 8);
  CHECK(are_isomorphic(h2.group, dihedral_group(4)));
  // D_4 signature: five involutions.
  CHECK(h2.group->order_histogram()[2] == 5);

  auto h3 = heisenberg(FiniteRing({3}));
  CHECK(h3.group->order() == 27);
  for (Index x = 1; x < h3.group->order(); ++x)
    CHECK(h3.group->element_order(x) == 3);

  auto h22 = heisenberg(FiniteRing({2, 2}));
  CHECK(h22.group->order() == 64);
  CHECK(are_isomorphic(h22.group, direct_product(h2.group, h2.group)));

  CHECK_THROWS_AS(heisenberg(FiniteRing({4}), 50), CapExceeded);
}

TEST_CASE("ideal enumeration") {
  CHECK(ideals(FiniteRing({12})).size() == 6);
  CHECK(ideals(FiniteRing({2, 3})).size() == 4);
  for (const auto& ring : {FiniteRing({4}), FiniteRing({2, 2})}) {
    auto list = ideals(ring);
    CHECK(list.front().order() == 1);
    CHECK(list.back().order() == ring.order());
  }
}

TEST_CASE("level groups") {
  FiniteRing r4({4});
  auto h = heisenberg(r4);
  auto all = ideals(r4);

  for (const auto& ideal : all) {
    auto level = h_level(h, ideal);
    CHECK(level.proj.is_surjective());
    CHECK(level.proj.kernel().size() == static_cast<std::size_t>(ideal.order()));
    if (ideal.order() == r4.order()) {
      CHECK(level.group->is_abelian());
      CHECK(level.group->order() == 16);
    }
    if (ideal.order() == 1)
      CHECK(are_isomorphic(level.group, h.group));
    if (ideal.order() == 2) {
      CHECK(level.group->order() == 32);
      CHECK(level.proj.kernel().size() == 2);
    }
  }
}

TEST_CASE("character orbits and stabilizer ideals") {
  FiniteRing r4({4});
  auto h = heisenberg(r4);

  auto triv = char_orbit_data(h, RingCharacter(r4, {1}), RingCharacter(r4, {0}));
  CHECK(triv.orbit_size == 1);
  CHECK(triv.i_psi.order() == 4);

  auto half = char_orbit_data(h, RingCharacter(r4, {0}), RingCharacter(r4, {2}));
  CHECK(half.orbit_size == 2);
  CHECK(half.i_psi.elems == std::vector<long long>{0, 2});
  CHECK(half.stabilizer_a == std::vector<long long>{0, 2});

  FiniteRing r3({3});
  auto h3 = heisenberg(r3);
  auto full = char_orbit_data(h3, RingCharacter(r3, {0}), RingCharacter(r3, {1}));
  CHECK(full.orbit_size == 3);
  CHECK(full.i_psi.order() == 1);
}

TEST_CASE("full-level reconstruction for small rings") {
  for (const auto& spec : {"2", "3", "4", "2x2"}) {
    auto h = heisenberg(FiniteRing::parse(spec));
    auto rec = reconstruct_cor1(h.group, h.n_part, h.h_part);
    CHECK(rec.witness.is_bijective());
  }
}
