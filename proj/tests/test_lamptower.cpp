#include "doctest.h"

#include <vector>

#include "profin/catalog.hpp"
#include "profin/lamptower.hpp"

using namespace profin;

TEST_CASE("level construction") {
  auto l21 = lamp_level(2, 1);
  CHECK(l21.wr.carrier->order() == 2);
  CHECK(l21.nhat_size() == 2);

  auto l23 = lamp_level(2, 3);
  CHECK(l23.wr.carrier->order() == 24);
  CHECK(l23.nhat_size() == 8);

  auto l32 = lamp_level(3, 2);
  CHECK(l32.wr.carrier->order() == 18);
  CHECK(l32.nhat_size() == 9);

  CHECK_THROWS_AS(lamp_level(3, 6, 100), CapExceeded);
}

TEST_CASE("lamp pairing is the coordinate sum") {
  CHECK(lamp_pairing(2, {1, 0, 1}, {1, 1, 0}) == Rotation::of(1, 2));
  CHECK(lamp_pairing(3, {1, 2}, {1, 1}).is_zero());
  CHECK(lamp_pairing(3, {1, 2}, {2, 1}) == Rotation::of(1, 3));
}

TEST_CASE("tower projection") {
  auto l4 = lamp_level(2, 4);
  auto l2 = lamp_level(2, 2);

  auto self = tower_projection(l4, l4);
  for (int x = 0; x < l4.wr.carrier->order(); ++x)
    CHECK(self.group_proj.image[x] == x);

  auto map = tower_projection(l4, l2);
  CHECK(map.group_proj.is_surjective());
  // Indicator of {0} maps to the indicator of {0}; indicator of {0, 2}
  // collapses into one fiber and cancels mod 2.
  CHECK(map.base_proj({1, 0, 0, 0}) == std::vector<long long>{1, 0});
  CHECK(map.base_proj({1, 0, 1, 0}) == std::vector<long long>{0, 0});
  CHECK(check_duality_identity(l4, l2, map));

  auto l63 = tower_projection(lamp_level(3, 6), lamp_level(3, 3));
  CHECK(l63.group_proj.kernel().size() == 54);

  CHECK_THROWS_AS(tower_projection(lamp_level(2, 4), lamp_level(2, 3)),
                  std::invalid_argument);
}

TEST_CASE("fixed characters of the shift") {
  auto l4 = lamp_level(2, 4);
  auto fixed = shift_fixed_characters(l4, 2);
  CHECK(fixed.size() == 4);  // period-2 families inside period 4
  for (const auto& phi : fixed) {
    CHECK(phi[0] == phi[2]);
    CHECK(phi[1] == phi[3]);
  }
}

TEST_CASE("level isomorphism with the character-side build") {
  auto iso21 = verify_level_iso(2, 1);
  CHECK(iso21.witness.is_bijective());
  CHECK(are_isomorphic(iso21.rebuilt, cyclic_group(2)));

  auto iso22 = verify_level_iso(2, 2);
  CHECK(iso22.witness.is_bijective());
  CHECK(are_isomorphic(iso22.rebuilt, dihedral_group(4)));

  auto iso32 = verify_level_iso(3, 2);
  CHECK(iso32.witness.is_bijective());
  CHECK(iso32.rebuilt->order() == 18);
}
