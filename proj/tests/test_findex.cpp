#include "doctest.h"

#include <set>
#include <vector>

#include "profin/catalog.hpp"
#include "profin/findex.hpp"
#include "profin/verify.hpp"

using namespace profin;

TEST_CASE("presentation parsing") {
  auto p = Presentation::parse("a,b;abAB,aa");
  CHECK(p.rank == 2);
  CHECK(p.relators.size() == 2);
  CHECK(p.to_string() == "a,b;abAB,aa");
  // Free reduction drops a cancelling relator.
  CHECK(Presentation::parse("a;aA").relators.empty());
  CHECK_THROWS_AS(Presentation::parse("a;ab"), std::invalid_argument);
  CHECK_THROWS_AS(Presentation::parse(";"), std::invalid_argument);
}

TEST_CASE("low index counts match closed forms and oracles") {
  auto z = Presentation::parse("a;");
  CHECK(low_index_counts(z, 7) == std::vector<int>(7, 1));

  auto z2 = Presentation::parse("a,b;abAB");
  auto counts = low_index_counts(z2, 6);
  CHECK(counts == std::vector<int>{1, 3, 4, 7, 6, 12});
  for (int n = 1; n <= 6; ++n) {
    CHECK(counts[n - 1] == sigma_divisor_sum(n));
    CHECK(counts[n - 1] == hermite_sublattice_count(n));
  }

  auto f2 = Presentation::parse("a,b;");
  auto fcounts = low_index_counts(f2, 3);
  CHECK(fcounts == std::vector<int>{1, 3, 13});
  CHECK(fcounts[1] == transitive_action_subgroup_count(2, 2));
  CHECK(fcounts[2] == transitive_action_subgroup_count(2, 3));

  CHECK_THROWS_AS(low_index_subgroups(f2, 8), std::invalid_argument);
  CHECK_THROWS_AS(low_index_subgroups(Presentation::parse("a,b,c,d;"), 2),
                  std::invalid_argument);
}

TEST_CASE("records verify and are pairwise distinct") {
  auto f2 = Presentation::parse("a,b;");
  auto records = low_index_subgroups(f2, 3);
  std::set<std::vector<int>> tables;
  for (const auto& rec : records) {
    CHECK(verify_record(f2, rec));
    CHECK(tables.insert(rec.table).second);
  }
}

TEST_CASE("core quotients") {
  auto z = Presentation::parse("a;");
  auto core4 = core_quotient(z, 4);
  CHECK(are_isomorphic(core4.group, cyclic_group(12)));  // lcm(1..4)
  CHECK(core4.generator_images.size() == 1);
  CHECK(core4.group->element_order(core4.generator_images[0]) == 12);

  auto z2 = Presentation::parse("a,b;abAB");
  auto core2 = core_quotient(z2, 2);
  CHECK(core2.group->order() == 4);
  CHECK(abelian_invariant_factors(*core2.group) ==
        std::vector<long long>{2, 2});

  CHECK(core_quotient(z, 1).group->order() == 1);
}
