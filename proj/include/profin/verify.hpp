#pragma once

#include <string>
#include <utility>
#include <vector>

#include "profin/fingrp.hpp"
#include "profin/report.hpp"

namespace profin {

/// Split-extension catalog used by the reconstruction suite: the group
/// together with generator indices for the abelian normal part and a
/// complement.
struct SplitCase {
  std::string name;
  GroupPtr group;
  std::vector<Index> n_gens;
  std::vector<Index> h_gens;
};
std::vector<SplitCase> split_extension_catalog();

// One report per acceptance criterion.
Report verify_duality();
Report verify_reconstruction();
Report verify_lamplighter_tower(long long cap = kDefaultTableCap);
Report verify_heisenberg_suite(long long cap = kDefaultTableCap);
Report verify_rf_map_table();
Report verify_separating_characters();
Report verify_low_index();

/// Aggregates every suite above (criterion order preserved).
Report verify_all(long long cap = kDefaultTableCap);

// Independent oracles, shipped so the counting criteria check against
// a second route.
long long sigma_divisor_sum(long long n);
/// Number of index-n sublattices of Z², counted by Hermite normal forms.
long long hermite_sublattice_count(long long n);
/// Number of index-n subgroups of the free group F_r, counted via
/// transitive tuples of permutations on n points.
long long transitive_action_subgroup_count(int r, int n);

}  // namespace profin
