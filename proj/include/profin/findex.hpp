#pragma once

#include <string>
#include <vector>

#include "profin/fingrp.hpp"

namespace profin {

/// A finitely presented group: rank generators and relator words as
/// signed 1-based generator indices (negative = inverse). Words are
/// freely reduced on load.
struct Presentation {
  int rank = 0;
  std::vector<std::vector<int>> relators;

  Presentation(int rank, std::vector<std::vector<int>> relators);
  /// Parses "a,b;abAB,aa" — generators as lowercase letters, inverses
  /// uppercase, relators comma-separated after the semicolon.
  static Presentation parse(const std::string& text);
  std::string to_string() const;
};

/// A subgroup of index n as a standardized coset table: n rows, one
/// column per generator and per inverse (column 2g for generator g,
/// 2g+1 for its inverse). Coset 0 is the subgroup; cosets are labeled
/// in scan-order of first appearance, which makes the table canonical.
struct SubgroupRecord {
  int index = 0;
  int rank = 0;
  std::vector<int> table;  // index * (2*rank), row-major

  int act(int coset, int gen) const { return table[coset * 2 * rank + 2 * gen]; }
  int act_inv(int coset, int gen) const {
    return table[coset * 2 * rank + 2 * gen + 1];
  }
  /// Permutation of cosets induced by a generator.
  std::vector<int> gen_perm(int gen) const;
};

inline constexpr int kMaxPresentationRank = 3;
inline constexpr int kMaxLowIndex = 7;

/// All subgroups of index <= n_max, each exactly once in canonical
/// form, by backtracking over partial coset tables with relator-trace
/// pruning. Sorted by index, then table.
std::vector<SubgroupRecord> low_index_subgroups(const Presentation& p,
                                                int n_max);

/// Full verification of a record against its presentation: generator
/// columns are permutations, relators act trivially, action transitive.
bool verify_record(const Presentation& p, const SubgroupRecord& rec);

/// Subgroup counts per index 1..n_max.
std::vector<int> low_index_counts(const Presentation& p, int n_max);

struct CoreQuotient {
  GroupPtr group;
  std::vector<Index> generator_images;
};
/// The image of the presented group in the product of all its coset
/// actions of index <= n; a finite quotient whose kernel is the
/// intersection of all index-<=n subgroups.
CoreQuotient core_quotient(const Presentation& p, int n,
                           long long cap = kDefaultTableCap);

}  // namespace profin
