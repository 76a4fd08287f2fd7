#pragma once

#include <vector>

#include "profin/abdual.hpp"
#include "profin/fingrp.hpp"

namespace profin {

/// A finite group H acting on a finite abelian group N by
/// automorphisms, given as integer matrices on exponent vectors.
/// Construction checks that every matrix induces a bijection of N and
/// that h ↦ mats[h] is a homomorphism H → Aut(N), both exhaustively.
struct DualAction {
  GroupPtr h;
  AbGroup n;
  std::vector<IntMat> mats;  // indexed by H element

  DualAction(GroupPtr h, AbGroup n, std::vector<IntMat> mats);
  std::vector<long long> apply(Index h_elem,
                               const std::vector<long long>& x) const;
};

/// The contragredient action on characters, solved through the pairing:
/// χ^h is the unique character with <χ^h, x> = <χ, act[h⁻¹](x)> for all
/// x (computed on the basis vectors).
Character char_action(const DualAction& act, const Character& chi, Index h_elem);

struct OrbitResult {
  std::vector<Character> orbit;  // lexicographically sorted exponent vectors
  Subgroup stabilizer;           // subgroup of H
};
OrbitResult orbit_and_stabilizer(const DualAction& act, const Character& chi);

/// For finite H every orbit is finite, so this is the full dual; kept
/// as a named operation for interface uniformity with the tower
/// modules.
std::vector<Character> periodic_character_group(const DualAction& act);

/// dual(N̂) ⋊ H, the dual-side semidirect product for a given action.
SemidirectResult semidirect_of_dual(const DualAction& act);

/// The induced action on the dual group, with matrices recovered from
/// char_action on basis characters.
DualAction induced_dual_action(const DualAction& act);

struct ReconstructResult {
  GroupPtr group;     // dual(N̂^{H-per}) ⋊ H
  GroupHom witness;   // isomorphism onto the original group
  std::vector<long long> b_factors;
};

/// Rebuilds a split extension G = N ⋊ H (N abelian) from its character
/// data and returns an isomorphism witness back onto G. The double-dual
/// transport goes through the pairing, never an assumed identity.
ReconstructResult reconstruct_cor1(const GroupPtr& g, const Subgroup& n,
                                   const Subgroup& h);

}  // namespace profin
