#pragma once

#include <string>
#include <vector>

#include "profin/fingrp.hpp"

namespace profin {

GroupPtr cyclic_group(int n);
/// Dihedral group of order 2n (C_n ⋊ C_2 by inversion).
GroupPtr dihedral_group(int n);
GroupPtr symmetric3();
GroupPtr klein4();
GroupPtr alternating4();
GroupPtr quaternion8();
/// C_7 ⋊ C_3, the action multiplying by 2 (order 3 mod 7).
GroupPtr c7_c3();

/// Looks up a named catalog entry: "S3", "D4".."D8", "A4", "Q8",
/// "V4", "Cn:k" (cyclic of order k), or "Ab:d1,d2,..." (invariant
/// factors). Throws on unknown names.
GroupPtr catalog_group(const std::string& name);

std::vector<std::string> catalog_names();

}  // namespace profin
