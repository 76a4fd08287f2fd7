#pragma once

#include <utility>
#include <vector>

#include "profin/abdual.hpp"
#include "profin/fingrp.hpp"

namespace profin {

/// Restricted wreath product Λ ≀ H at finite scale: the carrier is
/// (⊕_{h∈H} Λ) ⋊ H with H permuting base coordinates by left
/// translation of indices. Base elements are maps H → Λ encoded in
/// mixed radix (coordinate |H|-1 varies fastest); carrier index =
/// base_index * |H| + h_index.
struct WreathGroup {
  GroupPtr lambda;
  GroupPtr top;
  GroupPtr carrier;
  Subgroup base;
  Subgroup complement;
  std::vector<GroupHom> coord_embeddings;  // one Λ -> carrier per h ∈ H

  long long base_order() const { return base.order(); }
  /// Decodes a base index into the coordinate map H -> Λ.
  std::vector<Index> base_element(long long base_index) const;
  long long base_index(const std::vector<Index>& f) const;
};

WreathGroup wreath_product(const GroupPtr& lambda, const GroupPtr& top,
                           long long cap = kDefaultTableCap);

struct WreathQuotient {
  WreathGroup target;  // Λ^Ab ≀ H
  GroupHom proj;       // carrier -> carrier, kernel ⊕_h [Λ,Λ]
};
/// The coordinatewise abelianization quotient Λ≀H → Λ^Ab≀H.
WreathQuotient abelianization_quotient(const WreathGroup& w,
                                       long long cap = kDefaultTableCap);

/// MAP/RF hypothesis flags for a wreath product Λ ≀ H. Construction
/// rejects inconsistent combinations (abelian ⇒ MAP, finite ⇒ RF,
/// trivial ⇒ everything).
struct RfMapFlags {
  bool lambda_map = false;
  bool lambda_rf = false;
  bool lambda_abelian = false;
  bool lambda_trivial = false;
  bool h_finite = false;
  bool h_rf = false;

  void validate() const;
};

struct RfMapVerdict {
  bool g_map = false;
  bool g_rf = false;
};
/// MAP/RF verdict for Λ ≀ H; requires Λ nontrivial.
RfMapVerdict rf_map_verdict(const RfMapFlags& flags);

/// A finitely supported map Z → C_{n0}; values are kept mod n0 and
/// zero coordinates are dropped.
struct SupportedMap {
  long long n0;
  std::vector<std::pair<long long, long long>> support;  // (k, value), sorted

  SupportedMap(long long n0, std::vector<std::pair<long long, long long>> entries);
  bool empty() const { return support.empty(); }
};

/// A period-m character of ⊕_k C_{n0} separating a given nonzero map:
/// the support residues are pairwise distinct mod m and the pairing is
/// a nonzero rotation.
struct SeparatingCharacter {
  long long m;
  std::vector<long long> exps;  // χ_k exponent per residue class, length m
  Rotation value;
};
SeparatingCharacter separating_character(const SupportedMap& f);

/// Pairing of a period-m exponent family with a finitely supported map.
Rotation periodic_pairing(long long n0, long long m,
                          const std::vector<long long>& exps,
                          const SupportedMap& f);

}  // namespace profin
