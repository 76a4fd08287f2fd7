#pragma once

#include <array>
#include <string>
#include <vector>

#include "profin/abdual.hpp"
#include "profin/fingrp.hpp"

namespace profin {

/// A finite commutative unital ring Z/n_1 × ... × Z/n_k with
/// componentwise operations; elements are indexed in mixed radix.
class FiniteRing {
 public:
  explicit FiniteRing(std::vector<long long> components);
  /// Parses "4" or "2x3" style descriptions.
  static FiniteRing parse(const std::string& text);

  const std::vector<long long>& components() const { return comps_; }
  long long order() const { return order_; }
  int rank() const { return static_cast<int>(comps_.size()); }
  std::string label() const;

  std::vector<long long> element(long long index) const;
  long long index_of(const std::vector<long long>& v) const;
  long long add(long long a, long long b) const;
  long long mul(long long a, long long b) const;
  long long neg(long long a) const;
  long long zero() const { return 0; }
  long long one() const;

  bool operator==(const FiniteRing&) const = default;

 private:
  std::vector<long long> comps_;
  long long order_ = 1;
};

/// An ideal as a sorted element-index set; additive closure and
/// multiplicative absorption are verified.
struct Ideal {
  FiniteRing ring;
  std::vector<long long> elems;

  Ideal(FiniteRing ring, std::vector<long long> elems);
  long long order() const { return static_cast<long long>(elems.size()); }
  bool contains(long long x) const;
};

/// Complete ideal list, sorted by size then lexicographically.
std::vector<Ideal> ideals(const FiniteRing& r);

/// H(R) on triples (a,b,c) with (a,b,c)(a',b',c') = (a+a', b+b',
/// c+c'+ab'); element index = (a*|R| + b)*|R| + c. The designated
/// subgroups are N = {(0,b,c)} ≅ R² and H = {(a,0,0)} ≅ R.
struct HeisenbergGroup {
  FiniteRing ring;
  GroupPtr group;
  Subgroup n_part;
  Subgroup h_part;

  long long encode(long long a, long long b, long long c) const;
  std::array<long long, 3> decode(long long idx) const;
};
HeisenbergGroup heisenberg(const FiniteRing& r,
                           long long cap = kDefaultTableCap);

/// The level group H(R, I) on R × R × (R/I) with the projected group
/// law, plus the canonical epimorphism from H(R) (kernel
/// {(0,0,c) : c ∈ I}).
struct HeisLevel {
  FiniteRing ring;
  Ideal ideal;
  GroupPtr group;
  GroupHom proj;  // from heisenberg(ring)
};
HeisLevel h_level(const HeisenbergGroup& h, const Ideal& i);

/// Connecting epimorphism H(R, I) -> H(R, J) for I ⊆ J.
GroupHom h_level_connecting(const HeisLevel& fine, const HeisLevel& coarse);

/// A character of the additive group of R as an exponent vector;
/// <c, x> = Σ c_i x_i / n_i.
struct RingCharacter {
  FiniteRing ring;
  std::vector<long long> exps;

  RingCharacter(FiniteRing ring, std::vector<long long> exps);
  Rotation operator()(long long elem_index) const;
  bool is_trivial_on(long long elem_index) const {
    return (*this)(elem_index).is_zero();
  }
};

/// Orbit/stabilizer data of χ_{β,ψ} under conjugation by H = {(a,0,0)},
/// computed by brute force, together with the stabilizer ideal
/// I_ψ = {a : aR ⊆ ker ψ}. The orbit-size and stabilizer identities
/// are verified internally.
struct CharOrbitData {
  long long orbit_size = 0;
  Ideal i_psi;
  std::vector<long long> stabilizer_a;  // ring elements a with (a,0,0) fixing χ
};
CharOrbitData char_orbit_data(const HeisenbergGroup& h, const RingCharacter& beta,
                              const RingCharacter& psi);

}  // namespace profin
