#pragma once

#include <vector>

#include "profin/abdual.hpp"
#include "profin/charorbit.hpp"
#include "profin/wreath.hpp"

namespace profin {

/// One finite level C_{n0} ≀ C_m of the lamplighter tower. A_m is the
/// group of maps C_m → C_{n0} (the wreath base), and the period-m
/// character family N̂(m) is indexed by the same exponent vectors, with
/// the pairing <f̄, Φ> = Σ_k Φ(k)·f̄(k)/n0 mod 1.
struct LampLevel {
  long long n0;
  long long m;
  WreathGroup wr;
  AbGroup a_m;  // factors [n0] * m

  long long nhat_size() const { return a_m.order(); }
};

LampLevel lamp_level(long long n0, long long m, long long cap = kDefaultTableCap);

Rotation lamp_pairing(long long n0, const std::vector<long long>& f_bar,
                      const std::vector<long long>& phi);

/// Connecting data between levels m1 and m2 | m1: the character
/// injection N̂(m2) → N̂(m1), the base projection A(m1) → A(m2) by
/// fiber sums, and the verified carrier epimorphism.
struct TowerMap {
  long long n0, m1, m2;
  GroupHom group_proj;

  std::vector<long long> char_inj(const std::vector<long long>& phi2) const;
  std::vector<long long> base_proj(const std::vector<long long>& f1) const;
};

TowerMap tower_projection(const LampLevel& from, const LampLevel& to);

/// Exhaustive check of the defining identity
/// <p(f̄), Φ> = <f̄, Φ∘i> over all pairs; the fiber-sum closed form for
/// p is only trusted because this validation ships as a test.
bool check_duality_identity(const LampLevel& from, const LampLevel& to,
                            const TowerMap& map);

/// The level group rebuilt from its character data — dual(N̂(m)) with
/// the shift dual action, semidirect with C_m — with an isomorphism
/// witness onto the wreath carrier.
struct LevelIso {
  GroupPtr rebuilt;
  GroupHom witness;
};
LevelIso verify_level_iso(long long n0, long long m,
                          long long cap = kDefaultTableCap);

/// Characters of period m1 fixed by the subgroup m2·Z/m1·Z of the
/// shift action; equals the image of char_inj.
std::vector<std::vector<long long>> shift_fixed_characters(
    const LampLevel& from, long long m2);

}  // namespace profin
