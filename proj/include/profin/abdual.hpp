#pragma once

#include <string>
#include <vector>

#include "profin/fingrp.hpp"

namespace profin {

using IntMat = std::vector<std::vector<long long>>;

/// Smith normal form: u * m * v = d with u, v unimodular and d diagonal
/// with a divisibility chain. Exact integer arithmetic.
struct SmithResult {
  IntMat d, u, v;
};
SmithResult smith_normal_form(const IntMat& m);

long long det(const IntMat& m);  // exact, fraction-free

/// An exact point of the circle group, e^{2πi·num/den}; always reduced
/// with 0 <= num < den.
struct Rotation {
  long long num = 0;
  long long den = 1;

  static Rotation of(long long num, long long den);
  Rotation operator+(const Rotation& o) const;
  bool is_zero() const { return num == 0; }
  auto operator<=>(const Rotation&) const = default;
};

/// A finite abelian group in invariant-factor form; elements are
/// exponent vectors (x_1..x_k) with x_i mod d_i. The empty factor list
/// is the trivial group.
class AbGroup {
 public:
  AbGroup() = default;
  explicit AbGroup(std::vector<long long> factors);
  /// Canonicalizes an arbitrary list of moduli via Smith normal form.
  static AbGroup from_moduli(const std::vector<long long>& moduli);

  const std::vector<long long>& factors() const { return factors_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  long long order() const { return order_; }

  std::vector<long long> element(long long index) const;
  long long index_of(const std::vector<long long>& v) const;
  std::vector<long long> add(const std::vector<long long>& a,
                             const std::vector<long long>& b) const;
  std::vector<long long> neg(const std::vector<long long>& a) const;
  std::vector<long long> zero() const;
  std::vector<long long> reduce(const std::vector<long long>& a) const;

  GroupPtr to_group(std::string label = "") const;

  bool operator==(const AbGroup&) const = default;

 private:
  std::vector<long long> factors_;
  long long order_ = 1;
};

struct Character {
  AbGroup group;
  std::vector<long long> exps;  // c_i mod d_i

  Character(AbGroup group, std::vector<long long> exps);
  bool operator==(const Character&) const = default;
  bool operator<(const Character& o) const { return exps < o.exps; }
};

/// <χ, x> = Σ c_i x_i / d_i mod 1, reduced.
Rotation pairing(const Character& chi, const std::vector<long long>& x);

/// A subgroup of an AbGroup as a sorted list of element indices;
/// closure is verified.
struct AbSubgroup {
  AbGroup group;
  std::vector<long long> elem_indices;

  AbSubgroup(AbGroup group, std::vector<long long> elem_indices);
  long long order() const { return static_cast<long long>(elem_indices.size()); }
};

AbSubgroup ab_span(const AbGroup& a,
                   const std::vector<std::vector<long long>>& gens);

/// Characters vanishing on s; satisfies |S| * |Ann(S)| = |A|. Sorted by
/// exponent vector.
std::vector<Character> annihilator(const AbGroup& a, const AbSubgroup& s);

/// Finite abelian self-duality: same invariant factors.
AbGroup dual_group(const AbGroup& a);

/// The annihilator of S, identified with the dual of A/S.
std::vector<Character> characters_of_quotient(const AbGroup& a,
                                              const AbSubgroup& s);

std::vector<Character> all_characters(const AbGroup& a);

/// All subgroups (exhaustive closure enumeration); intended for small
/// orders.
std::vector<AbSubgroup> all_subgroups(const AbGroup& a);

/// All invariant-factor chains with order <= max_order, lexicographic.
std::vector<std::vector<long long>> invariant_factor_chains(long long max_order);

}  // namespace profin
