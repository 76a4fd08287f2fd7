#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace profin {

/// Thrown when a construction would exceed the configured table cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Default cap on multiplication-table order; large enough for every
/// tower level at n0 <= 3, m <= 6.
inline constexpr long long kDefaultTableCap = 4500;

/// Dense element index into a multiplication table.
using Index = int;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by its full multiplication table.
///
/// Elements are dense indices 0..n-1; the table is row-major, so
/// table[g*n + h] is the index of g*h. Instances are immutable after
/// construction and safe to share between threads. Construction runs
/// the full invariant check (Latin square, identity, inverses,
/// associativity — exhaustive up to order 512, sampled above).
class FiniteGroup {
 public:
  FiniteGroup(std::string label, int order, std::vector<Index> table);

  int order() const { return order_; }
  Index mul(Index a, Index b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Index inv(Index a) const { return inv_[a]; }
  Index identity() const { return identity_; }
  const std::string& label() const { return label_; }
  const std::vector<Index>& table() const { return table_; }

  Index power(Index a, long long e) const;
  int element_order(Index a) const;
  bool is_abelian() const;
  std::vector<Index> center() const;
  /// Elements of the derived subgroup (commutator saturation), sorted.
  std::vector<Index> derived_subgroup() const;
  /// histogram[k] = number of elements of order k, for k = 1..order.
  std::vector<int> order_histogram() const;
  int centralizer_size(Index a) const;

 private:
  void validate();

  std::string label_;
  int order_;
  Index identity_ = -1;
  std::vector<Index> table_;
  std::vector<Index> inv_;
};

GroupPtr make_group(std::string label, int order, std::vector<Index> table);
GroupPtr make_group(std::string label,
                    const std::vector<std::vector<Index>>& rows);

/// A subgroup as a sorted element list; closure under product and
/// inverse is verified on construction.
struct Subgroup {
  GroupPtr parent;
  std::vector<Index> elems;

  Subgroup(GroupPtr parent, std::vector<Index> elems);
  int order() const { return static_cast<int>(elems.size()); }
  bool contains(Index x) const;
};

/// A homomorphism as the full image array; the defining identity
/// image[x*y] = image[x]*image[y] is verified on construction.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<Index> image;

  GroupHom(GroupPtr source, GroupPtr target, std::vector<Index> image);
  Index operator()(Index x) const { return image[x]; }
  std::vector<Index> kernel() const;
  std::vector<Index> image_elems() const;
  bool is_surjective() const;
  bool is_injective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
};

GroupHom compose(const GroupHom& second, const GroupHom& first);

Subgroup generate_subgroup(const GroupPtr& g, const std::vector<Index>& gens);
bool is_normal(const Subgroup& n);

struct QuotientResult {
  GroupPtr group;
  GroupHom proj;
};
/// Quotient by a normal subgroup; the returned hom is surjective with
/// kernel exactly n.
QuotientResult quotient(const GroupPtr& g, const Subgroup& n);

struct SubgroupGroup {
  GroupPtr group;
  GroupHom embed;  // into the parent
};
SubgroupGroup subgroup_as_group(const Subgroup& s, std::string label);

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

struct SemidirectResult {
  GroupPtr group;
  GroupHom embed_n;
  GroupHom embed_h;
};
/// N ⋊ H for an action given per H-element as a permutation of N.
/// Each act[h] is verified to be an automorphism and h ↦ act[h] a
/// homomorphism H → Aut(N), both exhaustively.
SemidirectResult semidirect_product(const GroupPtr& n, const GroupPtr& h,
                                    const std::vector<std::vector<Index>>& act);

/// Cheap isomorphism invariants used to filter before backtracking.
struct Fingerprint {
  int order = 0;
  bool abelian = false;
  int center_size = 0;
  int derived_size = 0;
  std::vector<int> order_histogram;
  std::vector<long long> abelianization_factors;

  bool operator==(const Fingerprint&) const = default;
};
Fingerprint fingerprint(const FiniteGroup& g);

inline constexpr int kIsoCap = 512;

/// Backtracking search over generator images, after a fingerprint
/// filter. Throws if either order exceeds the cap.
std::optional<GroupHom> find_isomorphism(const GroupPtr& g1,
                                         const GroupPtr& g2,
                                         int cap = kIsoCap);
bool are_isomorphic(const GroupPtr& g1, const GroupPtr& g2, int cap = kIsoCap);

/// Invariant factors (divisibility chain) of a finite abelian group,
/// recovered from order counting; throws if g is not abelian.
std::vector<long long> abelian_invariant_factors(const FiniteGroup& g);

struct Abelianization {
  std::vector<long long> factors;   // invariant factors of G/[G,G]
  GroupPtr group;                   // canonical mixed-radix carrier
  GroupHom proj;                    // G -> group, kernel [G,G]
};
Abelianization abelianize(const GroupPtr& g);

/// Canonical table group of ⊕ Z/d_i with mixed-radix element indexing
/// (last factor varies fastest).
GroupPtr abelian_group(const std::vector<long long>& factors,
                       std::string label = "");

// JSON group format: {"label": str, "order": n, "table": [[...], ...]}.
std::string group_to_json(const FiniteGroup& g, int indent = -1);
GroupPtr group_from_json(const std::string& text);

}  // namespace profin
