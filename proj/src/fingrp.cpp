#include "profin/fingrp.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace profin {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

}  // namespace

FiniteGroup::FiniteGroup(std::string label, int order, std::vector<Index> table)
    : label_(std::move(label)), order_(order), table_(std::move(table)) {
  if (order_ < 1) fail("group order must be positive");
  if (table_.size() != static_cast<std::size_t>(order_) * order_)
    fail("table size does not match order");
  validate();
}

void FiniteGroup::validate() {
  const int n = order_;
  for (Index x : table_)
    if (x < 0 || x >= n) fail("table entry out of range");

  // Latin square: every row and column is a permutation.
  std::vector<char> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      Index v = table_[static_cast<std::size_t>(r) * n + c];
      if (seen[v]) fail("row " + std::to_string(r) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      Index v = table_[static_cast<std::size_t>(r) * n + c];
      if (seen[v]) fail("column " + std::to_string(c) + " is not a permutation");
      seen[v] = 1;
    }
  }

  // Two-sided identity.
  identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) fail("no identity element");

  // Inverses.
  auto& inv = inv_;
  inv.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (mul(x, y) == identity_ && mul(y, x) == identity_) {
        inv[x] = y;
        break;
      }
    }
    if (inv[x] < 0) fail("element without inverse");
  }

  // Associativity: exhaustive at small orders, sampled above.
  if (n <= 512) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            fail("associativity fails");
  } else {
    std::mt19937 rng(static_cast<std::uint32_t>(n));
    std::uniform_int_distribution<int> dist(0, n - 1);
    for (int i = 0; i < 200000; ++i) {
      int a = dist(rng), b = dist(rng), c = dist(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        fail("associativity fails (sampled)");
    }
  }
}

Index FiniteGroup::power(Index a, long long e) const {
  if (e < 0) return power(inv_[a], -e);
  Index acc = identity_;
  Index base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(Index a) const {
  Index x = a;
  int k = 1;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<Index> FiniteGroup::center() const {
  std::vector<Index> out;
  for (int a = 0; a < order_; ++a) {
    bool central = true;
    for (int b = 0; b < order_ && central; ++b)
      central = mul(a, b) == mul(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<Index> FiniteGroup::derived_subgroup() const {
  std::set<Index> elems = {identity_};
  std::vector<Index> frontier;
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) {
      Index c = mul(mul(inv_[a], inv_[b]), mul(a, b));
      if (elems.insert(c).second) frontier.push_back(c);
    }
  // Close the commutator set under multiplication.
  while (!frontier.empty()) {
    Index x = frontier.back();
    frontier.pop_back();
    for (Index y : std::vector<Index>(elems.begin(), elems.end())) {
      for (Index z : {mul(x, y), mul(y, x)})
        if (elems.insert(z).second) frontier.push_back(z);
    }
  }
  return {elems.begin(), elems.end()};
}

std::vector<int> FiniteGroup::order_histogram() const {
  std::vector<int> hist(order_ + 1, 0);
  for (int a = 0; a < order_; ++a) ++hist[element_order(a)];
  return hist;
}

int FiniteGroup::centralizer_size(Index a) const {
  int k = 0;
  for (int b = 0; b < order_; ++b)
    if (mul(a, b) == mul(b, a)) ++k;
  return k;
}

GroupPtr make_group(std::string label, int order, std::vector<Index> table) {
  return std::make_shared<FiniteGroup>(std::move(label), order,
                                       std::move(table));
}

GroupPtr make_group(std::string label,
                    const std::vector<std::vector<Index>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Index> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) fail("table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return make_group(std::move(label), n, std::move(flat));
}

Subgroup::Subgroup(GroupPtr parent_, std::vector<Index> elems_)
    : parent(std::move(parent_)), elems(std::move(elems_)) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty()) fail("subgroup must contain the identity");
  for (Index x : elems)
    if (x < 0 || x >= parent->order()) fail("subgroup element out of range");
  if (!std::binary_search(elems.begin(), elems.end(), parent->identity()))
    fail("subgroup must contain the identity");
  for (Index x : elems) {
    if (!std::binary_search(elems.begin(), elems.end(), parent->inv(x)))
      fail("subgroup not closed under inverse");
    for (Index y : elems)
      if (!std::binary_search(elems.begin(), elems.end(), parent->mul(x, y)))
        fail("subgroup not closed under product");
  }
}

bool Subgroup::contains(Index x) const {
  return std::binary_search(elems.begin(), elems.end(), x);
}

GroupHom::GroupHom(GroupPtr source_, GroupPtr target_, std::vector<Index> image_)
    : source(std::move(source_)), target(std::move(target_)),
      image(std::move(image_)) {
  const int n = source->order();
  if (static_cast<int>(image.size()) != n) fail("hom image length mismatch");
  for (Index v : image)
    if (v < 0 || v >= target->order()) fail("hom image out of range");
  if (image[source->identity()] != target->identity())
    fail("hom does not preserve the identity");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (image[source->mul(x, y)] != target->mul(image[x], image[y]))
        fail("not a homomorphism");
}

std::vector<Index> GroupHom::kernel() const {
  std::vector<Index> out;
  for (int x = 0; x < source->order(); ++x)
    if (image[x] == target->identity()) out.push_back(x);
  return out;
}

std::vector<Index> GroupHom::image_elems() const {
  std::vector<Index> out(image);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool GroupHom::is_surjective() const {
  return static_cast<int>(image_elems().size()) == target->order();
}

bool GroupHom::is_injective() const {
  return static_cast<int>(kernel().size()) == 1;
}

GroupHom compose(const GroupHom& second, const GroupHom& first) {
  if (first.target.get() != second.source.get())
    fail("compose: middle groups differ");
  std::vector<Index> img(first.source->order());
  for (int x = 0; x < first.source->order(); ++x)
    img[x] = second.image[first.image[x]];
  return {first.source, second.target, std::move(img)};
}

Subgroup generate_subgroup(const GroupPtr& g, const std::vector<Index>& gens) {
  for (Index x : gens)
    if (x < 0 || x >= g->order()) fail("generator index out of range");
  std::vector<char> in(g->order(), 0);
  std::vector<Index> elems = {g->identity()};
  in[g->identity()] = 1;
  std::vector<Index> frontier = elems;
  for (Index x : gens)
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
      frontier.push_back(x);
    }
  while (!frontier.empty()) {
    Index x = frontier.back();
    frontier.pop_back();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (Index z : {g->mul(x, elems[i]), g->mul(elems[i], x), g->inv(x)}) {
        if (!in[z]) {
          in[z] = 1;
          elems.push_back(z);
          frontier.push_back(z);
        }
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return {g, std::move(elems)};
}

bool is_normal(const Subgroup& n) {
  const auto& g = *n.parent;
  for (int a = 0; a < g.order(); ++a)
    for (Index x : n.elems)
      if (!n.contains(g.mul(g.mul(a, x), g.inv(a)))) return false;
  return true;
}

QuotientResult quotient(const GroupPtr& g, const Subgroup& n) {
  if (n.parent.get() != g.get()) fail("quotient: subgroup of another group");
  if (!is_normal(n)) fail("quotient: subgroup is not normal");
  const int ord = g->order();
  // Cosets, keyed by their minimal element.
  std::vector<Index> coset_min(ord, -1);
  std::vector<Index> reps;
  for (int a = 0; a < ord; ++a) {
    if (coset_min[a] >= 0) continue;
    reps.push_back(a);
    for (Index x : n.elems) coset_min[g->mul(a, x)] = a;
  }
  std::vector<int> coset_id(ord);
  for (int a = 0; a < ord; ++a) {
    auto it = std::lower_bound(reps.begin(), reps.end(), coset_min[a]);
    coset_id[a] = static_cast<int>(it - reps.begin());
  }
  const int q = static_cast<int>(reps.size());
  std::vector<Index> table(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[static_cast<std::size_t>(i) * q + j] =
          coset_id[g->mul(reps[i], reps[j])];
  auto qg = make_group(g->label() + "/" + std::to_string(n.order()), q,
                       std::move(table));
  GroupHom proj(g, qg, std::vector<Index>(coset_id.begin(), coset_id.end()));
  if (!proj.is_surjective() ||
      proj.kernel() != n.elems)
    fail("quotient: projection failed verification");
  return {qg, std::move(proj)};
}

SubgroupGroup subgroup_as_group(const Subgroup& s, std::string label) {
  const auto& g = *s.parent;
  const int m = s.order();
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < m; ++i) pos[s.elems[i]] = i;
  std::vector<Index> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i) * m + j] =
          pos[g.mul(s.elems[i], s.elems[j])];
  auto sub = make_group(std::move(label), m, std::move(table));
  return {sub, GroupHom(sub, s.parent, s.elems)};
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const int na = a->order(), nb = b->order();
  const int n = na * nb;
  std::vector<Index> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const int ai = i / nb, bi = i % nb;
    for (int j = 0; j < n; ++j) {
      const int aj = j / nb, bj = j % nb;
      table[static_cast<std::size_t>(i) * n + j] =
          a->mul(ai, aj) * nb + b->mul(bi, bj);
    }
  }
  return make_group(a->label() + "x" + b->label(), n, std::move(table));
}

SemidirectResult semidirect_product(const GroupPtr& n, const GroupPtr& h,
                                    const std::vector<std::vector<Index>>& act) {
  const int nn = n->order(), nh = h->order();
  if (static_cast<int>(act.size()) != nh) fail("semidirect: one map per H element");
  for (const auto& a : act) {
    if (static_cast<int>(a.size()) != nn) fail("semidirect: map size mismatch");
    std::vector<char> seen(nn, 0);
    for (Index v : a) {
      if (v < 0 || v >= nn || seen[v]) fail("semidirect: act[h] not bijective");
      seen[v] = 1;
    }
    for (int x = 0; x < nn; ++x)
      for (int y = 0; y < nn; ++y)
        if (a[n->mul(x, y)] != n->mul(a[x], a[y]))
          fail("semidirect: act[h] not multiplicative");
  }
  for (int h1 = 0; h1 < nh; ++h1)
    for (int h2 = 0; h2 < nh; ++h2) {
      const auto& composite = act[h->mul(h1, h2)];
      for (int x = 0; x < nn; ++x)
        if (composite[x] != act[h1][act[h2][x]])
          fail("semidirect: act is not a homomorphism H -> Aut(N)");
    }

  // Pairs (n, h), index = n*|H| + h; (n1,h1)(n2,h2) = (n1 * act[h1](n2), h1 h2).
  const long long total = static_cast<long long>(nn) * nh;
  const int tot = static_cast<int>(total);
  std::vector<Index> table(static_cast<std::size_t>(tot) * tot);
  for (int i = 0; i < tot; ++i) {
    const int n1 = i / nh, h1 = i % nh;
    for (int j = 0; j < tot; ++j) {
      const int n2 = j / nh, h2 = j % nh;
      table[static_cast<std::size_t>(i) * tot + j] =
          n->mul(n1, act[h1][n2]) * nh + h->mul(h1, h2);
    }
  }
  auto g = make_group(n->label() + ":" + h->label(), tot, std::move(table));
  std::vector<Index> en(nn), eh(nh);
  for (int x = 0; x < nn; ++x) en[x] = x * nh + h->identity();
  for (int y = 0; y < nh; ++y) eh[y] = n->identity() * nh + y;
  return {g, GroupHom(n, g, std::move(en)), GroupHom(h, g, std::move(eh))};
}

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint f;
  f.order = g.order();
  f.abelian = g.is_abelian();
  f.center_size = static_cast<int>(g.center().size());
  f.derived_size = static_cast<int>(g.derived_subgroup().size());
  f.order_histogram = g.order_histogram();
  // Abelianization type via the quotient's order counting.
  auto self = std::make_shared<FiniteGroup>(g);
  auto q = quotient(self, Subgroup(self, g.derived_subgroup()));
  f.abelianization_factors = abelian_invariant_factors(*q.group);
  return f;
}

namespace {

// Greedy generating sequence: repeatedly adjoin the element of largest
// order outside the current subgroup (smallest index breaks ties).
std::vector<Index> generating_sequence(const GroupPtr& g) {
  std::vector<Index> gens;
  Subgroup cur = generate_subgroup(g, {});
  while (cur.order() < g->order()) {
    int best = -1, best_ord = 0;
    for (int x = 0; x < g->order(); ++x) {
      if (cur.contains(x)) continue;
      int o = g->element_order(x);
      if (o > best_ord) {
        best_ord = o;
        best = x;
      }
    }
    gens.push_back(best);
    cur = generate_subgroup(g, gens);
  }
  return gens;
}

// Extend the map gens -> imgs to a homomorphism on the generated
// subgroup by closure; returns the partial image array or nullopt on a
// conflict.
std::optional<std::vector<Index>> close_hom(const FiniteGroup& g1,
                                            const FiniteGroup& g2,
                                            const std::vector<Index>& gens,
                                            const std::vector<Index>& imgs) {
  std::vector<Index> img(g1.order(), -1);
  img[g1.identity()] = g2.identity();
  std::vector<Index> known = {g1.identity()};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (img[gens[i]] >= 0) {
      if (img[gens[i]] != imgs[i]) return std::nullopt;
      continue;
    }
    img[gens[i]] = imgs[i];
    known.push_back(gens[i]);
  }
  std::size_t processed = 0;
  while (processed < known.size()) {
    Index x = known[processed++];
    for (std::size_t i = 0; i < known.size(); ++i) {
      Index y = known[i];
      for (auto [p, q] : {std::pair{g1.mul(x, y), g2.mul(img[x], img[y])},
                          std::pair{g1.mul(y, x), g2.mul(img[y], img[x])}}) {
        if (img[p] < 0) {
          img[p] = q;
          known.push_back(p);
        } else if (img[p] != q) {
          return std::nullopt;
        }
      }
    }
  }
  return img;
}

bool extend_isomorphism(const GroupPtr& g1, const GroupPtr& g2,
                        const std::vector<Index>& gens,
                        std::vector<Index>& imgs,
                        const std::vector<std::vector<Index>>& candidates,
                        std::vector<Index>& out) {
  const std::size_t k = imgs.size();
  if (k == gens.size()) {
    auto img = close_hom(*g1, *g2, gens, imgs);
    if (!img) return false;
    std::vector<char> hit(g2->order(), 0);
    for (Index v : *img) {
      if (v < 0 || hit[v]) return false;
      hit[v] = 1;
    }
    out = *img;
    return true;
  }
  for (Index cand : candidates[k]) {
    imgs.push_back(cand);
    // Prune: partial map must already extend consistently and injectively.
    auto partial = close_hom(*g1, *g2, {gens.begin(), gens.begin() + k + 1}, imgs);
    bool ok = partial.has_value();
    if (ok) {
      std::vector<char> hit(g2->order(), 0);
      for (Index v : *partial)
        if (v >= 0) {
          if (hit[v]) {
            ok = false;
            break;
          }
          hit[v] = 1;
        }
    }
    if (ok && extend_isomorphism(g1, g2, gens, imgs, candidates, out))
      return true;
    imgs.pop_back();
  }
  return false;
}

}  // namespace

std::optional<GroupHom> find_isomorphism(const GroupPtr& g1, const GroupPtr& g2,
                                         int cap) {
  if (g1->order() > cap || g2->order() > cap)
    fail("isomorphism test cap exceeded");
  if (g1->order() != g2->order()) return std::nullopt;
  if (!(fingerprint(*g1) == fingerprint(*g2))) return std::nullopt;

  auto gens = generating_sequence(g1);
  // Candidate images share element order and centralizer size.
  std::vector<std::vector<Index>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int o = g1->element_order(gens[i]);
    const int cz = g1->centralizer_size(gens[i]);
    for (int y = 0; y < g2->order(); ++y)
      if (g2->element_order(y) == o && g2->centralizer_size(y) == cz)
        candidates[i].push_back(y);
  }
  std::vector<Index> imgs, out;
  if (extend_isomorphism(g1, g2, gens, imgs, candidates, out))
    return GroupHom(g1, g2, std::move(out));
  return std::nullopt;
}

bool are_isomorphic(const GroupPtr& g1, const GroupPtr& g2, int cap) {
  return find_isomorphism(g1, g2, cap).has_value();
}

std::vector<long long> abelian_invariant_factors(const FiniteGroup& g) {
  if (!g.is_abelian()) fail("invariant factors: group is not abelian");
  const long long n = g.order();
  if (n == 1) return {};

  std::vector<long long> primes;
  long long m = n;
  for (long long p = 2; p * p <= m; ++p)
    while (m % p == 0) {
      if (primes.empty() || primes.back() != p) primes.push_back(p);
      m /= p;
    }
  if (m > 1) primes.push_back(m);

  std::vector<int> elem_order(g.order());
  for (int x = 0; x < g.order(); ++x) elem_order[x] = g.element_order(x);

  // Per prime p: recover the partition λ from s_k = #{x : x^(p^k) = e}
  // = p^(Σ min(λ_i, k)). Then invariant factors align the partitions.
  std::vector<std::vector<int>> partitions;  // exponent multisets, descending
  for (long long p : primes) {
    std::vector<long long> s = {1};
    long long pk = 1;
    while (true) {
      pk *= p;
      long long count = 0;
      for (int x = 0; x < g.order(); ++x)
        if (pk % elem_order[x] == 0) ++count;
      s.push_back(count);
      if (count == s[s.size() - 2]) break;  // stabilized
    }
    std::vector<int> t;  // t[k] = log_p s_k
    for (long long v : s) {
      int e = 0;
      while (v > 1) {
        v /= p;
        ++e;
      }
      t.push_back(e);
    }
    std::vector<int> lambda;
    for (std::size_t k = 1; k < t.size(); ++k) {
      int parts_ge_k = t[k] - t[k - 1];  // number of λ_i ≥ k
      while (static_cast<int>(lambda.size()) < parts_ge_k) lambda.push_back(0);
      for (int i = 0; i < parts_ge_k; ++i) ++lambda[i];
    }
    std::sort(lambda.rbegin(), lambda.rend());
    partitions.push_back(std::move(lambda));
  }

  std::size_t rank = 0;
  for (const auto& lam : partitions) rank = std::max(rank, lam.size());
  std::vector<long long> factors(rank, 1);
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    const auto& lam = partitions[pi];
    for (std::size_t i = 0; i < lam.size(); ++i) {
      long long pe = 1;
      for (int k = 0; k < lam[i]; ++k) pe *= primes[pi];
      factors[i] *= pe;  // factors[0] is the largest invariant factor
    }
  }
  std::reverse(factors.begin(), factors.end());  // ascending divisibility chain
  return factors;
}

GroupPtr abelian_group(const std::vector<long long>& factors,
                       std::string label) {
  long long order = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) fail("abelian factors must be >= 2");
    if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
      fail("abelian factors must form a divisibility chain");
    order *= factors[i];
  }
  const int n = static_cast<int>(order);
  if (label.empty()) {
    label = "Ab[";
    for (std::size_t i = 0; i < factors.size(); ++i)
      label += (i ? "," : "") + std::to_string(factors[i]);
    label += "]";
  }
  const int k = static_cast<int>(factors.size());
  auto decode = [&](int idx, std::vector<int>& v) {
    for (int i = k - 1; i >= 0; --i) {
      v[i] = static_cast<int>(idx % factors[i]);
      idx = static_cast<int>(idx / factors[i]);
    }
  };
  std::vector<Index> table(static_cast<std::size_t>(n) * n);
  std::vector<int> a(k), b(k);
  for (int i = 0; i < n; ++i) {
    decode(i, a);
    for (int j = 0; j < n; ++j) {
      decode(j, b);
      int idx = 0;
      for (int t = 0; t < k; ++t)
        idx = idx * static_cast<int>(factors[t]) +
              static_cast<int>((a[t] + b[t]) % factors[t]);
      table[static_cast<std::size_t>(i) * n + j] = idx;
    }
  }
  return make_group(std::move(label), n, std::move(table));
}

Abelianization abelianize(const GroupPtr& g) {
  Subgroup derived(g, g->derived_subgroup());
  auto q = quotient(g, derived);
  auto factors = abelian_invariant_factors(*q.group);
  auto canonical = abelian_group(factors, g->label() + "^Ab");
  auto iso = find_isomorphism(q.group, canonical);
  if (!iso) fail("abelianize: canonical form mismatch");  // unreachable
  return {std::move(factors), canonical, compose(*iso, q.proj)};
}

std::string group_to_json(const FiniteGroup& g, int indent) {
  nlohmann::json j;
  j["label"] = g.label();
  j["order"] = g.order();
  auto rows = nlohmann::json::array();
  for (int r = 0; r < g.order(); ++r) {
    auto row = nlohmann::json::array();
    for (int c = 0; c < g.order(); ++c) row.push_back(g.mul(r, c));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return indent >= 0 ? j.dump(indent) : j.dump();
}

GroupPtr group_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  const int n = j.at("order").get<int>();
  std::vector<Index> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : j.at("table"))
    for (const auto& v : row) table.push_back(v.get<Index>());
  if (table.size() != static_cast<std::size_t>(n) * n)
    fail("group JSON: table size mismatch");
  return make_group(j.value("label", std::string("group")), n,
                    std::move(table));
}

}  // namespace profin
