#include "profin/abdual.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace profin {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

std::size_t nrows(const IntMat& m) { return m.size(); }
std::size_t ncols(const IntMat& m) { return m.empty() ? 0 : m[0].size(); }

IntMat identity_mat(std::size_t n) {
  IntMat m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

SmithResult smith_normal_form(const IntMat& m) {
  const std::size_t r = nrows(m), c = ncols(m);
  for (const auto& row : m)
    if (row.size() != c) fail("smith_normal_form: ragged matrix");
  SmithResult out{m, identity_mat(r), identity_mat(c)};
  auto& d = out.d;
  auto& u = out.u;
  auto& v = out.v;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(d[i], d[j]);
    std::swap(u[i], u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : d) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, long long k) {
    for (std::size_t t = 0; t < c; ++t) d[dst][t] += k * d[src][t];
    for (std::size_t t = 0; t < r; ++t) u[dst][t] += k * u[src][t];
  };
  auto add_col = [&](std::size_t dst, std::size_t src, long long k) {
    for (std::size_t t = 0; t < r; ++t) d[t][dst] += k * d[t][src];
    for (std::size_t t = 0; t < c; ++t) v[t][dst] += k * v[t][src];
  };
  auto negate_row = [&](std::size_t i) {
    for (auto& x : d[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  };
  // Nearest-integer quotient keeps remainders (and transform entries) small.
  auto quot = [](long long a, long long b) {
    long long q = a / b, rem = a % b;
    if (std::abs(rem) * 2 > std::abs(b)) q += ((a < 0) == (b < 0)) ? 1 : -1;
    return q;
  };

  const std::size_t steps = std::min(r, c);
  for (std::size_t k = 0; k < steps; ++k) {
    // Find a nonzero pivot of minimal absolute value in the trailing block.
    while (true) {
      std::size_t pi = k, pj = k;
      long long best = 0;
      for (std::size_t i = k; i < r; ++i)
        for (std::size_t j = k; j < c; ++j)
          if (d[i][j] != 0 &&
              (best == 0 || std::abs(d[i][j]) < std::abs(best))) {
            best = d[i][j];
            pi = i;
            pj = j;
          }
      if (best == 0) break;  // trailing block is zero
      if (pi != k) swap_rows(k, pi);
      if (pj != k) swap_cols(k, pj);
      bool reduced = true;
      for (std::size_t i = k + 1; i < r; ++i)
        if (d[i][k] != 0) {
          add_row(i, k, -quot(d[i][k], d[k][k]));
          if (d[i][k] != 0) reduced = false;
        }
      for (std::size_t j = k + 1; j < c; ++j)
        if (d[k][j] != 0) {
          add_col(j, k, -quot(d[k][j], d[k][k]));
          if (d[k][j] != 0) reduced = false;
        }
      if (!reduced) continue;
      // Pivot must divide every remaining entry; otherwise fold one in.
      bool divides = true;
      for (std::size_t i = k + 1; i < r && divides; ++i)
        for (std::size_t j = k + 1; j < c && divides; ++j)
          if (d[i][j] % d[k][k] != 0) {
            add_row(k, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (d[k][k] < 0) negate_row(k);
  }
  return out;
}

long long det(const IntMat& m) {
  const std::size_t n = nrows(m);
  if (n == 0) return 1;
  if (ncols(m) != n) fail("det: matrix not square");
  // Bareiss fraction-free elimination, 128-bit intermediates.
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  long long sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * static_cast<long long>(a[n - 1][n - 1]);
}

Rotation Rotation::of(long long num, long long den) {
  if (den <= 0) fail("rotation denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  long long g = std::gcd(num, den);
  if (num == 0) return {0, 1};
  return {num / g, den / g};
}

Rotation Rotation::operator+(const Rotation& o) const {
  long long l = std::lcm(den, o.den);
  return Rotation::of(num * (l / den) + o.num * (l / o.den), l);
}

AbGroup::AbGroup(std::vector<long long> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) fail("AbGroup factors must be >= 2");
    if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0)
      fail("AbGroup factors must form a divisibility chain");
    order_ *= factors_[i];
  }
}

AbGroup AbGroup::from_moduli(const std::vector<long long>& moduli) {
  const std::size_t k = moduli.size();
  IntMat diag(k, std::vector<long long>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    if (moduli[i] < 1) fail("moduli must be positive");
    diag[i][i] = moduli[i];
  }
  auto snf = smith_normal_form(diag);
  std::vector<long long> factors;
  for (std::size_t i = 0; i < k; ++i)
    if (snf.d[i][i] >= 2) factors.push_back(snf.d[i][i]);
  return AbGroup(std::move(factors));
}

std::vector<long long> AbGroup::element(long long index) const {
  std::vector<long long> v(factors_.size());
  for (int i = rank() - 1; i >= 0; --i) {
    v[i] = index % factors_[i];
    index /= factors_[i];
  }
  return v;
}

long long AbGroup::index_of(const std::vector<long long>& v) const {
  if (static_cast<int>(v.size()) != rank()) fail("element rank mismatch");
  long long idx = 0;
  for (int i = 0; i < rank(); ++i) {
    long long x = v[i] % factors_[i];
    if (x < 0) x += factors_[i];
    idx = idx * factors_[i] + x;
  }
  return idx;
}

std::vector<long long> AbGroup::add(const std::vector<long long>& a,
                                    const std::vector<long long>& b) const {
  std::vector<long long> v(factors_.size());
  for (int i = 0; i < rank(); ++i) v[i] = (a[i] + b[i]) % factors_[i];
  return v;
}

std::vector<long long> AbGroup::neg(const std::vector<long long>& a) const {
  std::vector<long long> v(factors_.size());
  for (int i = 0; i < rank(); ++i) v[i] = (factors_[i] - a[i]) % factors_[i];
  return v;
}

std::vector<long long> AbGroup::zero() const {
  return std::vector<long long>(factors_.size(), 0);
}

std::vector<long long> AbGroup::reduce(const std::vector<long long>& a) const {
  std::vector<long long> v(factors_.size());
  for (int i = 0; i < rank(); ++i) {
    v[i] = a[i] % factors_[i];
    if (v[i] < 0) v[i] += factors_[i];
  }
  return v;
}

GroupPtr AbGroup::to_group(std::string label) const {
  if (factors_.empty())
    return make_group(label.empty() ? "1" : label, 1, {0});
  return abelian_group(factors_, std::move(label));
}

Character::Character(AbGroup group_, std::vector<long long> exps_)
    : group(std::move(group_)), exps(group.reduce(exps_)) {}

Rotation pairing(const Character& chi, const std::vector<long long>& x) {
  if (chi.group.rank() != static_cast<int>(x.size()))
    fail("pairing: group mismatch");
  Rotation r{0, 1};
  for (int i = 0; i < chi.group.rank(); ++i)
    r = r + Rotation::of(chi.exps[i] * x[i], chi.group.factors()[i]);
  return r;
}

AbSubgroup::AbSubgroup(AbGroup group_, std::vector<long long> idx)
    : group(std::move(group_)), elem_indices(std::move(idx)) {
  std::sort(elem_indices.begin(), elem_indices.end());
  elem_indices.erase(std::unique(elem_indices.begin(), elem_indices.end()),
                     elem_indices.end());
  auto has = [&](long long i) {
    return std::binary_search(elem_indices.begin(), elem_indices.end(), i);
  };
  if (!has(0)) fail("AbSubgroup must contain zero");
  for (long long i : elem_indices) {
    auto a = group.element(i);
    if (!has(group.index_of(group.neg(a)))) fail("AbSubgroup not closed (neg)");
    for (long long j : elem_indices)
      if (!has(group.index_of(group.add(a, group.element(j)))))
        fail("AbSubgroup not closed (add)");
  }
}

AbSubgroup ab_span(const AbGroup& a,
                   const std::vector<std::vector<long long>>& gens) {
  std::set<long long> elems = {0};
  std::vector<long long> frontier = {0};
  for (const auto& g : gens) {
    long long i = a.index_of(g);
    if (elems.insert(i).second) frontier.push_back(i);
  }
  while (!frontier.empty()) {
    long long i = frontier.back();
    frontier.pop_back();
    auto x = a.element(i);
    for (long long j : std::vector<long long>(elems.begin(), elems.end())) {
      long long s = a.index_of(a.add(x, a.element(j)));
      if (elems.insert(s).second) frontier.push_back(s);
    }
    long long ni = a.index_of(a.neg(x));
    if (elems.insert(ni).second) frontier.push_back(ni);
  }
  return {a, {elems.begin(), elems.end()}};
}

std::vector<Character> all_characters(const AbGroup& a) {
  std::vector<Character> out;
  out.reserve(a.order());
  for (long long i = 0; i < a.order(); ++i)
    out.emplace_back(a, a.element(i));
  return out;
}

std::vector<Character> annihilator(const AbGroup& a, const AbSubgroup& s) {
  if (!(s.group == a)) fail("annihilator: subgroup of another group");
  std::vector<Character> out;
  for (long long i = 0; i < a.order(); ++i) {
    Character chi(a, a.element(i));
    bool kills = true;
    for (long long j : s.elem_indices)
      if (!pairing(chi, a.element(j)).is_zero()) {
        kills = false;
        break;
      }
    if (kills) out.push_back(std::move(chi));
  }
  return out;
}

AbGroup dual_group(const AbGroup& a) { return a; }

std::vector<Character> characters_of_quotient(const AbGroup& a,
                                              const AbSubgroup& s) {
  return annihilator(a, s);
}

std::vector<AbSubgroup> all_subgroups(const AbGroup& a) {
  std::set<std::vector<long long>> seen;
  std::vector<AbSubgroup> out;
  std::vector<std::vector<long long>> queue;

  AbSubgroup triv = ab_span(a, {});
  seen.insert(triv.elem_indices);
  queue.push_back(triv.elem_indices);
  out.push_back(std::move(triv));

  while (!queue.empty()) {
    auto cur = queue.back();
    queue.pop_back();
    auto in_cur = [&](long long i) {
      return std::binary_search(cur.begin(), cur.end(), i);
    };
    for (long long x = 0; x < a.order(); ++x) {
      if (in_cur(x)) continue;
      std::vector<std::vector<long long>> gens;
      for (long long i : cur) gens.push_back(a.element(i));
      gens.push_back(a.element(x));
      auto bigger = ab_span(a, gens);
      if (seen.insert(bigger.elem_indices).second) {
        queue.push_back(bigger.elem_indices);
        out.push_back(std::move(bigger));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const AbSubgroup& l, const AbSubgroup& r) {
    if (l.elem_indices.size() != r.elem_indices.size())
      return l.elem_indices.size() < r.elem_indices.size();
    return l.elem_indices < r.elem_indices;
  });
  return out;
}

namespace {

void extend_chain(long long max_order, long long last, long long remaining,
                  std::vector<long long>& cur,
                  std::vector<std::vector<long long>>& out) {
  for (long long d = std::max<long long>(2, last); d <= remaining; ++d) {
    if (d % last != 0) continue;
    cur.push_back(d);
    out.push_back(cur);
    extend_chain(max_order, d, remaining / d, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<long long>> invariant_factor_chains(long long max_order) {
  std::vector<std::vector<long long>> out = {{}};  // trivial group
  std::vector<long long> cur;
  extend_chain(max_order, 1, max_order, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace profin
