#include "profin/wreath.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace profin {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

long long checked_base_order(long long lam, long long top, long long cap) {
  long long base = 1;
  for (long long i = 0; i < top; ++i) {
    base *= lam;
    if (base * top > cap)
      throw CapExceeded("wreath product exceeds table cap: |L|^|H|*|H| > " +
                        std::to_string(cap));
  }
  return base;
}

}  // namespace

std::vector<Index> WreathGroup::base_element(long long idx) const {
  const int nh = top->order();
  const int nl = lambda->order();
  std::vector<Index> f(nh);
  for (int k = nh - 1; k >= 0; --k) {
    f[k] = static_cast<Index>(idx % nl);
    idx /= nl;
  }
  return f;
}

long long WreathGroup::base_index(const std::vector<Index>& f) const {
  long long idx = 0;
  for (Index x : f) idx = idx * lambda->order() + x;
  return idx;
}

WreathGroup wreath_product(const GroupPtr& lambda, const GroupPtr& top,
                           long long cap) {
  const int nl = lambda->order();
  const int nh = top->order();
  const long long nb = checked_base_order(nl, nh, cap);
  const int base_n = static_cast<int>(nb);

  // Direct power ⊕_{h∈H} Λ, mixed radix.
  auto decode = [&](long long idx, std::vector<Index>& f) {
    for (int k = nh - 1; k >= 0; --k) {
      f[k] = static_cast<Index>(idx % nl);
      idx /= nl;
    }
  };
  auto encode = [&](const std::vector<Index>& f) {
    long long idx = 0;
    for (Index x : f) idx = idx * nl + x;
    return idx;
  };
  std::vector<Index> base_table(static_cast<std::size_t>(base_n) * base_n);
  {
    std::vector<Index> a(nh), b(nh), c(nh);
    for (int i = 0; i < base_n; ++i) {
      decode(i, a);
      for (int j = 0; j < base_n; ++j) {
        decode(j, b);
        for (int k = 0; k < nh; ++k) c[k] = lambda->mul(a[k], b[k]);
        base_table[static_cast<std::size_t>(i) * base_n + j] =
            static_cast<Index>(encode(c));
      }
    }
  }
  auto base_group = make_group(lambda->label() + "^" + std::to_string(nh),
                               base_n, std::move(base_table));

  // Left translation of coordinates: (h·f)(k) = f(h⁻¹·k).
  std::vector<std::vector<Index>> act(nh, std::vector<Index>(base_n));
  {
    std::vector<Index> f(nh), g(nh);
    for (int h = 0; h < nh; ++h) {
      const Index hinv = top->inv(h);
      for (int i = 0; i < base_n; ++i) {
        decode(i, f);
        for (int k = 0; k < nh; ++k) g[k] = f[top->mul(hinv, k)];
        act[h][i] = static_cast<Index>(encode(g));
      }
    }
  }
  auto sd = semidirect_product(base_group, top, act);
  auto carrier = sd.group;

  WreathGroup w{lambda, top, carrier,
                Subgroup(carrier, [&] {
                  std::vector<Index> elems(base_n);
                  for (int i = 0; i < base_n; ++i)
                    elems[i] = i * nh + top->identity();
                  return elems;
                }()),
                Subgroup(carrier, [&] {
                  std::vector<Index> elems(nh);
                  for (int h = 0; h < nh; ++h)
                    elems[h] = base_group->identity() * nh + h;
                  return elems;
                }()),
                {}};

  // Coordinate embeddings Λ -> carrier.
  for (int k = 0; k < nh; ++k) {
    std::vector<Index> img(nl);
    std::vector<Index> f(nh, lambda->identity());
    for (int x = 0; x < nl; ++x) {
      f[k] = x;
      img[x] = static_cast<Index>(encode(f) * nh + top->identity());
      f[k] = lambda->identity();
    }
    w.coord_embeddings.emplace_back(lambda, carrier, std::move(img));
  }
  return w;
}

WreathQuotient abelianization_quotient(const WreathGroup& w, long long cap) {
  auto ab = abelianize(w.lambda);
  auto target = wreath_product(ab.group, w.top, cap);
  const int nh = w.top->order();
  std::vector<Index> img(w.carrier->order());
  for (int i = 0; i < w.carrier->order(); ++i) {
    const long long fi = i / nh;
    const int hi = i % nh;
    auto f = w.base_element(fi);
    std::vector<Index> g(nh);
    for (int k = 0; k < nh; ++k) g[k] = ab.proj.image[f[k]];
    img[i] = static_cast<Index>(target.base_index(g) * nh + hi);
  }
  GroupHom proj(w.carrier, target.carrier, std::move(img));
  return {std::move(target), std::move(proj)};
}

void RfMapFlags::validate() const {
  if (lambda_abelian && !lambda_map)
    fail("flags: abelian groups are MAP");
  if (h_finite && !h_rf) fail("flags: finite groups are RF");
  if (lambda_trivial && !(lambda_map && lambda_rf && lambda_abelian))
    fail("flags: the trivial group is MAP, RF and abelian");
}

RfMapVerdict rf_map_verdict(const RfMapFlags& flags) {
  flags.validate();
  if (flags.lambda_trivial)
    fail("rf_map_verdict: requires a base with at least two elements");
  const bool shape_ok = flags.h_finite || flags.lambda_abelian;
  return {flags.lambda_map && flags.h_rf && shape_ok,
          flags.lambda_rf && flags.h_rf && shape_ok};
}

SupportedMap::SupportedMap(long long n0_,
                           std::vector<std::pair<long long, long long>> entries)
    : n0(n0_) {
  if (n0 < 2) fail("SupportedMap: base order must be >= 2");
  std::map<long long, long long> acc;
  for (auto [k, v] : entries) acc[k] = ((acc[k] + v) % n0 + n0) % n0;
  for (auto [k, v] : acc)
    if (v != 0) support.emplace_back(k, v);
}

Rotation periodic_pairing(long long n0, long long m,
                          const std::vector<long long>& exps,
                          const SupportedMap& f) {
  Rotation r{0, 1};
  for (auto [k, v] : f.support) {
    long long res = ((k % m) + m) % m;
    r = r + Rotation::of(exps[res] * v, n0);
  }
  return r;
}

SeparatingCharacter separating_character(const SupportedMap& f) {
  if (f.empty()) fail("separating_character: map is zero");
  const long long n0 = f.n0;
  const long long lo = f.support.front().first;
  const long long hi = f.support.back().first;

  // Scan upward from the support spread for a period making all support
  // residues distinct.
  long long m = std::max<long long>(1, hi - lo);
  for (;; ++m) {
    std::vector<long long> res;
    for (auto [k, v] : f.support) res.push_back(((k % m) + m) % m);
    std::sort(res.begin(), res.end());
    if (std::adjacent_find(res.begin(), res.end()) == res.end()) break;
  }

  // Exponent 1 on every support residue, then one adjustment if the
  // product cancels: bump the last support coordinate to the next
  // exponent. Since its value is nonzero mod n0, this always resolves.
  std::vector<long long> exps(m, 0);
  for (auto [k, v] : f.support) exps[((k % m) + m) % m] = 1;
  Rotation value = periodic_pairing(n0, m, exps, f);
  if (value.is_zero()) {
    const long long last_res = ((hi % m) + m) % m;
    exps[last_res] = 2 % n0;
    value = periodic_pairing(n0, m, exps, f);
  }
  return {m, std::move(exps), value};
}

}  // namespace profin
