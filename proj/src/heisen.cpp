#include "profin/heisen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace profin {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

}  // namespace

FiniteRing::FiniteRing(std::vector<long long> components)
    : comps_(std::move(components)) {
  if (comps_.empty()) fail("FiniteRing: need at least one component");
  for (long long n : comps_) {
    if (n < 2) fail("FiniteRing: component moduli must be >= 2");
    order_ *= n;
  }
}

FiniteRing FiniteRing::parse(const std::string& text) {
  std::vector<long long> comps;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find('x', pos);
    if (next == std::string::npos) next = text.size();
    comps.push_back(std::stoll(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return FiniteRing(std::move(comps));
}

std::string FiniteRing::label() const {
  std::string s = "Z/" + std::to_string(comps_[0]);
  for (std::size_t i = 1; i < comps_.size(); ++i)
    s += "xZ/" + std::to_string(comps_[i]);
  return s;
}

std::vector<long long> FiniteRing::element(long long index) const {
  std::vector<long long> v(comps_.size());
  for (int i = rank() - 1; i >= 0; --i) {
    v[i] = index % comps_[i];
    index /= comps_[i];
  }
  return v;
}

long long FiniteRing::index_of(const std::vector<long long>& v) const {
  long long idx = 0;
  for (int i = 0; i < rank(); ++i) {
    long long x = v[i] % comps_[i];
    if (x < 0) x += comps_[i];
    idx = idx * comps_[i] + x;
  }
  return idx;
}

long long FiniteRing::add(long long a, long long b) const {
  auto x = element(a), y = element(b);
  for (int i = 0; i < rank(); ++i) x[i] = (x[i] + y[i]) % comps_[i];
  return index_of(x);
}

long long FiniteRing::mul(long long a, long long b) const {
  auto x = element(a), y = element(b);
  for (int i = 0; i < rank(); ++i) x[i] = (x[i] * y[i]) % comps_[i];
  return index_of(x);
}

long long FiniteRing::neg(long long a) const {
  auto x = element(a);
  for (int i = 0; i < rank(); ++i) x[i] = (comps_[i] - x[i]) % comps_[i];
  return index_of(x);
}

long long FiniteRing::one() const {
  return index_of(std::vector<long long>(comps_.size(), 1));
}

Ideal::Ideal(FiniteRing ring_, std::vector<long long> elems_)
    : ring(std::move(ring_)), elems(std::move(elems_)) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty() || elems[0] != 0) fail("Ideal: must contain zero");
  for (long long x : elems) {
    if (x < 0 || x >= ring.order()) fail("Ideal: element out of range");
    if (!contains(ring.neg(x))) fail("Ideal: not closed under negation");
    for (long long y : elems)
      if (!contains(ring.add(x, y))) fail("Ideal: not additively closed");
    for (long long r = 0; r < ring.order(); ++r)
      if (!contains(ring.mul(r, x))) fail("Ideal: not absorbing");
  }
}

bool Ideal::contains(long long x) const {
  return std::binary_search(elems.begin(), elems.end(), x);
}

namespace {

std::vector<long long> ideal_closure(const FiniteRing& r,
                                     const std::vector<long long>& gens) {
  std::set<long long> elems = {0};
  std::vector<long long> frontier;
  for (long long g : gens)
    if (elems.insert(g).second) frontier.push_back(g);
  while (!frontier.empty()) {
    long long x = frontier.back();
    frontier.pop_back();
    std::vector<long long> snapshot(elems.begin(), elems.end());
    for (long long y : snapshot) {
      long long s = r.add(x, y);
      if (elems.insert(s).second) frontier.push_back(s);
    }
    for (long long m = 0; m < r.order(); ++m) {
      long long p = r.mul(m, x);
      if (elems.insert(p).second) frontier.push_back(p);
    }
  }
  return {elems.begin(), elems.end()};
}

}  // namespace

std::vector<Ideal> ideals(const FiniteRing& r) {
  if (r.order() > 64) fail("ideals: ring order above 64 unsupported");
  std::set<std::vector<long long>> seen;
  std::vector<std::vector<long long>> queue;
  auto zero = ideal_closure(r, {});
  seen.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    auto cur = queue.back();
    queue.pop_back();
    for (long long x = 0; x < r.order(); ++x) {
      if (std::binary_search(cur.begin(), cur.end(), x)) continue;
      auto gens = cur;
      gens.push_back(x);
      auto bigger = ideal_closure(r, gens);
      if (seen.insert(bigger).second) queue.push_back(bigger);
    }
  }
  std::vector<Ideal> out;
  for (const auto& e : seen) out.emplace_back(r, e);
  std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    if (a.elems.size() != b.elems.size())
      return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });
  return out;
}

long long HeisenbergGroup::encode(long long a, long long b, long long c) const {
  return (a * ring.order() + b) * ring.order() + c;
}

std::array<long long, 3> HeisenbergGroup::decode(long long idx) const {
  const long long q = ring.order();
  return {idx / (q * q), (idx / q) % q, idx % q};
}

HeisenbergGroup heisenberg(const FiniteRing& r, long long cap) {
  const long long q = r.order();
  if (q * q * q > cap)
    throw CapExceeded("heisenberg: |R|^3 exceeds table cap");
  const int n = static_cast<int>(q * q * q);
  std::vector<Index> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const long long a = i / (q * q), b = (i / q) % q, c = i % q;
    for (int j = 0; j < n; ++j) {
      const long long a2 = j / (q * q), b2 = (j / q) % q, c2 = j % q;
      const long long a3 = r.add(a, a2);
      const long long b3 = r.add(b, b2);
      const long long c3 = r.add(r.add(c, c2), r.mul(a, b2));
      table[static_cast<std::size_t>(i) * n + j] =
          static_cast<Index>((a3 * q + b3) * q + c3);
    }
  }
  auto g = make_group("H(" + r.label() + ")", n, std::move(table));
  std::vector<Index> n_elems, h_elems;
  for (long long b = 0; b < q; ++b)
    for (long long c = 0; c < q; ++c)
      n_elems.push_back(static_cast<Index>(b * q + c));
  for (long long a = 0; a < q; ++a)
    h_elems.push_back(static_cast<Index>(a * q * q));
  return {r, g, Subgroup(g, std::move(n_elems)), Subgroup(g, std::move(h_elems))};
}

HeisLevel h_level(const HeisenbergGroup& h, const Ideal& i) {
  const FiniteRing& r = h.ring;
  if (!(i.ring == r)) fail("h_level: ideal of another ring");
  const long long q = r.order();

  // Quotient R/I by minimal coset representatives.
  std::vector<long long> coset_min(q, -1);
  std::vector<long long> reps;
  for (long long x = 0; x < q; ++x) {
    if (coset_min[x] >= 0) continue;
    reps.push_back(x);
    for (long long e : i.elems) coset_min[r.add(x, e)] = x;
  }
  std::vector<int> p(q);  // R -> position in reps
  for (long long x = 0; x < q; ++x)
    p[x] = static_cast<int>(std::lower_bound(reps.begin(), reps.end(),
                                             coset_min[x]) -
                            reps.begin());
  const long long nq = static_cast<long long>(reps.size());
  const int n = static_cast<int>(q * q * nq);

  std::vector<Index> table(static_cast<std::size_t>(n) * n);
  auto enc = [&](long long x, long long y, long long z) {
    return static_cast<Index>((x * q + y) * nq + z);
  };
  for (int ii = 0; ii < n; ++ii) {
    const long long x = ii / (q * nq), y = (ii / nq) % q, z = ii % nq;
    for (int jj = 0; jj < n; ++jj) {
      const long long x2 = jj / (q * nq), y2 = (jj / nq) % q, z2 = jj % nq;
      const long long zsum = p[r.add(r.add(reps[z], reps[z2]), r.mul(x, y2))];
      table[static_cast<std::size_t>(ii) * n + jj] =
          enc(r.add(x, x2), r.add(y, y2), zsum);
    }
  }
  auto g = make_group("H(" + r.label() + "," + std::to_string(i.order()) + ")",
                      n, std::move(table));
  std::vector<Index> img(h.group->order());
  for (int e = 0; e < h.group->order(); ++e) {
    auto [a, b, c] = h.decode(e);
    img[e] = enc(a, b, p[c]);
  }
  GroupHom proj(h.group, g, std::move(img));
  if (!proj.is_surjective()) fail("h_level: projection not surjective");
  return {r, i, g, std::move(proj)};
}

GroupHom h_level_connecting(const HeisLevel& fine, const HeisLevel& coarse) {
  if (!(fine.ring == coarse.ring)) fail("h_level_connecting: rings differ");
  for (long long e : fine.ideal.elems)
    if (!coarse.ideal.contains(e))
      fail("h_level_connecting: ideals not nested");
  // Factor through the projections from H(R).
  const auto& from = fine.proj;      // H(R) -> H(R, I)
  const auto& to = coarse.proj;      // H(R) -> H(R, J)
  std::vector<Index> img(fine.group->order(), -1);
  for (int e = 0; e < from.source->order(); ++e) {
    Index a = from.image[e], b = to.image[e];
    if (img[a] >= 0 && img[a] != b)
      fail("h_level_connecting: map not well defined");
    img[a] = b;
  }
  return {fine.group, coarse.group, std::move(img)};
}

RingCharacter::RingCharacter(FiniteRing ring_, std::vector<long long> exps_)
    : ring(std::move(ring_)), exps(std::move(exps_)) {
  if (static_cast<int>(exps.size()) != ring.rank())
    fail("RingCharacter: exponent rank mismatch");
  for (int i = 0; i < ring.rank(); ++i) {
    exps[i] %= ring.components()[i];
    if (exps[i] < 0) exps[i] += ring.components()[i];
  }
}

Rotation RingCharacter::operator()(long long elem_index) const {
  auto x = ring.element(elem_index);
  Rotation r{0, 1};
  for (int i = 0; i < ring.rank(); ++i)
    r = r + Rotation::of(exps[i] * x[i], ring.components()[i]);
  return r;
}

CharOrbitData char_orbit_data(const HeisenbergGroup& h,
                              const RingCharacter& beta,
                              const RingCharacter& psi) {
  const FiniteRing& r = h.ring;
  if (!(beta.ring == r) || !(psi.ring == r))
    fail("char_orbit_data: character ring mismatch");
  const long long q = r.order();

  // I_ψ = {a ∈ R : aR ⊆ ker ψ}.
  std::vector<long long> ipsi_elems;
  for (long long a = 0; a < q; ++a) {
    bool in = true;
    for (long long x = 0; x < q && in; ++x)
      in = psi(r.mul(a, x)).is_zero();
    if (in) ipsi_elems.push_back(a);
  }
  Ideal i_psi(r, std::move(ipsi_elems));

  // Brute-force orbit of χ_{β,ψ} under conjugation by (a,0,0), with
  // characters compared as value tables on N = {(0,b,c)}.
  auto chi_values = [&](long long a) {
    const long long hh = h.encode(a, 0, 0);
    const long long hinv = h.group->inv(static_cast<Index>(hh));
    std::vector<Rotation> vals;
    vals.reserve(q * q);
    for (long long b = 0; b < q; ++b)
      for (long long c = 0; c < q; ++c) {
        const Index conj = h.group->mul(
            h.group->mul(static_cast<Index>(hinv),
                         static_cast<Index>(h.encode(0, b, c))),
            static_cast<Index>(hh));
        auto [a2, b2, c2] = h.decode(conj);
        vals.push_back(beta(b2) + psi(c2));
      }
    return vals;
  };

  std::set<std::vector<Rotation>> orbit;
  std::vector<long long> stabilizer;
  const auto base = chi_values(0);
  for (long long a = 0; a < q; ++a) {
    auto vals = chi_values(a);
    if (vals == base) stabilizer.push_back(a);
    orbit.insert(std::move(vals));
  }

  CharOrbitData out{static_cast<long long>(orbit.size()), std::move(i_psi),
                    std::move(stabilizer)};
  if (out.orbit_size * out.i_psi.order() != q ||
      out.stabilizer_a != out.i_psi.elems)
    throw std::logic_error(
        "char_orbit_data: orbit data contradicts the stabilizer ideal");
  return out;
}

}  // namespace profin
