#include "profin/lamptower.hpp"

#include <algorithm>
#include <stdexcept>

#include "profin/catalog.hpp"

namespace profin {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

}  // namespace

LampLevel lamp_level(long long n0, long long m, long long cap) {
  if (n0 < 2 || m < 1) fail("lamp_level: need n0 >= 2, m >= 1");
  auto wr = wreath_product(cyclic_group(static_cast<int>(n0)),
                           cyclic_group(static_cast<int>(m)), cap);
  return {n0, m, std::move(wr),
          AbGroup(std::vector<long long>(m, n0))};
}

Rotation lamp_pairing(long long n0, const std::vector<long long>& f_bar,
                      const std::vector<long long>& phi) {
  if (f_bar.size() != phi.size()) fail("lamp_pairing: period mismatch");
  Rotation r{0, 1};
  for (std::size_t k = 0; k < f_bar.size(); ++k)
    r = r + Rotation::of(phi[k] * f_bar[k], n0);
  return r;
}

std::vector<long long> TowerMap::char_inj(
    const std::vector<long long>& phi2) const {
  std::vector<long long> phi1(m1);
  for (long long k = 0; k < m1; ++k) phi1[k] = phi2[k % m2];
  return phi1;
}

std::vector<long long> TowerMap::base_proj(
    const std::vector<long long>& f1) const {
  std::vector<long long> f2(m2, 0);
  for (long long j = 0; j < m1; ++j) f2[j % m2] = (f2[j % m2] + f1[j]) % n0;
  return f2;
}

TowerMap tower_projection(const LampLevel& from, const LampLevel& to) {
  if (from.n0 != to.n0) fail("tower_projection: base orders differ");
  if (from.m % to.m != 0) fail("tower_projection: m2 does not divide m1");
  const int m1 = static_cast<int>(from.m), m2 = static_cast<int>(to.m);
  const long long n0 = from.n0;
  std::vector<Index> img(from.wr.carrier->order());
  for (int i = 0; i < from.wr.carrier->order(); ++i) {
    const long long fi = i / m1;
    const int hi = i % m1;
    auto f1 = from.wr.base_element(fi);
    std::vector<Index> f2(m2, 0);
    for (int j = 0; j < m1; ++j)
      f2[j % m2] = static_cast<Index>((f2[j % m2] + f1[j]) % n0);
    img[i] = static_cast<Index>(to.wr.base_index(f2) * m2 + hi % m2);
  }
  TowerMap map{n0, from.m, to.m,
               GroupHom(from.wr.carrier, to.wr.carrier, std::move(img))};
  if (!map.group_proj.is_surjective())
    fail("tower_projection: projection is not surjective");
  return map;
}

bool check_duality_identity(const LampLevel& from, const LampLevel& to,
                            const TowerMap& map) {
  for (long long fi = 0; fi < from.a_m.order(); ++fi) {
    auto f1 = from.a_m.element(fi);
    auto pf = map.base_proj(f1);
    for (long long ci = 0; ci < to.a_m.order(); ++ci) {
      auto phi2 = to.a_m.element(ci);
      if (!(lamp_pairing(from.n0, pf, phi2) ==
            lamp_pairing(from.n0, f1, map.char_inj(phi2))))
        return false;
    }
  }
  return true;
}

LevelIso verify_level_iso(long long n0, long long m, long long cap) {
  auto level = lamp_level(n0, m, cap);
  const int mi = static_cast<int>(m);
  const int k = level.a_m.rank();

  // Shift dual action of C_m on N̂(m): Φ^a has component Φ(k - a).
  std::vector<IntMat> mats(mi, IntMat(k, std::vector<long long>(k, 0)));
  for (int a = 0; a < mi; ++a)
    for (int r = 0; r < k; ++r) mats[a][r][(r - a + k) % k] = 1;
  DualAction shift(cyclic_group(mi), level.a_m, std::move(mats));

  auto sd = semidirect_of_dual(shift);
  auto witness = find_isomorphism(sd.group, level.wr.carrier);
  if (!witness)
    throw std::logic_error(
        "verify_level_iso: no isomorphism found (implementation bug)");
  return {sd.group, std::move(*witness)};
}

std::vector<std::vector<long long>> shift_fixed_characters(
    const LampLevel& from, long long m2) {
  if (from.m % m2 != 0) fail("shift_fixed_characters: m2 must divide m1");
  std::vector<std::vector<long long>> out;
  for (long long i = 0; i < from.a_m.order(); ++i) {
    auto phi = from.a_m.element(i);
    bool fixed = true;
    for (long long k = 0; k < from.m && fixed; ++k)
      fixed = phi[k] == phi[(k + m2) % from.m];
    if (fixed) out.push_back(std::move(phi));
  }
  return out;
}

}  // namespace profin
