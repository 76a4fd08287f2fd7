#include "profin/charorbit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace profin {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

}  // namespace

DualAction::DualAction(GroupPtr h_, AbGroup n_, std::vector<IntMat> mats_)
    : h(std::move(h_)), n(std::move(n_)), mats(std::move(mats_)) {
  if (static_cast<int>(mats.size()) != h->order())
    fail("DualAction: one matrix per H element");
  const int k = n.rank();
  for (const auto& m : mats) {
    if (static_cast<int>(m.size()) != k) fail("DualAction: matrix rank mismatch");
    for (const auto& row : m)
      if (static_cast<int>(row.size()) != k)
        fail("DualAction: matrix rank mismatch");
  }
  // Each matrix must permute N.
  for (const auto& m : mats) {
    std::vector<char> seen(n.order(), 0);
    for (long long i = 0; i < n.order(); ++i) {
      auto x = n.element(i);
      std::vector<long long> y(k, 0);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) y[r] += m[r][c] * x[c];
      long long j = n.index_of(y);
      if (seen[j]) fail("DualAction: matrix does not act bijectively");
      seen[j] = 1;
    }
  }
  // h ↦ mats[h] must be a homomorphism, checked as functions on N.
  for (int h1 = 0; h1 < h->order(); ++h1)
    for (int h2 = 0; h2 < h->order(); ++h2)
      for (long long i = 0; i < n.order(); ++i) {
        auto x = n.element(i);
        if (apply(h->mul(h1, h2), x) != apply(h1, apply(h2, x)))
          fail("DualAction: family is not a homomorphism H -> Aut(N)");
      }
}

std::vector<long long> DualAction::apply(Index h_elem,
                                         const std::vector<long long>& x) const {
  const int k = n.rank();
  const auto& m = mats[h_elem];
  std::vector<long long> y(k, 0);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) y[r] += m[r][c] * x[c];
  return n.reduce(y);
}

Character char_action(const DualAction& act, const Character& chi,
                      Index h_elem) {
  if (!(chi.group == act.n)) fail("char_action: character group mismatch");
  const int k = act.n.rank();
  const Index h_inv = act.h->inv(h_elem);
  std::vector<long long> exps(k, 0);
  for (int j = 0; j < k; ++j) {
    std::vector<long long> basis(k, 0);
    basis[j] = 1;
    Rotation q = pairing(chi, act.apply(h_inv, basis));
    const long long dj = act.n.factors()[j];
    if ((q.num * dj) % q.den != 0)
      fail("char_action: transported character is not well defined");
    exps[j] = (q.num * dj) / q.den;
  }
  return {act.n, std::move(exps)};
}

OrbitResult orbit_and_stabilizer(const DualAction& act, const Character& chi) {
  std::set<std::vector<long long>> orbit_exps;
  std::vector<Index> stab;
  for (int h = 0; h < act.h->order(); ++h) {
    Character moved = char_action(act, chi, h);
    if (moved.exps == chi.exps) stab.push_back(h);
    orbit_exps.insert(std::move(moved.exps));
  }
  std::vector<Character> orbit;
  for (const auto& e : orbit_exps) orbit.emplace_back(act.n, e);
  return {std::move(orbit), Subgroup(act.h, std::move(stab))};
}

std::vector<Character> periodic_character_group(const DualAction& act) {
  return all_characters(act.n);
}

DualAction induced_dual_action(const DualAction& act) {
  const int k = act.n.rank();
  AbGroup dual = dual_group(act.n);
  std::vector<IntMat> mats(act.h->order(),
                           IntMat(k, std::vector<long long>(k, 0)));
  for (int h = 0; h < act.h->order(); ++h) {
    for (int j = 0; j < k; ++j) {
      std::vector<long long> basis(k, 0);
      basis[j] = 1;
      Character moved = char_action(act, Character(act.n, basis), h);
      for (int r = 0; r < k; ++r) mats[h][r][j] = moved.exps[r];
    }
  }
  return {act.h, std::move(dual), std::move(mats)};
}

SemidirectResult semidirect_of_dual(const DualAction& act) {
  DualAction on_dual = induced_dual_action(act);
  const AbGroup& d = on_dual.n;
  auto d_group = d.to_group("dual(" + std::string("N^") + ")");
  std::vector<std::vector<Index>> perms(act.h->order(),
                                        std::vector<Index>(d.order()));
  for (int h = 0; h < act.h->order(); ++h)
    for (long long i = 0; i < d.order(); ++i)
      perms[h][i] = static_cast<Index>(d.index_of(on_dual.apply(h, d.element(i))));
  return semidirect_product(d_group, act.h, perms);
}

ReconstructResult reconstruct_cor1(const GroupPtr& g, const Subgroup& n,
                                   const Subgroup& h) {
  if (n.parent.get() != g.get() || h.parent.get() != g.get())
    fail("reconstruct_cor1: subgroups of another group");
  if (!is_normal(n)) fail("reconstruct_cor1: N is not normal");
  if (static_cast<long long>(n.order()) * h.order() != g->order())
    fail("reconstruct_cor1: H is not a complement (order)");
  for (Index x : h.elems)
    if (x != g->identity() && n.contains(x))
      fail("reconstruct_cor1: H is not a complement (intersection)");

  auto ngrp = subgroup_as_group(n, g->label() + ".N");
  if (!ngrp.group->is_abelian()) fail("reconstruct_cor1: N is not abelian");
  auto hgrp = subgroup_as_group(h, g->label() + ".H");

  // Identify N with its invariant-factor form.
  auto ab = abelianize(ngrp.group);  // iso since N is abelian
  AbGroup a(ab.factors);
  const int k = a.rank();
  std::vector<int> from_canonical(a.order());
  for (int p = 0; p < ngrp.group->order(); ++p)
    from_canonical[ab.proj.image[p]] = p;
  std::vector<int> pos_in_n(g->order(), -1);
  for (int p = 0; p < n.order(); ++p) pos_in_n[n.elems[p]] = p;

  // Conjugation action of H on N, transported to exponent vectors.
  std::vector<IntMat> mats(hgrp.group->order(),
                           IntMat(k, std::vector<long long>(k, 0)));
  for (int hi = 0; hi < hgrp.group->order(); ++hi) {
    const Index he = h.elems[hi];
    for (int j = 0; j < k; ++j) {
      std::vector<long long> basis(k, 0);
      basis[j] = 1;
      const Index n_elem = n.elems[from_canonical[a.index_of(basis)]];
      const Index conj = g->mul(g->mul(he, n_elem), g->inv(he));
      auto img = a.element(ab.proj.image[pos_in_n[conj]]);
      for (int r = 0; r < k; ++r) mats[hi][r][j] = img[r];
    }
  }
  DualAction conj_action(hgrp.group, a, std::move(mats));

  // Transport through duality twice: the action on N^ via the pairing,
  // then the action on B = dual(N^), and form B ⋊ H.
  DualAction on_chars = induced_dual_action(conj_action);
  auto sd = semidirect_of_dual(on_chars);

  auto witness = find_isomorphism(sd.group, g);
  if (!witness)
    throw std::logic_error(
        "reconstruct_cor1: no isomorphism witness found (implementation bug)");
  return {sd.group, std::move(*witness), on_chars.n.factors()};
}

}  // namespace profin
