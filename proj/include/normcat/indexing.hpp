#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "normcat/covering.hpp"
#include "normcat/groupoid.hpp"

namespace normcat {

/// The data of a functor P: J → (Iⁿ∖Δ)/Σn, stored by its values: an
/// unordered n-set of distinct I-objects per J-object (kept ascending) and
/// an unordered n-set of I-morphisms per J-morphism forming a directed
/// bijection between the object sets (kept ascending by morphism id).
struct IndexingFunctor {
  FiniteCategory J, I;
  int n = 0;
  std::vector<std::vector<int>> on_objects;
  std::vector<std::vector<int>> on_morphisms;
};

/// Exhaustive validity audit: distinctness, directed bijections, identities,
/// and the composite condition P_{g∘f} = composites of P_g after P_f.
inline void check_indexing_functor(const IndexingFunctor& P) {
  const FiniteCategory& J = P.J;
  const FiniteCategory& I = P.I;
  if (static_cast<int>(P.on_objects.size()) != J.num_objects ||
      static_cast<int>(P.on_morphisms.size()) != J.num_morphisms())
    fail_validation("IndexingFunctor: size mismatch with J");
  for (const auto& obs : P.on_objects) {
    if (static_cast<int>(obs.size()) != P.n)
      fail_validation("IndexingFunctor: object set has wrong cardinality");
    if (!std::is_sorted(obs.begin(), obs.end()) ||
        std::adjacent_find(obs.begin(), obs.end()) != obs.end())
      fail_validation("IndexingFunctor: object set not sorted-distinct");
    for (int i : obs)
      if (i < 0 || i >= I.num_objects)
        fail_validation("IndexingFunctor: object id out of range");
  }
  auto directed_bijection = [&](const std::vector<int>& mors, int jdom, int jcod) {
    if (static_cast<int>(mors.size()) != P.n) return false;
    std::vector<int> doms, cods;
    for (int u : mors) {
      if (u < 0 || u >= I.num_morphisms()) return false;
      doms.push_back(I.dom[u]);
      cods.push_back(I.cod[u]);
    }
    std::sort(doms.begin(), doms.end());
    std::sort(cods.begin(), cods.end());
    return doms == P.on_objects[jdom] && cods == P.on_objects[jcod];
  };
  for (int f = 0; f < J.num_morphisms(); ++f) {
    if (!std::is_sorted(P.on_morphisms[f].begin(), P.on_morphisms[f].end()))
      fail_validation("IndexingFunctor: morphism set not sorted");
    if (!directed_bijection(P.on_morphisms[f], J.dom[f], J.cod[f]))
      fail_validation("IndexingFunctor: morphism set is not a directed bijection");
  }
  for (int x = 0; x < J.num_objects; ++x) {
    std::vector<int> ids;
    for (int i : P.on_objects[x]) ids.push_back(I.identity[i]);
    std::sort(ids.begin(), ids.end());
    if (P.on_morphisms[J.identity[x]] != ids)
      fail_validation("IndexingFunctor: identity not preserved");
  }
  for (int g = 0; g < J.num_morphisms(); ++g)
    for (int f = 0; f < J.num_morphisms(); ++f) {
      if (!J.composable(g, f)) continue;
      std::vector<int> composite;
      for (int u : P.on_morphisms[f]) {
        int v_matched = -1;
        for (int v : P.on_morphisms[g])
          if (I.dom[v] == I.cod[u]) v_matched = v;
        if (v_matched < 0)
          fail_validation("IndexingFunctor: no matching arrow for a composite");
        composite.push_back(I.compose(v_matched, u));
      }
      std::sort(composite.begin(), composite.end());
      if (composite != P.on_morphisms[J.compose(g, f)])
        fail_validation("IndexingFunctor: composite condition fails");
    }
}

/// The quotient (Iⁿ∖Δ)/Σn, materialized. Objects are ascending n-subsets of
/// distinct I-objects; a morphism A → B is an unordered set of n I-morphisms
/// whose domains enumerate A and codomains enumerate B. Since the objects in
/// a tuple are distinct, the Σn-action is free and unordered sets present
/// the quotient faithfully.
struct FatDiagonalQuotient {
  FiniteCategory category;
  std::vector<std::vector<int>> objects;       // ascending I-object subsets
  std::vector<std::vector<int>> morphism_sets; // ascending I-morphism id sets
};

inline FatDiagonalQuotient fat_diagonal_quotient(const FiniteCategory& I, int n,
                                                 long long cap = 200000) {
  if (n <= 0) fail_validation("fat_diagonal_quotient: n must be positive");
  if (I.num_objects < n)
    fail_validation("fat_diagonal_quotient: fewer than n objects");

  FatDiagonalQuotient out;
  // ascending n-subsets in lexicographic order
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    out.objects.push_back(pick);
    if (static_cast<long long>(out.objects.size()) > cap)
      fail_size("fat_diagonal_quotient: object count exceeds cap");
    int k = n - 1;
    while (k >= 0 && pick[k] == I.num_objects - n + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int l = k + 1; l < n; ++l) pick[l] = pick[l - 1] + 1;
  }
  std::map<std::vector<int>, int> ob_index;
  for (std::size_t i = 0; i < out.objects.size(); ++i)
    ob_index[out.objects[i]] = static_cast<int>(i);

  FiniteCategory& C = out.category;
  C.num_objects = static_cast<int>(out.objects.size());
  std::map<std::vector<int>, int> mor_index;

  for (int a = 0; a < C.num_objects; ++a)
    for (int b = 0; b < C.num_objects; ++b) {
      const auto& A = out.objects[a];
      const auto& B = out.objects[b];
      // assign to each element of A a morphism into B, codomains distinct
      std::vector<std::vector<int>> cands(n);
      for (int k = 0; k < n; ++k)
        for (int u = 0; u < I.num_morphisms(); ++u)
          if (I.dom[u] == A[k] &&
              std::binary_search(B.begin(), B.end(), I.cod[u]))
            cands[k].push_back(u);
      std::vector<int> chosen(n, -1);
      std::vector<char> cod_used(I.num_objects, 0);
      auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
          std::vector<int> key(chosen);
          std::sort(key.begin(), key.end());
          if (!mor_index.count(key)) {
            mor_index[key] = static_cast<int>(C.dom.size());
            C.dom.push_back(a);
            C.cod.push_back(b);
            out.morphism_sets.push_back(key);
            if (static_cast<long long>(C.dom.size()) > cap)
              fail_size("fat_diagonal_quotient: morphism count exceeds cap");
          }
          return;
        }
        for (int u : cands[k]) {
          if (cod_used[I.cod[u]]) continue;
          cod_used[I.cod[u]] = 1;
          chosen[k] = u;
          self(self, k + 1);
          cod_used[I.cod[u]] = 0;
        }
      };
      rec(rec, 0);
    }

  const int m = static_cast<int>(C.dom.size());
  C.identity.resize(C.num_objects);
  for (int a = 0; a < C.num_objects; ++a) {
    std::vector<int> ids;
    for (int i : out.objects[a]) ids.push_back(I.identity[i]);
    std::sort(ids.begin(), ids.end());
    C.identity[a] = mor_index.at(ids);
  }
  C.compose_tab.assign(static_cast<std::size_t>(m) * m, -1);
  for (int outer = 0; outer < m; ++outer)
    for (int inner = 0; inner < m; ++inner) {
      if (C.dom[outer] != C.cod[inner]) continue;
      std::vector<int> comp;
      for (int u : out.morphism_sets[inner]) {
        int match = -1;
        for (int v : out.morphism_sets[outer])
          if (I.dom[v] == I.cod[u]) match = v;
        comp.push_back(I.compose(match, u));
      }
      std::sort(comp.begin(), comp.end());
      C.compose_tab[static_cast<std::size_t>(outer) * m + inner] =
          mor_index.at(comp);
    }
  return out;
}

/// Projection of a translation groupoid onto its one-object group category,
/// (g, x) ↦ g. Verified as a covering category on construction.
inline CoveringCategory translation_projection(const TranslationGroupoid& bg) {
  CatFunctor p;
  p.source = bg.category;
  p.target = one_object_category(bg.group);
  p.ob_map.assign(bg.category.num_objects, 0);
  p.mor_map.resize(bg.category.num_morphisms());
  for (int m = 0; m < bg.category.num_morphisms(); ++m)
    p.mor_map[m] = bg.morphism_group_part(m);
  return make_covering(std::move(p));
}

/// Reads the indexing data off a covering category over a connected base:
/// P_j is the fiber, P_f the lift set.
inline IndexingFunctor covering_to_P(const CoveringCategory& c) {
  if (!is_connected(c.p.target))
    fail_validation("covering_to_P: base category is not connected");
  IndexingFunctor P;
  P.J = c.p.target;
  P.I = c.p.source;
  P.n = c.n;
  P.on_objects = c.fibers;
  P.on_morphisms.resize(P.J.num_morphisms());
  for (int u = 0; u < P.I.num_morphisms(); ++u)
    P.on_morphisms[c.p.mor_map[u]].push_back(u);
  for (auto& mors : P.on_morphisms) std::sort(mors.begin(), mors.end());
  return P;
}

/// The indexing functor behind the n-fold smash power: J = Σn≀H as a
/// one-object category, I = B_nΣn × H, P(∗) = {0..n-1} and
/// P(σ; h_1..h_n) = {(σ at i, h_i)}.
struct WreathIndexing {
  WreathGroup wreath;
  SymmetricGroup sn;
  TranslationGroupoid bnsn;
  FiniteCategory hcat;    // one-object category of the base subgroup
  FiniteCategory product; // B_nΣn × H
  IndexingFunctor P;

  /// Product-category morphism id of (σ at slot i, h).
  int slot_morphism(const Perm& sigma, int i, int h_parent) const {
    int sigma_idx = sn.index_of.at(sigma);
    return bnsn.morphism(sigma_idx, i) * wreath.base.size() +
           wreath.base.local(h_parent);
  }
};

inline WreathIndexing wreath_P(int n, const Subgroup& h) {
  WreathIndexing w;
  w.wreath = wreath_group(n, h);
  w.sn = symmetric_group(n);
  w.bnsn = b_n_sigma_n(w.sn, n);
  w.hcat = one_object_category(h.as_group());
  w.product = product_category(w.bnsn.category, w.hcat);

  IndexingFunctor& P = w.P;
  P.J = one_object_category(w.wreath.group);
  P.I = w.product;
  P.n = n;
  P.on_objects.resize(1);
  for (int i = 0; i < n; ++i) P.on_objects[0].push_back(i); // (i, ∗) has index i
  P.on_morphisms.resize(w.wreath.group.order);
  for (int e = 0; e < w.wreath.group.order; ++e) {
    WreathElement elt = w.wreath.decode(e);
    for (int i = 0; i < n; ++i)
      P.on_morphisms[e].push_back(w.slot_morphism(elt.sigma, i, elt.hs[i]));
    std::sort(P.on_morphisms[e].begin(), P.on_morphisms[e].end());
  }
  return w;
}

/// Two distinct wreath elements covered by a shared I-morphism, witnessing
/// that the wreath indexing functor arises from no covering category.
struct NonCoveringWitness {
  WreathElement a, b;
  int slot;            // index i with h_i equal in both
  int shared_morphism; // product-category morphism id of (σ at i, h)
};

inline NonCoveringWitness non_covering_witness(int n, const Subgroup& h) {
  if (n < 2) fail_validation("non_covering_witness: requires n >= 2");
  if (h.size() < 2)
    fail_validation("non_covering_witness: requires |H| >= 2, the indexing "
                    "functor is injective on morphisms otherwise");
  WreathIndexing w = wreath_P(n, h);
  const int order = w.wreath.group.order;
  for (int ai = 0; ai < order; ++ai) {
    WreathElement a = w.wreath.decode(ai);
    for (int bi = ai + 1; bi < order; ++bi) {
      WreathElement b = w.wreath.decode(bi);
      if (a.sigma != b.sigma) continue;
      for (int i = 0; i < n; ++i)
        if (a.hs[i] == b.hs[i])
          return NonCoveringWitness{a, b, i,
                                    w.slot_morphism(a.sigma, i, a.hs[i])};
    }
  }
  fail_validation("non_covering_witness: none found"); // unreachable given pre
}

} // namespace normcat
