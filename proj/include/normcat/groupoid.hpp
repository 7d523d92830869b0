#pragma once

#include <string>
#include <vector>

#include "normcat/category.hpp"
#include "normcat/group.hpp"
#include "normcat/wreath.hpp"

namespace normcat {

/// Translation groupoid B_X G of a group acting on a finite set X: objects
/// are the carrier points, morphisms are pairs (g, x): x → g·x with
/// (γ, g·x) ∘ (g, x) = (γg, x). Morphism (g, x) has index g·|X| + x.
struct TranslationGroupoid {
  FiniteGroup group;
  int carrier_size = 0;
  std::vector<int> action; // action[g * carrier_size + x] = g·x
  FiniteCategory category;

  int act(int g, int x) const { return action[g * carrier_size + x]; }
  int morphism(int g, int x) const { return g * carrier_size + x; }
  int morphism_group_part(int m) const { return m / carrier_size; }
  int morphism_point_part(int m) const { return m % carrier_size; }
};

inline TranslationGroupoid translation_groupoid(const FiniteGroup& g,
                                                int carrier_size,
                                                std::vector<int> action) {
  TranslationGroupoid t;
  t.group = g;
  t.carrier_size = carrier_size;
  t.action = std::move(action);
  if (static_cast<int>(t.action.size()) != g.order * carrier_size)
    fail_validation("translation_groupoid: action table size mismatch");
  for (int v : t.action)
    if (v < 0 || v >= carrier_size)
      fail_validation("translation_groupoid: action value out of range");
  for (int x = 0; x < carrier_size; ++x)
    if (t.act(g.identity, x) != x)
      fail_validation("translation_groupoid: identity does not act trivially");
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      for (int x = 0; x < carrier_size; ++x)
        if (t.act(g.mul(a, b), x) != t.act(a, t.act(b, x)))
          fail_validation("translation_groupoid: not a group action");

  FiniteCategory& c = t.category;
  c.num_objects = carrier_size;
  const int m = g.order * carrier_size;
  c.dom.resize(m);
  c.cod.resize(m);
  c.identity.resize(carrier_size);
  c.compose_tab.assign(static_cast<std::size_t>(m) * m, -1);
  c.morphism_labels.resize(m);
  for (int ge = 0; ge < g.order; ++ge)
    for (int x = 0; x < carrier_size; ++x) {
      int idx = t.morphism(ge, x);
      c.dom[idx] = x;
      c.cod[idx] = t.act(ge, x);
      c.morphism_labels[idx] = "(" + g.label(ge) + "," + std::to_string(x) + ")";
    }
  for (int x = 0; x < carrier_size; ++x) c.identity[x] = t.morphism(g.identity, x);
  for (int b = 0; b < g.order; ++b)
    for (int x = 0; x < carrier_size; ++x) {
      int inner = t.morphism(b, x);
      for (int a = 0; a < g.order; ++a) {
        int outer = t.morphism(a, t.act(b, x));
        c.compose_tab[static_cast<std::size_t>(outer) * m + inner] =
            t.morphism(g.mul(a, b), x);
      }
    }
  return t;
}

/// B_n Σn: the symmetric group translating {0..n-1}.
inline TranslationGroupoid b_n_sigma_n(const SymmetricGroup& s, int n) {
  std::vector<int> action(static_cast<std::size_t>(s.group.order) * n);
  for (int g = 0; g < s.group.order; ++g)
    for (int x = 0; x < n; ++x) action[g * n + x] = s.perms[g][x];
  return translation_groupoid(s.group, n, std::move(action));
}

/// B_{G/H}G with objects in transversal order: object i is the coset t_i H.
inline TranslationGroupoid coset_translation_groupoid(const Transversal& t) {
  const FiniteGroup& g = t.subgroup.parent;
  const int n = t.index();
  auto cs = cosets(g, t.subgroup);
  std::vector<int> coset_pos(cs.size());
  for (int i = 0; i < n; ++i) coset_pos[coset_of(cs, t.reps[i])] = i;
  std::vector<int> action(static_cast<std::size_t>(g.order) * n);
  for (int ge = 0; ge < g.order; ++ge)
    for (int i = 0; i < n; ++i)
      action[ge * n + i] = coset_pos[coset_of(cs, g.mul(ge, t.reps[i]))];
  TranslationGroupoid bg = translation_groupoid(g, n, std::move(action));
  bg.category.object_labels.resize(n);
  for (int i = 0; i < n; ++i)
    bg.category.object_labels[i] = g.label(t.reps[i]) + "H";
  return bg;
}

/// ι: H ↪ B_{G/H}G sending the one object of H to the identity coset.
inline CatFunctor inclusion_iota(const Subgroup& h, const TranslationGroupoid& bg) {
  FiniteCategory hcat = one_object_category(h.as_group());
  CatFunctor F{hcat, bg.category, {0}, {}};
  F.mor_map.reserve(h.size());
  for (int e : h.elements) F.mor_map.push_back(bg.morphism(e, 0));
  return F;
}

/// κ: B_{G/H}G → H induced by the transversal: (g, t_iH) ↦ h_i(g), the
/// identification of Aut(t_iH) with H via conjugation by t_i.
inline CatFunctor kappa(const Transversal& t, const TranslationGroupoid& bg) {
  const FiniteGroup& g = t.subgroup.parent;
  FiniteCategory hcat = one_object_category(t.subgroup.as_group());
  CatFunctor F{bg.category, hcat, std::vector<int>(bg.carrier_size, 0), {}};
  F.mor_map.resize(bg.category.num_morphisms());
  for (int ge = 0; ge < g.order; ++ge) {
    WreathElement w = alpha(ge, t);
    for (int i = 0; i < bg.carrier_size; ++i)
      F.mor_map[bg.morphism(ge, i)] = t.subgroup.local(w.hs[i]);
  }
  return F;
}

/// β: B_{G/H}G → B_nΣn × H, object t_iH ↦ (i, ∗) and morphism
/// (g, t_iH) ↦ (σ_g at i, h_i(g)).
inline CatFunctor beta(const Transversal& t, const TranslationGroupoid& bg,
                       const SymmetricGroup& sn, const TranslationGroupoid& bnsn,
                       const FiniteCategory& product) {
  const FiniteGroup& g = t.subgroup.parent;
  const int hsize = t.subgroup.size();
  CatFunctor F{bg.category, product, {}, {}};
  F.ob_map.resize(bg.carrier_size);
  for (int i = 0; i < bg.carrier_size; ++i) F.ob_map[i] = i; // (i, ∗) has index i
  F.mor_map.resize(bg.category.num_morphisms());
  for (int ge = 0; ge < g.order; ++ge) {
    WreathElement w = alpha(ge, t);
    int sigma_idx = sn.index_of.at(w.sigma);
    for (int i = 0; i < bg.carrier_size; ++i) {
      int bnsn_mor = bnsn.morphism(sigma_idx, i);
      F.mor_map[bg.morphism(ge, i)] = bnsn_mor * hsize + t.subgroup.local(w.hs[i]);
    }
  }
  return F;
}

/// Projection B_nΣn × H → H (collapse the first factor to the point).
inline CatFunctor projection_to_h(const FiniteCategory& product,
                                  const FiniteCategory& hcat,
                                  int hsize) {
  CatFunctor F{product, hcat, std::vector<int>(product.num_objects, 0), {}};
  F.mor_map.resize(product.num_morphisms());
  for (int m = 0; m < product.num_morphisms(); ++m) F.mor_map[m] = m % hsize;
  return F;
}

/// True iff proj ∘ beta = kappa strictly.
inline bool check_triangle(const CatFunctor& kappa_f, const CatFunctor& beta_f,
                           const CatFunctor& proj) {
  if (!(beta_f.source == kappa_f.source) || !(proj.source == beta_f.target) ||
      !(proj.target == kappa_f.target))
    fail_shape("check_triangle: functor endpoints do not match");
  CatFunctor around = compose_functors(proj, beta_f);
  return around.ob_map == kappa_f.ob_map && around.mor_map == kappa_f.mor_map;
}

} // namespace normcat
