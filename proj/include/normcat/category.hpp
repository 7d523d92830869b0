#pragma once

#include <optional>
#include <string>
#include <vector>

#include "normcat/error.hpp"
#include "normcat/group.hpp"

namespace normcat {

/// A finite category: indexed object and morphism sets, dom/cod maps, a
/// partial composition table and chosen identities. compose(g, f) = g∘f is
/// defined exactly when cod(f) = dom(g); f acts first.
struct FiniteCategory {
  int num_objects = 0;
  std::vector<int> dom, cod;    // per morphism
  std::vector<int> compose_tab; // m*m row-major, -1 where undefined
  std::vector<int> identity;    // per object
  std::vector<std::string> object_labels, morphism_labels; // decorative

  int num_morphisms() const { return static_cast<int>(dom.size()); }

  bool composable(int g, int f) const { return cod[f] == dom[g]; }

  int compose(int g, int f) const {
    int r = compose_tab[static_cast<std::size_t>(g) * dom.size() + f];
    if (r < 0) fail_shape("compose: morphisms are not composable");
    return r;
  }

  std::string object_label(int x) const {
    return object_labels.empty() ? std::to_string(x) : object_labels[x];
  }
  std::string morphism_label(int f) const {
    return morphism_labels.empty() ? std::to_string(f) : morphism_labels[f];
  }

  friend bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
    return a.num_objects == b.num_objects && a.dom == b.dom && a.cod == b.cod &&
           a.compose_tab == b.compose_tab && a.identity == b.identity;
  }
};

/// Exhaustive category-axiom audit: identity laws, composability domain of
/// the table, and associativity over all composable triples.
inline void check_category(const FiniteCategory& c) {
  const int m = c.num_morphisms();
  if (c.num_objects < 0) fail_validation("category: negative object count");
  if (c.cod.size() != c.dom.size())
    fail_validation("category: dom/cod size mismatch");
  if (static_cast<int>(c.identity.size()) != c.num_objects)
    fail_validation("category: identity table size mismatch");
  if (c.compose_tab.size() != static_cast<std::size_t>(m) * m)
    fail_validation("category: composition table size mismatch");
  for (int f = 0; f < m; ++f)
    if (c.dom[f] < 0 || c.dom[f] >= c.num_objects || c.cod[f] < 0 ||
        c.cod[f] >= c.num_objects)
      fail_validation("category: dom/cod out of range");
  for (int x = 0; x < c.num_objects; ++x) {
    int e = c.identity[x];
    if (e < 0 || e >= m || c.dom[e] != x || c.cod[e] != x)
      fail_validation("category: bad identity morphism");
  }
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      int r = c.compose_tab[static_cast<std::size_t>(g) * m + f];
      if (c.composable(g, f)) {
        if (r < 0) fail_validation("category: composable pair left undefined");
        if (r >= m || c.dom[r] != c.dom[f] || c.cod[r] != c.cod[g])
          fail_validation("category: composite has wrong endpoints");
      } else if (r != -1) {
        fail_validation("category: composition defined on non-composable pair");
      }
    }
  for (int x = 0; x < c.num_objects; ++x) {
    int e = c.identity[x];
    for (int f = 0; f < m; ++f) {
      if (c.dom[f] == x && c.compose(f, e) != f)
        fail_validation("category: right identity law fails");
      if (c.cod[f] == x && c.compose(e, f) != f)
        fail_validation("category: left identity law fails");
    }
  }
  for (int h = 0; h < m; ++h)
    for (int g = 0; g < m; ++g) {
      if (!c.composable(h, g)) continue;
      int hg = c.compose(h, g);
      for (int f = 0; f < m; ++f) {
        if (!c.composable(g, f)) continue;
        if (c.compose(hg, f) != c.compose(h, c.compose(g, f)))
          fail_validation("category: associativity fails");
      }
    }
}

/// A functor between finite categories, as explicit object/morphism maps.
/// Equality is strict equality of the maps (and of the end categories).
struct CatFunctor {
  FiniteCategory source, target;
  std::vector<int> ob_map, mor_map;

  friend bool operator==(const CatFunctor& a, const CatFunctor& b) {
    return a.source == b.source && a.target == b.target && a.ob_map == b.ob_map &&
           a.mor_map == b.mor_map;
  }
};

/// Functor-axiom audit: endpoint preservation, identities, composition.
inline void check_functor(const CatFunctor& F) {
  const FiniteCategory& A = F.source;
  const FiniteCategory& B = F.target;
  if (static_cast<int>(F.ob_map.size()) != A.num_objects ||
      F.mor_map.size() != A.dom.size())
    fail_validation("functor: map size mismatch");
  for (int x : F.ob_map)
    if (x < 0 || x >= B.num_objects) fail_validation("functor: object image out of range");
  for (int f = 0; f < A.num_morphisms(); ++f) {
    int ff = F.mor_map[f];
    if (ff < 0 || ff >= B.num_morphisms())
      fail_validation("functor: morphism image out of range");
    if (B.dom[ff] != F.ob_map[A.dom[f]] || B.cod[ff] != F.ob_map[A.cod[f]])
      fail_validation("functor: endpoints not preserved");
  }
  for (int x = 0; x < A.num_objects; ++x)
    if (F.mor_map[A.identity[x]] != B.identity[F.ob_map[x]])
      fail_validation("functor: identities not preserved");
  for (int g = 0; g < A.num_morphisms(); ++g)
    for (int f = 0; f < A.num_morphisms(); ++f)
      if (A.composable(g, f) &&
          F.mor_map[A.compose(g, f)] != B.compose(F.mor_map[g], F.mor_map[f]))
        fail_validation("functor: composition not preserved");
}

inline CatFunctor identity_functor(const FiniteCategory& c) {
  CatFunctor F{c, c, {}, {}};
  F.ob_map.resize(c.num_objects);
  std::iota(F.ob_map.begin(), F.ob_map.end(), 0);
  F.mor_map.resize(c.num_morphisms());
  std::iota(F.mor_map.begin(), F.mor_map.end(), 0);
  return F;
}

/// G ∘ F for F: A → B, G: B → C.
inline CatFunctor compose_functors(const CatFunctor& G, const CatFunctor& F) {
  if (!(F.target == G.source)) fail_shape("compose_functors: middle category mismatch");
  CatFunctor R{F.source, G.target, {}, {}};
  R.ob_map.reserve(F.ob_map.size());
  for (int x : F.ob_map) R.ob_map.push_back(G.ob_map[x]);
  R.mor_map.reserve(F.mor_map.size());
  for (int f : F.mor_map) R.mor_map.push_back(G.mor_map[f]);
  return R;
}

/// A group as a one-object category: morphisms are the group elements and
/// composition is the group multiplication.
inline FiniteCategory one_object_category(const FiniteGroup& g) {
  FiniteCategory c;
  c.num_objects = 1;
  c.dom.assign(g.order, 0);
  c.cod.assign(g.order, 0);
  c.identity = {g.identity};
  c.compose_tab = g.mul_table;
  c.object_labels = {"*"};
  c.morphism_labels = g.labels;
  return c;
}

/// Product category. Object (i, j) has index i·|ob B| + j, morphism (f, g)
/// has index f·|mor B| + g; everything is componentwise.
inline FiniteCategory product_category(const FiniteCategory& a,
                                       const FiniteCategory& b) {
  FiniteCategory c;
  const int mb = b.num_morphisms();
  c.num_objects = a.num_objects * b.num_objects;
  const int m = a.num_morphisms() * mb;
  c.dom.resize(m);
  c.cod.resize(m);
  c.compose_tab.assign(static_cast<std::size_t>(m) * m, -1);
  c.identity.resize(c.num_objects);
  for (int f = 0; f < a.num_morphisms(); ++f)
    for (int g = 0; g < mb; ++g) {
      c.dom[f * mb + g] = a.dom[f] * b.num_objects + b.dom[g];
      c.cod[f * mb + g] = a.cod[f] * b.num_objects + b.cod[g];
    }
  for (int x = 0; x < a.num_objects; ++x)
    for (int y = 0; y < b.num_objects; ++y)
      c.identity[x * b.num_objects + y] = a.identity[x] * mb + b.identity[y];
  for (int f2 = 0; f2 < a.num_morphisms(); ++f2)
    for (int g2 = 0; g2 < mb; ++g2)
      for (int f1 = 0; f1 < a.num_morphisms(); ++f1)
        for (int g1 = 0; g1 < mb; ++g1)
          if (a.composable(f2, f1) && b.composable(g2, g1))
            c.compose_tab[static_cast<std::size_t>(f2 * mb + g2) * m + (f1 * mb + g1)] =
                a.compose(f2, f1) * mb + b.compose(g2, g1);
  if (!a.morphism_labels.empty() || !b.morphism_labels.empty()) {
    c.morphism_labels.reserve(m);
    for (int f = 0; f < a.num_morphisms(); ++f)
      for (int g = 0; g < mb; ++g)
        c.morphism_labels.push_back("(" + a.morphism_label(f) + "," +
                                    b.morphism_label(g) + ")");
  }
  return c;
}

/// Connectivity of the underlying undirected graph on objects.
inline bool is_connected(const FiniteCategory& c) {
  if (c.num_objects <= 1) return true;
  std::vector<char> seen(c.num_objects, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int f = 0; f < c.num_morphisms(); ++f) {
      int other = -1;
      if (c.dom[f] == x) other = c.cod[f];
      else if (c.cod[f] == x) other = c.dom[f];
      if (other >= 0 && !seen[other]) {
        seen[other] = 1;
        stack.push_back(other);
      }
    }
  }
  for (char s : seen)
    if (!s) return false;
  return true;
}

/// Two-sided inverse of a morphism, if one exists.
inline std::optional<int> morphism_inverse(const FiniteCategory& c, int f) {
  for (int g = 0; g < c.num_morphisms(); ++g)
    if (c.dom[g] == c.cod[f] && c.cod[g] == c.dom[f] &&
        c.compose(g, f) == c.identity[c.dom[f]] &&
        c.compose(f, g) == c.identity[c.cod[f]])
      return g;
  return std::nullopt;
}

inline bool is_groupoid(const FiniteCategory& c) {
  for (int f = 0; f < c.num_morphisms(); ++f)
    if (!morphism_inverse(c, f)) return false;
  return true;
}

} // namespace normcat
