#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "normcat/category.hpp"

namespace normcat {

struct CoveringViolation {
  std::string kind;   // "no-left-lift", "multiple-left-lift", "no-right-lift",
                      // "multiple-right-lift", "nondiscrete-fiber"
  int j_morphism = -1;
  int i_object = -1;
  std::string detail;
};

struct CoveringReport {
  bool ok = false;
  int n = -1; // common fiber cardinality when J is connected, else -1
  std::vector<std::vector<int>> fibers;
  std::optional<CoveringViolation> violation;
};

/// Unique-lifting audit for p: I → J. For every arrow f of J and every
/// object of I over its domain (resp. codomain) there must be exactly one
/// arrow of I over f with that domain (resp. codomain). Multiple lifts of
/// an identity are reported as a non-discrete fiber.
inline CoveringReport is_covering_category(const CatFunctor& p) {
  check_functor(p);
  const FiniteCategory& I = p.source;
  const FiniteCategory& J = p.target;

  CoveringReport rep;
  rep.fibers.resize(J.num_objects);
  for (int i = 0; i < I.num_objects; ++i) rep.fibers[p.ob_map[i]].push_back(i);

  auto violate = [&](std::string kind, int f, int i, std::string detail) {
    rep.ok = false;
    rep.violation = CoveringViolation{std::move(kind), f, i, std::move(detail)};
  };

  for (int f = 0; f < J.num_morphisms(); ++f) {
    bool f_is_identity = (f == J.identity[J.dom[f]] && J.dom[f] == J.cod[f]);
    for (int i : rep.fibers[J.dom[f]]) {
      int count = 0;
      for (int u = 0; u < I.num_morphisms(); ++u)
        if (p.mor_map[u] == f && I.dom[u] == i) ++count;
      if (count == 0) {
        violate("no-left-lift", f, i,
                "no lift of " + J.morphism_label(f) + " with domain " +
                    I.object_label(i));
        return rep;
      }
      if (count > 1) {
        violate(f_is_identity ? "nondiscrete-fiber" : "multiple-left-lift", f, i,
                std::to_string(count) + " lifts of " + J.morphism_label(f) +
                    " with domain " + I.object_label(i));
        return rep;
      }
    }
    for (int i : rep.fibers[J.cod[f]]) {
      int count = 0;
      for (int u = 0; u < I.num_morphisms(); ++u)
        if (p.mor_map[u] == f && I.cod[u] == i) ++count;
      if (count == 0) {
        violate("no-right-lift", f, i,
                "no lift of " + J.morphism_label(f) + " with codomain " +
                    I.object_label(i));
        return rep;
      }
      if (count > 1) {
        violate(f_is_identity ? "nondiscrete-fiber" : "multiple-right-lift", f, i,
                std::to_string(count) + " lifts of " + J.morphism_label(f) +
                    " with codomain " + I.object_label(i));
        return rep;
      }
    }
  }

  rep.ok = true;
  if (is_connected(J)) {
    rep.n = J.num_objects > 0 ? static_cast<int>(rep.fibers[0].size()) : 0;
    for (const auto& fib : rep.fibers)
      if (static_cast<int>(fib.size()) != rep.n)
        fail_validation("covering: unequal fibers over a connected base");
  }
  return rep;
}

/// A verified covering category with its fiber cache.
struct CoveringCategory {
  CatFunctor p;
  int n = -1;
  std::vector<std::vector<int>> fibers; // per J-object, ascending I-object ids
};

inline CoveringCategory make_covering(CatFunctor p) {
  CoveringReport rep = is_covering_category(p);
  if (!rep.ok)
    fail_validation("make_covering: not a covering category (" +
                    rep.violation->kind + ": " + rep.violation->detail + ")");
  return CoveringCategory{std::move(p), rep.n, std::move(rep.fibers)};
}

/// A functor J → FinSet_iso: a finite set per object, a bijection per
/// morphism.
struct FinSetIsoDiagram {
  FiniteCategory shape;
  std::vector<int> sizes;
  std::vector<std::vector<int>> maps; // maps[f] : sizes[dom f] -> sizes[cod f]
};

inline void check_finset_diagram(const FinSetIsoDiagram& P) {
  const FiniteCategory& J = P.shape;
  if (static_cast<int>(P.sizes.size()) != J.num_objects ||
      static_cast<int>(P.maps.size()) != J.num_morphisms())
    fail_validation("FinSetIsoDiagram: size mismatch with shape");
  for (int f = 0; f < J.num_morphisms(); ++f) {
    const auto& m = P.maps[f];
    if (static_cast<int>(m.size()) != P.sizes[J.dom[f]] ||
        P.sizes[J.dom[f]] != P.sizes[J.cod[f]])
      fail_validation("FinSetIsoDiagram: map is not between equal-size sets");
    std::vector<char> seen(m.size(), 0);
    for (int v : m) {
      if (v < 0 || v >= static_cast<int>(m.size()) || seen[v])
        fail_validation("FinSetIsoDiagram: morphism value is not a bijection");
      seen[v] = 1;
    }
  }
  for (int x = 0; x < J.num_objects; ++x)
    for (int s = 0; s < P.sizes[x]; ++s)
      if (P.maps[J.identity[x]][s] != s)
        fail_validation("FinSetIsoDiagram: identity not preserved");
  for (int g = 0; g < J.num_morphisms(); ++g)
    for (int f = 0; f < J.num_morphisms(); ++f)
      if (J.composable(g, f))
        for (int s = 0; s < P.sizes[J.dom[f]]; ++s)
          if (P.maps[J.compose(g, f)][s] != P.maps[g][P.maps[f][s]])
            fail_validation("FinSetIsoDiagram: composition not preserved");
}

/// Set-based Grothendieck construction. The fiber over j is the set Pj; the
/// lifts of f realize the bijection Pf; composition in I is as in J.
/// Object (j, s) has index offset(j) + s; the lift of f at s has index
/// moffset(f) + s.
inline CoveringCategory grothendieck_set(const FinSetIsoDiagram& P) {
  check_finset_diagram(P);
  const FiniteCategory& J = P.shape;

  std::vector<int> ob_offset(J.num_objects + 1, 0);
  for (int j = 0; j < J.num_objects; ++j)
    ob_offset[j + 1] = ob_offset[j] + P.sizes[j];
  std::vector<int> mor_offset(J.num_morphisms() + 1, 0);
  for (int f = 0; f < J.num_morphisms(); ++f)
    mor_offset[f + 1] = mor_offset[f] + P.sizes[J.dom[f]];

  FiniteCategory I;
  I.num_objects = ob_offset.back();
  const int m = mor_offset.back();
  I.dom.resize(m);
  I.cod.resize(m);
  I.identity.resize(I.num_objects);
  I.compose_tab.assign(static_cast<std::size_t>(m) * m, -1);
  I.object_labels.resize(I.num_objects);
  I.morphism_labels.resize(m);

  CatFunctor p;
  p.target = J;
  p.ob_map.resize(I.num_objects);
  p.mor_map.resize(m);

  for (int j = 0; j < J.num_objects; ++j)
    for (int s = 0; s < P.sizes[j]; ++s) {
      I.object_labels[ob_offset[j] + s] =
          J.object_label(j) + "." + std::to_string(s);
      p.ob_map[ob_offset[j] + s] = j;
    }
  for (int f = 0; f < J.num_morphisms(); ++f)
    for (int s = 0; s < P.sizes[J.dom[f]]; ++s) {
      int u = mor_offset[f] + s;
      I.dom[u] = ob_offset[J.dom[f]] + s;
      I.cod[u] = ob_offset[J.cod[f]] + P.maps[f][s];
      I.morphism_labels[u] = J.morphism_label(f) + "." + std::to_string(s);
      p.mor_map[u] = f;
    }
  for (int j = 0; j < J.num_objects; ++j)
    for (int s = 0; s < P.sizes[j]; ++s)
      I.identity[ob_offset[j] + s] = mor_offset[J.identity[j]] + s;
  for (int g = 0; g < J.num_morphisms(); ++g)
    for (int f = 0; f < J.num_morphisms(); ++f) {
      if (!J.composable(g, f)) continue;
      int gf = J.compose(g, f);
      for (int s = 0; s < P.sizes[J.dom[f]]; ++s) {
        int inner = mor_offset[f] + s;
        int outer = mor_offset[g] + P.maps[f][s];
        I.compose_tab[static_cast<std::size_t>(outer) * m + inner] =
            mor_offset[gf] + s;
      }
    }

  p.source = std::move(I);
  return make_covering(std::move(p));
}

/// A functor J → Cat: a finite category per object, a functor per morphism.
struct CatValuedDiagram {
  FiniteCategory shape;
  std::vector<FiniteCategory> fibers;
  std::vector<CatFunctor> maps;
};

inline void check_cat_diagram(const CatValuedDiagram& P) {
  const FiniteCategory& J = P.shape;
  if (static_cast<int>(P.fibers.size()) != J.num_objects ||
      static_cast<int>(P.maps.size()) != J.num_morphisms())
    fail_validation("CatValuedDiagram: size mismatch with shape");
  for (int f = 0; f < J.num_morphisms(); ++f) {
    if (!(P.maps[f].source == P.fibers[J.dom[f]]) ||
        !(P.maps[f].target == P.fibers[J.cod[f]]))
      fail_validation("CatValuedDiagram: functor endpoints mismatch");
    check_functor(P.maps[f]);
  }
  for (int x = 0; x < J.num_objects; ++x)
    if (!(P.maps[J.identity[x]] == identity_functor(P.fibers[x])))
      fail_validation("CatValuedDiagram: identity not preserved");
  for (int g = 0; g < J.num_morphisms(); ++g)
    for (int f = 0; f < J.num_morphisms(); ++f)
      if (J.composable(g, f) &&
          !(P.maps[J.compose(g, f)] == compose_functors(P.maps[g], P.maps[f])))
        fail_validation("CatValuedDiagram: composition not preserved");
}

/// Categorified Grothendieck construction. Objects are pairs (j, i ∈ Pj);
/// a morphism (f, h): (j, i) → (j', i') consists of f: j → j' in J and
/// h: (Pf)(i) → i' in Pj'. Returns the projection onto J (an opfibration).
inline CatFunctor grothendieck_cat(const CatValuedDiagram& P) {
  check_cat_diagram(P);
  const FiniteCategory& J = P.shape;

  std::vector<int> ob_offset(J.num_objects + 1, 0);
  for (int j = 0; j < J.num_objects; ++j)
    ob_offset[j + 1] = ob_offset[j] + P.fibers[j].num_objects;

  FiniteCategory E;
  E.num_objects = ob_offset.back();
  E.object_labels.resize(E.num_objects);
  CatFunctor q;
  q.target = J;
  q.ob_map.resize(E.num_objects);
  for (int j = 0; j < J.num_objects; ++j)
    for (int i = 0; i < P.fibers[j].num_objects; ++i) {
      q.ob_map[ob_offset[j] + i] = j;
      E.object_labels[ob_offset[j] + i] =
          "(" + J.object_label(j) + "," + P.fibers[j].object_label(i) + ")";
    }

  // morphisms are triples (f, i, h) with h: (Pf)(i) -> i' in the codomain fiber
  struct Triple { int f, i, h; };
  std::vector<Triple> mors;
  std::map<std::tuple<int, int, int>, int> index_of;
  for (int f = 0; f < J.num_morphisms(); ++f) {
    const FiniteCategory& fib_cod = P.fibers[J.cod[f]];
    for (int i = 0; i < P.fibers[J.dom[f]].num_objects; ++i)
      for (int h = 0; h < fib_cod.num_morphisms(); ++h)
        if (fib_cod.dom[h] == P.maps[f].ob_map[i]) {
          index_of[{f, i, h}] = static_cast<int>(mors.size());
          mors.push_back({f, i, h});
        }
  }

  const int m = static_cast<int>(mors.size());
  E.dom.resize(m);
  E.cod.resize(m);
  E.morphism_labels.resize(m);
  q.mor_map.resize(m);
  for (int u = 0; u < m; ++u) {
    const auto& [f, i, h] = mors[u];
    E.dom[u] = ob_offset[J.dom[f]] + i;
    E.cod[u] = ob_offset[J.cod[f]] + P.fibers[J.cod[f]].cod[h];
    E.morphism_labels[u] = "(" + J.morphism_label(f) + "," +
                           P.fibers[J.cod[f]].morphism_label(h) + ")";
    q.mor_map[u] = f;
  }
  E.identity.resize(E.num_objects);
  for (int j = 0; j < J.num_objects; ++j)
    for (int i = 0; i < P.fibers[j].num_objects; ++i)
      E.identity[ob_offset[j] + i] =
          index_of.at({J.identity[j], i, P.fibers[j].identity[i]});

  E.compose_tab.assign(static_cast<std::size_t>(m) * m, -1);
  for (int outer = 0; outer < m; ++outer)
    for (int inner = 0; inner < m; ++inner) {
      const auto& [g, i2, k] = mors[outer];
      const auto& [f, i1, h] = mors[inner];
      if (E.dom[outer] != E.cod[inner] || !J.composable(g, f)) continue;
      // composite is (g∘f, i1, k ∘ (Pg)(h))
      const FiniteCategory& fib = P.fibers[J.cod[g]];
      int gh = P.maps[g].mor_map[h];
      E.compose_tab[static_cast<std::size_t>(outer) * m + inner] =
          index_of.at({J.compose(g, f), i1, fib.compose(k, gh)});
    }

  q.source = std::move(E);
  check_functor(q);
  return q;
}

/// The category of sections of q: E → J: functors s with q∘s = id_J, and
/// natural transformations whose components lie over identities. Brute-force
/// enumeration, guarded by a cap on candidate object assignments.
struct SectionsResult {
  FiniteCategory category;
  std::vector<CatFunctor> objects;                 // the sections themselves
  std::vector<std::vector<int>> morphism_components; // per morphism, per J-object
};

inline SectionsResult sections(const CatFunctor& q, long long cap = 1000000) {
  check_functor(q);
  const FiniteCategory& E = q.source;
  const FiniteCategory& J = q.target;

  std::vector<std::vector<int>> fiber_ob(J.num_objects);
  for (int e = 0; e < E.num_objects; ++e) fiber_ob[q.ob_map[e]].push_back(e);

  long long combos = 1;
  for (const auto& fib : fiber_ob) {
    combos *= static_cast<long long>(fib.size());
    if (combos > cap) fail_size("sections: object assignment count exceeds cap");
    if (combos == 0) break;
  }

  std::vector<int> nonid; // J-morphisms that are not identities
  for (int f = 0; f < J.num_morphisms(); ++f) {
    bool is_id = false;
    for (int x = 0; x < J.num_objects; ++x)
      if (J.identity[x] == f) is_id = true;
    if (!is_id) nonid.push_back(f);
  }

  SectionsResult out;

  std::vector<int> ob_pick(J.num_objects, 0);
  std::vector<int> s_ob(J.num_objects);
  std::vector<int> s_mor(J.num_morphisms(), -1);

  auto try_assignment = [&]() {
    // identities are forced
    for (int x = 0; x < J.num_objects; ++x)
      s_mor[J.identity[x]] = E.identity[s_ob[x]];
    // candidates for the rest
    std::vector<std::vector<int>> cands(nonid.size());
    for (std::size_t k = 0; k < nonid.size(); ++k) {
      int f = nonid[k];
      for (int u = 0; u < E.num_morphisms(); ++u)
        if (q.mor_map[u] == f && E.dom[u] == s_ob[J.dom[f]] &&
            E.cod[u] == s_ob[J.cod[f]])
          cands[k].push_back(u);
      if (cands[k].empty()) return;
    }
    std::vector<std::size_t> pick(nonid.size(), 0);
    while (true) {
      for (std::size_t k = 0; k < nonid.size(); ++k) s_mor[nonid[k]] = cands[k][pick[k]];
      bool functorial = true;
      for (int g = 0; g < J.num_morphisms() && functorial; ++g)
        for (int f = 0; f < J.num_morphisms() && functorial; ++f)
          if (J.composable(g, f) &&
              s_mor[J.compose(g, f)] != E.compose(s_mor[g], s_mor[f]))
            functorial = false;
      if (functorial)
        out.objects.push_back(CatFunctor{J, E, s_ob, s_mor});
      // advance the odometer
      std::size_t k = 0;
      while (k < nonid.size() && ++pick[k] == cands[k].size()) pick[k++] = 0;
      if (k == nonid.size()) break;
    }
  };

  // odometer over object assignments
  if (combos > 0) {
    while (true) {
      for (int x = 0; x < J.num_objects; ++x) s_ob[x] = fiber_ob[x][ob_pick[x]];
      try_assignment();
      int x = 0;
      while (x < J.num_objects &&
             ++ob_pick[x] == static_cast<int>(fiber_ob[x].size()))
        ob_pick[x++] = 0;
      if (x == J.num_objects) break;
    }
  }

  // natural transformations over identities
  const int nsec = static_cast<int>(out.objects.size());
  FiniteCategory& C = out.category;
  C.num_objects = nsec;
  std::map<std::vector<int>, int> mor_index; // key: [src, tgt, components...]
  for (int a = 0; a < nsec; ++a)
    for (int b = 0; b < nsec; ++b) {
      std::vector<std::vector<int>> comp_cands(J.num_objects);
      bool any_empty = false;
      for (int x = 0; x < J.num_objects; ++x) {
        for (int u = 0; u < E.num_morphisms(); ++u)
          if (q.mor_map[u] == J.identity[x] &&
              E.dom[u] == out.objects[a].ob_map[x] &&
              E.cod[u] == out.objects[b].ob_map[x])
            comp_cands[x].push_back(u);
        if (comp_cands[x].empty()) any_empty = true;
      }
      if (any_empty) continue;
      std::vector<std::size_t> pick(J.num_objects, 0);
      while (true) {
        std::vector<int> comps(J.num_objects);
        for (int x = 0; x < J.num_objects; ++x) comps[x] = comp_cands[x][pick[x]];
        bool natural = true;
        for (int f = 0; f < J.num_morphisms() && natural; ++f)
          if (E.compose(out.objects[b].mor_map[f], comps[J.dom[f]]) !=
              E.compose(comps[J.cod[f]], out.objects[a].mor_map[f]))
            natural = false;
        if (natural) {
          std::vector<int> key{a, b};
          key.insert(key.end(), comps.begin(), comps.end());
          if (!mor_index.count(key)) {
            mor_index[key] = static_cast<int>(C.dom.size());
            C.dom.push_back(a);
            C.cod.push_back(b);
            out.morphism_components.push_back(comps);
          }
        }
        std::size_t x = 0;
        while (x < static_cast<std::size_t>(J.num_objects) &&
               ++pick[x] == comp_cands[x].size())
          pick[x++] = 0;
        if (x == static_cast<std::size_t>(J.num_objects)) break;
      }
    }

  const int m = static_cast<int>(C.dom.size());
  C.identity.resize(nsec);
  for (int a = 0; a < nsec; ++a) {
    std::vector<int> key{a, a};
    for (int x = 0; x < J.num_objects; ++x)
      key.push_back(E.identity[out.objects[a].ob_map[x]]);
    C.identity[a] = mor_index.at(key);
  }
  C.compose_tab.assign(static_cast<std::size_t>(m) * m, -1);
  for (int outer = 0; outer < m; ++outer)
    for (int inner = 0; inner < m; ++inner) {
      if (C.dom[outer] != C.cod[inner]) continue;
      std::vector<int> key{C.dom[inner], C.cod[outer]};
      for (int x = 0; x < J.num_objects; ++x)
        key.push_back(E.compose(out.morphism_components[outer][x],
                                out.morphism_components[inner][x]));
      C.compose_tab[static_cast<std::size_t>(outer) * m + inner] = mor_index.at(key);
    }
  return out;
}

/// The functor category B^A, enumerated directly: objects are all functors
/// A → B, morphisms all natural transformations. Independent of sections().
struct FunctorCategoryResult {
  FiniteCategory category;
  std::vector<CatFunctor> objects;
  std::vector<std::vector<int>> morphism_components;
};

inline FunctorCategoryResult functor_category(const FiniteCategory& A,
                                              const FiniteCategory& B,
                                              long long cap = 1000000) {
  long long combos = 1;
  for (int x = 0; x < A.num_objects; ++x) {
    combos *= static_cast<long long>(B.num_objects);
    if (combos > cap) fail_size("functor_category: assignment count exceeds cap");
  }

  std::vector<int> nonid;
  for (int f = 0; f < A.num_morphisms(); ++f) {
    bool is_id = false;
    for (int x = 0; x < A.num_objects; ++x)
      if (A.identity[x] == f) is_id = true;
    if (!is_id) nonid.push_back(f);
  }

  FunctorCategoryResult out;
  std::vector<int> ob(A.num_objects, 0);
  std::vector<int> mor(A.num_morphisms(), -1);
  while (true) {
    // try all morphism assignments for this object assignment
    for (int x = 0; x < A.num_objects; ++x) mor[A.identity[x]] = B.identity[ob[x]];
    std::vector<std::vector<int>> cands(nonid.size());
    bool feasible = true;
    for (std::size_t k = 0; k < nonid.size(); ++k) {
      int f = nonid[k];
      for (int u = 0; u < B.num_morphisms(); ++u)
        if (B.dom[u] == ob[A.dom[f]] && B.cod[u] == ob[A.cod[f]])
          cands[k].push_back(u);
      if (cands[k].empty()) feasible = false;
    }
    if (feasible) {
      std::vector<std::size_t> pick(nonid.size(), 0);
      while (true) {
        for (std::size_t k = 0; k < nonid.size(); ++k) mor[nonid[k]] = cands[k][pick[k]];
        bool functorial = true;
        for (int g = 0; g < A.num_morphisms() && functorial; ++g)
          for (int f = 0; f < A.num_morphisms() && functorial; ++f)
            if (A.composable(g, f) &&
                mor[A.compose(g, f)] != B.compose(mor[g], mor[f]))
              functorial = false;
        if (functorial) out.objects.push_back(CatFunctor{A, B, ob, mor});
        std::size_t k = 0;
        while (k < nonid.size() && ++pick[k] == cands[k].size()) pick[k++] = 0;
        if (k == nonid.size()) break;
      }
    }
    int x = 0;
    while (x < A.num_objects && ++ob[x] == B.num_objects) ob[x++] = 0;
    if (x == A.num_objects) break;
  }

  const int nfun = static_cast<int>(out.objects.size());
  FiniteCategory& C = out.category;
  C.num_objects = nfun;
  std::map<std::vector<int>, int> mor_index;
  for (int a = 0; a < nfun; ++a)
    for (int b = 0; b < nfun; ++b) {
      std::vector<std::vector<int>> comp_cands(A.num_objects);
      bool any_empty = false;
      for (int x = 0; x < A.num_objects; ++x) {
        for (int u = 0; u < B.num_morphisms(); ++u)
          if (B.dom[u] == out.objects[a].ob_map[x] &&
              B.cod[u] == out.objects[b].ob_map[x])
            comp_cands[x].push_back(u);
        if (comp_cands[x].empty()) any_empty = true;
      }
      if (any_empty) continue;
      std::vector<std::size_t> pick(A.num_objects, 0);
      while (true) {
        std::vector<int> comps(A.num_objects);
        for (int x = 0; x < A.num_objects; ++x) comps[x] = comp_cands[x][pick[x]];
        bool natural = true;
        for (int f = 0; f < A.num_morphisms() && natural; ++f)
          if (B.compose(out.objects[b].mor_map[f], comps[A.dom[f]]) !=
              B.compose(comps[A.cod[f]], out.objects[a].mor_map[f]))
            natural = false;
        if (natural) {
          std::vector<int> key{a, b};
          key.insert(key.end(), comps.begin(), comps.end());
          if (!mor_index.count(key)) {
            mor_index[key] = static_cast<int>(C.dom.size());
            C.dom.push_back(a);
            C.cod.push_back(b);
            out.morphism_components.push_back(comps);
          }
        }
        std::size_t x = 0;
        while (x < static_cast<std::size_t>(A.num_objects) &&
               ++pick[x] == comp_cands[x].size())
          pick[x++] = 0;
        if (x == static_cast<std::size_t>(A.num_objects)) break;
      }
    }

  const int m = static_cast<int>(C.dom.size());
  C.identity.resize(nfun);
  for (int a = 0; a < nfun; ++a) {
    std::vector<int> key{a, a};
    for (int x = 0; x < A.num_objects; ++x)
      key.push_back(B.identity[out.objects[a].ob_map[x]]);
    C.identity[a] = mor_index.at(key);
  }
  C.compose_tab.assign(static_cast<std::size_t>(m) * m, -1);
  for (int outer = 0; outer < m; ++outer)
    for (int inner = 0; inner < m; ++inner) {
      if (C.dom[outer] != C.cod[inner]) continue;
      std::vector<int> key{C.dom[inner], C.cod[outer]};
      for (int x = 0; x < A.num_objects; ++x)
        key.push_back(B.compose(out.morphism_components[outer][x],
                                out.morphism_components[inner][x]));
      C.compose_tab[static_cast<std::size_t>(outer) * m + inner] = mor_index.at(key);
    }
  return out;
}

} // namespace normcat
