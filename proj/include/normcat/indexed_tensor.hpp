#pragma once

#include <algorithm>
#include <vector>

#include "normcat/covering.hpp"
#include "normcat/indexing.hpp"
#include "normcat/monoidal.hpp"

namespace normcat {

namespace detail {

/// Tensor of an unordered morphism set, taken in domain order (ascending
/// position of the domain in dom_objects), then shuffled so the codomain
/// factors land in cod_objects order. dom_objects/cod_objects are ascending
/// I-object id lists; parts[k] is the morphism out of dom_objects[k].
template <MonoidalInstance Inst>
typename Inst::Morphism tensor_with_shuffle(
    const Inst& m, const Diagram<Inst>& X,
    const std::vector<int>& cod_objects,
    const std::vector<typename Inst::Morphism>& parts,
    const std::vector<int>& part_cods) {
  typename Inst::Morphism tens = tensor_fold_morphisms(m, parts);
  const int n = static_cast<int>(parts.size());
  Perm pi(n);
  std::vector<typename Inst::Object> cod_vals(n);
  for (int k = 0; k < n; ++k) {
    auto it = std::lower_bound(cod_objects.begin(), cod_objects.end(), part_cods[k]);
    pi[k] = static_cast<int>(it - cod_objects.begin());
    cod_vals[k] = X.ob[part_cods[k]];
  }
  return m.compose(m.permute(cod_vals, pi), tens);
}

} // namespace detail

/// Monoidal pushforward along a covering category: the value at j is the
/// tensor of X over the fiber (ascending object order), the value at f the
/// tensor of the unique lifts, shuffled from domain-fiber order into
/// codomain-fiber order.
template <MonoidalInstance Inst>
Diagram<Inst> indexed_tensor_covering(const CoveringCategory& c,
                                      const Diagram<Inst>& X) {
  if (!(X.shape == c.p.source))
    fail_shape("indexed_tensor_covering: diagram shape is not the total category");
  const FiniteCategory& I = c.p.source;
  const FiniteCategory& J = c.p.target;
  const Inst& m = X.instance;

  Diagram<Inst> out{J, m, {}, {}};
  out.ob.reserve(J.num_objects);
  for (int j = 0; j < J.num_objects; ++j) {
    std::vector<typename Inst::Object> vals;
    for (int i : c.fibers[j]) vals.push_back(X.ob[i]);
    out.ob.push_back(tensor_fold_objects(m, vals));
  }

  // bucket the lifts of each J-morphism by their domain
  std::vector<std::vector<int>> lifts(J.num_morphisms());
  for (int u = 0; u < I.num_morphisms(); ++u) lifts[c.p.mor_map[u]].push_back(u);

  out.mor.reserve(J.num_morphisms());
  for (int f = 0; f < J.num_morphisms(); ++f) {
    const auto& fib_dom = c.fibers[J.dom[f]];
    std::vector<typename Inst::Morphism> parts;
    std::vector<int> part_cods;
    for (int i : fib_dom) {
      int lift = -1;
      for (int u : lifts[f])
        if (I.dom[u] == i) lift = u;
      if (lift < 0) fail_validation("indexed_tensor_covering: missing lift");
      parts.push_back(X.mor[lift]);
      part_cods.push_back(I.cod[lift]);
    }
    out.mor.push_back(detail::tensor_with_shuffle(m, X, c.fibers[J.cod[f]],
                                                  parts, part_cods));
  }
  return out;
}

/// The general indexed tensor product driven by an indexing functor
/// P: J → (Iⁿ∖Δ)/Σn, same ordering conventions as the covering case.
template <MonoidalInstance Inst>
Diagram<Inst> general_indexed_tensor(const IndexingFunctor& P,
                                     const Diagram<Inst>& X) {
  if (!(X.shape == P.I))
    fail_shape("general_indexed_tensor: diagram shape is not P's total category");
  const Inst& m = X.instance;

  Diagram<Inst> out{P.J, m, {}, {}};
  out.ob.reserve(P.J.num_objects);
  for (int j = 0; j < P.J.num_objects; ++j) {
    std::vector<typename Inst::Object> vals;
    for (int i : P.on_objects[j]) vals.push_back(X.ob[i]);
    out.ob.push_back(tensor_fold_objects(m, vals));
  }
  out.mor.reserve(P.J.num_morphisms());
  for (int f = 0; f < P.J.num_morphisms(); ++f) {
    const auto& dom_set = P.on_objects[P.J.dom[f]];
    std::vector<typename Inst::Morphism> parts;
    std::vector<int> part_cods;
    for (int i : dom_set) {
      int arrow = -1;
      for (int u : P.on_morphisms[f])
        if (P.I.dom[u] == i) arrow = u;
      if (arrow < 0) fail_validation("general_indexed_tensor: no arrow at object");
      parts.push_back(X.mor[arrow]);
      part_cods.push_back(P.I.cod[arrow]);
    }
    out.mor.push_back(detail::tensor_with_shuffle(
        m, X, P.on_objects[P.J.cod[f]], parts, part_cods));
  }
  return out;
}

/// The n-fold smash/tensor power Σn≀H-diagram of a B_nΣn × H diagram:
/// (n^⊗X)(∗) = ⊗_i X(i), (n^⊗X)(σ; h_1..h_n) = ⊗_i X(σ at i, h_i).
template <MonoidalInstance Inst>
Diagram<Inst> n_smash(const WreathIndexing& w, const Diagram<Inst>& X) {
  if (!(X.shape == w.product))
    fail_shape("n_smash: diagram shape is not B_nΣn × H");
  return general_indexed_tensor(w.P, X);
}

/// Indexed tensor of a natural transformation: component at j is the tensor
/// of the components over P_j.
template <MonoidalInstance Inst>
DiagramMorphism<Inst> map_indexed_tensor(const IndexingFunctor& P,
                                         const DiagramMorphism<Inst>& f) {
  if (!(f.source.shape == P.I))
    fail_shape("map_indexed_tensor: morphism shape is not P's total category");
  const Inst& m = f.source.instance;
  DiagramMorphism<Inst> out{general_indexed_tensor(P, f.source),
                            general_indexed_tensor(P, f.target),
                            {}};
  out.components.reserve(P.J.num_objects);
  for (int j = 0; j < P.J.num_objects; ++j) {
    std::vector<typename Inst::Morphism> parts;
    for (int i : P.on_objects[j]) parts.push_back(f.components[i]);
    out.components.push_back(tensor_fold_morphisms(m, parts));
  }
  return out;
}

} // namespace normcat
