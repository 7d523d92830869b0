#pragma once

#include <concepts>
#include <string>
#include <vector>

#include "normcat/category.hpp"
#include "normcat/perm.hpp"

namespace normcat {

/// Contract for a pluggable finite symmetric monoidal category. All values
/// are exact and comparable for equality; composition and tensor are total
/// on compatible arguments. permute(objs, pi) is the canonical reordering
/// isomorphism  objs[0] ⊗ ... ⊗ objs[k-1]  →  reordered tensor  sending
/// slot i to slot pi[i]; it must satisfy permute(id) = identity and
/// permute(objs, tau∘sigma) = permute(sigma-reordered objs, tau) ∘
/// permute(objs, sigma).
template <typename T>
concept MonoidalInstance = requires(const T& m, const typename T::Object& a,
                                    const typename T::Morphism& f,
                                    const std::vector<typename T::Object>& objs,
                                    const Perm& pi) {
  requires std::equality_comparable<typename T::Object>;
  requires std::equality_comparable<typename T::Morphism>;
  { m.dom(f) } -> std::same_as<typename T::Object>;
  { m.cod(f) } -> std::same_as<typename T::Object>;
  { m.compose(f, f) } -> std::same_as<typename T::Morphism>;
  { m.identity(a) } -> std::same_as<typename T::Morphism>;
  { m.tensor_object(a, a) } -> std::same_as<typename T::Object>;
  { m.tensor_morphism(f, f) } -> std::same_as<typename T::Morphism>;
  { m.unit() } -> std::same_as<typename T::Object>;
  { m.permute(objs, pi) } -> std::same_as<typename T::Morphism>;
  { m.name() } -> std::convertible_to<std::string>;
};

template <MonoidalInstance Inst>
typename Inst::Object tensor_fold_objects(
    const Inst& m, const std::vector<typename Inst::Object>& objs) {
  if (objs.empty()) return m.unit(); // empty tensor is the unit
  typename Inst::Object acc = objs[0];
  for (std::size_t i = 1; i < objs.size(); ++i)
    acc = m.tensor_object(acc, objs[i]);
  return acc;
}

template <MonoidalInstance Inst>
typename Inst::Morphism tensor_fold_morphisms(
    const Inst& m, const std::vector<typename Inst::Morphism>& ms) {
  if (ms.empty()) return m.identity(m.unit());
  typename Inst::Morphism acc = ms[0];
  for (std::size_t i = 1; i < ms.size(); ++i)
    acc = m.tensor_morphism(acc, ms[i]);
  return acc;
}

/// A functor from a finite shape category into a monoidal instance.
template <MonoidalInstance Inst>
struct Diagram {
  FiniteCategory shape;
  Inst instance;
  std::vector<typename Inst::Object> ob;
  std::vector<typename Inst::Morphism> mor;
};

template <MonoidalInstance Inst>
bool diagrams_equal(const Diagram<Inst>& x, const Diagram<Inst>& y) {
  return x.shape == y.shape && x.instance == y.instance && x.ob == y.ob &&
         x.mor == y.mor;
}

/// Functoriality audit over the whole shape.
template <MonoidalInstance Inst>
void check_diagram(const Diagram<Inst>& X) {
  const FiniteCategory& s = X.shape;
  if (static_cast<int>(X.ob.size()) != s.num_objects ||
      static_cast<int>(X.mor.size()) != s.num_morphisms())
    fail_validation("diagram: value count mismatch with shape");
  for (int f = 0; f < s.num_morphisms(); ++f) {
    if (!(X.instance.dom(X.mor[f]) == X.ob[s.dom[f]]) ||
        !(X.instance.cod(X.mor[f]) == X.ob[s.cod[f]]))
      fail_validation("diagram: morphism value endpoints mismatch");
  }
  for (int x = 0; x < s.num_objects; ++x)
    if (!(X.mor[s.identity[x]] == X.instance.identity(X.ob[x])))
      fail_validation("diagram: identity not preserved");
  for (int g = 0; g < s.num_morphisms(); ++g)
    for (int f = 0; f < s.num_morphisms(); ++f)
      if (s.composable(g, f) &&
          !(X.mor[s.compose(g, f)] == X.instance.compose(X.mor[g], X.mor[f])))
        fail_validation("diagram: composition not preserved");
}

/// A natural transformation between diagrams on the same shape.
template <MonoidalInstance Inst>
struct DiagramMorphism {
  Diagram<Inst> source, target;
  std::vector<typename Inst::Morphism> components; // per shape object
};

template <MonoidalInstance Inst>
void check_diagram_morphism(const DiagramMorphism<Inst>& f) {
  if (!(f.source.shape == f.target.shape) ||
      !(f.source.instance == f.target.instance))
    fail_shape("diagram morphism: source and target live on different shapes");
  const FiniteCategory& s = f.source.shape;
  const Inst& m = f.source.instance;
  if (static_cast<int>(f.components.size()) != s.num_objects)
    fail_validation("diagram morphism: component count mismatch");
  for (int x = 0; x < s.num_objects; ++x)
    if (!(m.dom(f.components[x]) == f.source.ob[x]) ||
        !(m.cod(f.components[x]) == f.target.ob[x]))
      fail_validation("diagram morphism: component endpoints mismatch");
  for (int u = 0; u < s.num_morphisms(); ++u)
    if (!(m.compose(f.target.mor[u], f.components[s.dom[u]]) ==
          m.compose(f.components[s.cod[u]], f.source.mor[u])))
      fail_validation("diagram morphism: naturality square fails");
}

/// Pullback (precomposition) of a diagram along a functor F: A → B.
template <MonoidalInstance Inst>
Diagram<Inst> pullback(const CatFunctor& F, const Diagram<Inst>& X) {
  if (!(F.target == X.shape))
    fail_shape("pullback: functor target differs from diagram shape");
  Diagram<Inst> out{F.source, X.instance, {}, {}};
  out.ob.reserve(F.ob_map.size());
  for (int x : F.ob_map) out.ob.push_back(X.ob[x]);
  out.mor.reserve(F.mor_map.size());
  for (int f : F.mor_map) out.mor.push_back(X.mor[f]);
  return out;
}

/// Pullback of a diagram morphism along a functor.
template <MonoidalInstance Inst>
DiagramMorphism<Inst> pullback_morphism(const CatFunctor& F,
                                        const DiagramMorphism<Inst>& f) {
  DiagramMorphism<Inst> out{pullback(F, f.source), pullback(F, f.target), {}};
  out.components.reserve(F.ob_map.size());
  for (int x : F.ob_map) out.components.push_back(f.components[x]);
  return out;
}

} // namespace normcat
