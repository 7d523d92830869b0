#pragma once

#include <string>
#include <vector>

#include "normcat/group.hpp"
#include "normcat/perm.hpp"

namespace normcat {

/// An element (σ; h_1,...,h_n) of Σn ≀ H. The h_i are stored as parent-group
/// indices lying in the base subgroup.
struct WreathElement {
  Perm sigma;           // permutation of {0..n-1}
  std::vector<int> hs;  // n parent indices, all inside the base subgroup

  int n() const { return static_cast<int>(sigma.size()); }

  friend bool operator==(const WreathElement& a, const WreathElement& b) {
    return a.sigma == b.sigma && a.hs == b.hs;
  }
};

/// Product law of the wreath group:
///   (σ; h_1,...,h_n) · (τ; k_1,...,k_n) = (στ; h_{τ(1)}k_1,...,h_{τ(n)}k_n).
/// στ composes right-to-left (τ acts first), like everything else here.
inline WreathElement wreath_mul(const Subgroup& base, const WreathElement& a,
                                const WreathElement& b) {
  if (a.n() != b.n()) fail_shape("wreath_mul: mismatched n");
  const FiniteGroup& g = base.parent;
  WreathElement r;
  r.sigma = perm_compose(a.sigma, b.sigma);
  r.hs.resize(a.n());
  for (int i = 0; i < a.n(); ++i) r.hs[i] = g.mul(a.hs[b.sigma[i]], b.hs[i]);
  return r;
}

inline WreathElement wreath_identity(const Subgroup& base, int n) {
  return WreathElement{perm_identity(n),
                       std::vector<int>(n, base.parent.identity)};
}

/// The wreath homomorphism α: G → Σn ≀ H attached to a transversal, defined
/// by g·t_i = t_{σ_g(i)}·h_i(g). The solution exists and is unique.
inline WreathElement alpha(int g_elt, const Transversal& t) {
  const FiniteGroup& g = t.subgroup.parent;
  const int n = t.index();
  WreathElement w{Perm(n), std::vector<int>(n)};
  for (int i = 0; i < n; ++i) {
    const int moved = g.mul(g_elt, t.reps[i]);
    int j = -1;
    for (int cand = 0; cand < n; ++cand) {
      int h = g.mul(g.inverse(t.reps[cand]), moved);
      if (t.subgroup.contains(h)) {
        j = cand;
        w.hs[i] = h;
        break;
      }
    }
    if (j < 0) fail_validation("alpha: no coset representative matches");
    w.sigma[i] = j;
  }
  return w;
}

/// Σn ≀ H realized as a FiniteGroup. Element index encoding is
/// (σ-rank, h_1, ..., h_n) in mixed radix with h_n fastest, where σ ranks
/// follow lexicographic order and h digits are subgroup-local positions.
struct WreathGroup {
  int n = 0;
  Subgroup base;
  FiniteGroup group;
  std::vector<Perm> sigma_perms; // lexicographic, index 0 = identity

  int encode(const WreathElement& w) const {
    int sigma_rank = -1;
    for (std::size_t i = 0; i < sigma_perms.size(); ++i)
      if (sigma_perms[i] == w.sigma) { sigma_rank = static_cast<int>(i); break; }
    if (sigma_rank < 0) fail_validation("WreathGroup::encode: bad sigma");
    int idx = sigma_rank;
    for (int i = 0; i < n; ++i) idx = idx * base.size() + base.local(w.hs[i]);
    return idx;
  }

  WreathElement decode(int idx) const {
    WreathElement w{Perm(n), std::vector<int>(n)};
    for (int i = n - 1; i >= 0; --i) {
      w.hs[i] = base.elements[idx % base.size()];
      idx /= base.size();
    }
    w.sigma = sigma_perms[idx];
    return w;
  }
};

inline std::string wreath_label(const Subgroup& base, const WreathElement& w) {
  std::string s = "(" + perm_to_cycles(w.sigma) + ";";
  for (int i = 0; i < w.n(); ++i)
    s += (i ? "," : " ") + base.parent.label(w.hs[i]);
  return s + ")";
}

inline WreathGroup wreath_group(int n, const Subgroup& base) {
  if (n <= 0) fail_validation("wreath_group: n must be positive");
  WreathGroup w;
  w.n = n;
  w.base = base;
  w.sigma_perms = all_perms(n);
  int order = static_cast<int>(w.sigma_perms.size());
  for (int i = 0; i < n; ++i) order *= base.size();

  w.group.order = order;
  w.group.mul_table.resize(static_cast<std::size_t>(order) * order);
  w.group.labels.reserve(order);
  std::vector<WreathElement> elems(order);
  for (int i = 0; i < order; ++i) {
    elems[i] = w.decode(i);
    w.group.labels.push_back(wreath_label(base, elems[i]));
  }
  w.group.identity = w.encode(wreath_identity(base, n));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      w.group.mul_table[a * order + b] = w.encode(wreath_mul(base, elems[a], elems[b]));
  return w;
}

} // namespace normcat
