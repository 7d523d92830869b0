#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "normcat/error.hpp"
#include "normcat/perm.hpp"

namespace normcat {

/// A finite group given by a total multiplication table on dense element
/// indices 0..order-1. Labels are decorative only and never enter equality.
struct FiniteGroup {
  int order = 0;
  std::vector<int> mul_table; // row-major, mul_table[a * order + b] = a·b
  int identity = 0;
  std::vector<std::string> labels; // empty or size == order

  int mul(int a, int b) const { return mul_table[a * order + b]; }

  int inverse(int a) const {
    for (int b = 0; b < order; ++b)
      if (mul(a, b) == identity && mul(b, a) == identity) return b;
    fail_validation("FiniteGroup: element has no two-sided inverse");
  }

  std::string label(int a) const {
    return labels.empty() ? std::to_string(a) : labels[a];
  }

  friend bool operator==(const FiniteGroup& x, const FiniteGroup& y) {
    return x.order == y.order && x.identity == y.identity &&
           x.mul_table == y.mul_table;
  }
};

/// Full group-axiom audit: totality, associativity, two-sided identity and
/// inverses. Exhaustive; meant for desk-scale orders.
inline void check_group(const FiniteGroup& g) {
  const int n = g.order;
  if (n <= 0) fail_validation("group: order must be positive");
  if (static_cast<int>(g.mul_table.size()) != n * n)
    fail_validation("group: multiplication table has wrong size");
  for (int v : g.mul_table)
    if (v < 0 || v >= n) fail_validation("group: table entry out of range");
  if (g.identity < 0 || g.identity >= n)
    fail_validation("group: identity index out of range");
  for (int a = 0; a < n; ++a)
    if (g.mul(g.identity, a) != a || g.mul(a, g.identity) != a)
      fail_validation("group: identity is not two-sided");
  for (int a = 0; a < n; ++a) {
    bool has_inv = false;
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) has_inv = true;
    if (!has_inv) fail_validation("group: missing two-sided inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          fail_validation("group: multiplication is not associative");
}

/// Closure of a set of permutation generators. Elements are discovered by
/// BFS from the identity (index 0), multiplying on the right by generators,
/// so the element order is deterministic. Labels are cycle notation.
inline FiniteGroup group_from_permutations(const std::vector<Perm>& generators,
                                           int order_cap = 10000) {
  if (generators.empty()) fail_validation("group_from_permutations: no generators");
  const std::size_t degree = generators[0].size();
  for (const Perm& s : generators) {
    if (s.size() != degree)
      fail_validation("group_from_permutations: generator degree mismatch");
    if (!is_perm(s)) fail_validation("group_from_permutations: not a permutation");
  }

  std::vector<Perm> elems{perm_identity(static_cast<int>(degree))};
  std::map<Perm, int> index_of{{elems[0], 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const Perm& s : generators) {
      Perm q = perm_compose(elems[head], s);
      if (index_of.emplace(q, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(q));
        if (static_cast<int>(elems.size()) > order_cap)
          fail_size("group_from_permutations: closure exceeds order cap " +
                    std::to_string(order_cap));
      }
    }
  }

  FiniteGroup g;
  g.order = static_cast<int>(elems.size());
  g.identity = 0;
  g.mul_table.resize(static_cast<std::size_t>(g.order) * g.order);
  g.labels.reserve(g.order);
  for (const Perm& p : elems) g.labels.push_back(perm_to_cycles(p));
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      g.mul_table[a * g.order + b] = index_of.at(perm_compose(elems[a], elems[b]));
  return g;
}

/// Symmetric group on n points with elements in lexicographic one-line order
/// (index 0 is the identity), plus the permutation list and reverse lookup.
struct SymmetricGroup {
  FiniteGroup group;
  std::vector<Perm> perms;
  std::map<Perm, int> index_of;
};

inline SymmetricGroup symmetric_group(int n) {
  SymmetricGroup s;
  s.perms = all_perms(n);
  const int ord = static_cast<int>(s.perms.size());
  for (int i = 0; i < ord; ++i) s.index_of[s.perms[i]] = i;
  s.group.order = ord;
  s.group.identity = 0;
  s.group.mul_table.resize(static_cast<std::size_t>(ord) * ord);
  for (int a = 0; a < ord; ++a)
    for (int b = 0; b < ord; ++b)
      s.group.mul_table[a * ord + b] =
          s.index_of.at(perm_compose(s.perms[a], s.perms[b]));
  for (const Perm& p : s.perms) s.group.labels.push_back(perm_to_cycles(p));
  return s;
}

/// A subgroup is a sorted set of parent element indices.
struct Subgroup {
  FiniteGroup parent;
  std::vector<int> elements; // sorted, contains parent.identity

  int size() const { return static_cast<int>(elements.size()); }

  bool contains(int parent_idx) const {
    return std::binary_search(elements.begin(), elements.end(), parent_idx);
  }

  /// Position of a parent element inside the subgroup's sorted element list.
  int local(int parent_idx) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), parent_idx);
    if (it == elements.end() || *it != parent_idx)
      fail_validation("Subgroup::local: element not in subgroup");
    return static_cast<int>(it - elements.begin());
  }

  /// The subgroup re-indexed as a FiniteGroup of its own (element i is
  /// elements[i]); labels are inherited from the parent.
  FiniteGroup as_group() const {
    FiniteGroup g;
    g.order = size();
    g.identity = local(parent.identity);
    g.mul_table.resize(static_cast<std::size_t>(g.order) * g.order);
    for (int a = 0; a < g.order; ++a)
      for (int b = 0; b < g.order; ++b)
        g.mul_table[a * g.order + b] = local(parent.mul(elements[a], elements[b]));
    for (int e : elements) g.labels.push_back(parent.label(e));
    return g;
  }
};

inline void check_subgroup(const Subgroup& h) {
  if (h.elements.empty()) fail_validation("subgroup: empty");
  if (!std::is_sorted(h.elements.begin(), h.elements.end()))
    fail_validation("subgroup: element list not sorted");
  if (!h.contains(h.parent.identity)) fail_validation("subgroup: missing identity");
  for (int a : h.elements) {
    if (a < 0 || a >= h.parent.order) fail_validation("subgroup: index out of range");
    if (!h.contains(h.parent.inverse(a)))
      fail_validation("subgroup: not closed under inverse");
    for (int b : h.elements)
      if (!h.contains(h.parent.mul(a, b)))
        fail_validation("subgroup: not closed under multiplication");
  }
}

/// Subgroup generated by the given parent element indices.
inline Subgroup subgroup_generated(const FiniteGroup& g, std::vector<int> gens) {
  std::vector<char> in(g.order, 0);
  in[g.identity] = 1;
  std::vector<int> work{g.identity};
  for (int x : gens) {
    if (x < 0 || x >= g.order) fail_validation("subgroup_generated: bad index");
    if (!in[x]) { in[x] = 1; work.push_back(x); }
  }
  for (std::size_t head = 0; head < work.size(); ++head)
    for (std::size_t k = 0; k < work.size(); ++k) {
      int p = g.mul(work[head], work[k]);
      if (!in[p]) { in[p] = 1; work.push_back(p); }
      p = g.mul(work[k], work[head]);
      if (!in[p]) { in[p] = 1; work.push_back(p); }
    }
  Subgroup h;
  h.parent = g;
  for (int i = 0; i < g.order; ++i)
    if (in[i]) h.elements.push_back(i);
  return h;
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) {
  return Subgroup{g, {g.identity}};
}

inline Subgroup full_subgroup(const FiniteGroup& g) {
  Subgroup h;
  h.parent = g;
  h.elements.resize(g.order);
  std::iota(h.elements.begin(), h.elements.end(), 0);
  return h;
}

/// Left cosets gH as sorted index sets, ordered by their minimal element.
inline std::vector<std::vector<int>> cosets(const FiniteGroup& g, const Subgroup& h) {
  if (!(h.parent == g)) fail_validation("cosets: subgroup of a different group");
  std::vector<std::vector<int>> out;
  std::vector<char> placed(g.order, 0);
  for (int a = 0; a < g.order; ++a) {
    if (placed[a]) continue;
    std::vector<int> coset;
    for (int x : h.elements) coset.push_back(g.mul(a, x));
    std::sort(coset.begin(), coset.end());
    for (int x : coset) placed[x] = 1;
    out.push_back(std::move(coset));
  }
  // scanning a = 0,1,2,... already yields cosets ordered by minimal element
  return out;
}

/// An ordered system of left-coset representatives t_1,...,t_n with t_1 = e.
struct Transversal {
  Subgroup subgroup;
  std::vector<int> reps;

  int index() const { return static_cast<int>(reps.size()); }
};

enum class TransversalPolicy { Minimal };

/// Coset index (position in cosets(g,h) order) containing a given element.
inline int coset_of(const std::vector<std::vector<int>>& cs, int elem) {
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (std::binary_search(cs[i].begin(), cs[i].end(), elem))
      return static_cast<int>(i);
  fail_validation("coset_of: element not covered");
}

inline void check_transversal(const Transversal& t) {
  const FiniteGroup& g = t.subgroup.parent;
  auto cs = cosets(g, t.subgroup);
  if (t.reps.size() != cs.size())
    fail_validation("transversal: wrong number of representatives");
  if (t.reps.empty() || t.reps[0] != g.identity)
    fail_validation("transversal: first representative must be the identity");
  std::vector<char> hit(cs.size(), 0);
  for (int r : t.reps) {
    if (r < 0 || r >= g.order) fail_validation("transversal: index out of range");
    int c = coset_of(cs, r);
    if (hit[c])
      fail_validation("transversal: representatives " + g.label(r) +
                      " duplicates coset " + std::to_string(c));
    hit[c] = 1;
  }
}

/// Minimal-policy transversal: the least element of each coset, except that
/// the identity coset is represented by the identity itself and listed first.
/// Remaining cosets keep their minimal-element order.
inline Transversal transversal_minimal(const FiniteGroup& g, const Subgroup& h) {
  auto cs = cosets(g, h);
  int id_coset = coset_of(cs, g.identity);
  Transversal t{h, {}};
  t.reps.push_back(g.identity);
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (static_cast<int>(i) != id_coset) t.reps.push_back(cs[i][0]);
  check_transversal(t);
  return t;
}

/// Validates an explicitly given representative list.
inline Transversal transversal_explicit(const FiniteGroup& g, const Subgroup& h,
                                        std::vector<int> reps) {
  if (!(h.parent == g)) fail_validation("transversal: subgroup of a different group");
  Transversal t{h, std::move(reps)};
  check_transversal(t);
  return t;
}

} // namespace normcat
