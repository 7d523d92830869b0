#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "normcat/error.hpp"

namespace normcat {

/// Permutations are stored as image vectors on 0-based points.
/// Composition is right-to-left throughout the library:
/// (a ∘ b)(x) = a(b(x)), i.e. b acts first.
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline bool is_perm(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

inline Perm perm_compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) fail_shape("perm_compose: degree mismatch");
  Perm r(a.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

/// Cycle notation on 1-based points, e.g. "(1 2 3)(4 5)"; "()" is the identity.
inline std::string perm_to_cycles(const Perm& p) {
  std::string out;
  std::vector<char> done(p.size(), 0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (done[s] || p[s] == static_cast<int>(s)) continue;
    out += '(';
    int x = static_cast<int>(s);
    bool first = true;
    while (!done[x]) {
      done[x] = 1;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = p[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

/// Builds a permutation on n points from cycles given as 1-based point lists.
inline Perm perm_from_cycles(const std::vector<std::vector<int>>& cycles, int n) {
  Perm p = perm_identity(n);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      if (from < 1 || from > n || to < 1 || to > n)
        fail_validation("perm_from_cycles: point out of range");
      if (p[from - 1] != from - 1)
        fail_validation("perm_from_cycles: point repeated across cycles");
      p[from - 1] = to - 1;
    }
  }
  if (!is_perm(p)) fail_validation("perm_from_cycles: not a permutation");
  return p;
}

/// All permutations of {0..n-1} in lexicographic order; index 0 is the identity.
inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = perm_identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

} // namespace normcat
