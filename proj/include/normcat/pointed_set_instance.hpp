#pragma once

#include <optional>
#include <string>
#include <vector>

#include "normcat/error.hpp"
#include "normcat/perm.hpp"

namespace normcat {

/// Pointed finite sets with the smash product. An object is its total size
/// (>= 1), element 0 is the basepoint. A smash A∧B keeps the non-basepoint
/// pairs in mixed-radix order: (x, y) ↦ 1 + (x-1)·(|B|-1) + (y-1). This
/// encoding makes the smash strictly associative and strictly unital with
/// unit the two-point set, so iterated smashes need no bracketing data.
class PointedSetInstance {
public:
  using Object = int;

  struct Morphism {
    int dom_size = 0, cod_size = 0;
    std::vector<int> map; // map[0] == 0
    friend bool operator==(const Morphism&, const Morphism&) = default;
  };

  std::string name() const { return "pointed_set"; }
  friend bool operator==(const PointedSetInstance&, const PointedSetInstance&) {
    return true;
  }

  Object dom(const Morphism& f) const { return f.dom_size; }
  Object cod(const Morphism& f) const { return f.cod_size; }
  Object unit() const { return 2; }
  Object tensor_object(Object a, Object b) const { return (a - 1) * (b - 1) + 1; }

  Morphism identity(Object s) const {
    Morphism m{s, s, std::vector<int>(s)};
    for (int i = 0; i < s; ++i) m.map[i] = i;
    return m;
  }

  Morphism compose(const Morphism& g, const Morphism& f) const {
    if (g.dom_size != f.cod_size) fail_shape("pointed compose: size mismatch");
    Morphism r{f.dom_size, g.cod_size, std::vector<int>(f.dom_size)};
    for (int i = 0; i < f.dom_size; ++i) r.map[i] = g.map[f.map[i]];
    return r;
  }

  Morphism tensor_morphism(const Morphism& f, const Morphism& g) const {
    const int gb = g.cod_size - 1;
    Morphism r{tensor_object(f.dom_size, g.dom_size),
               tensor_object(f.cod_size, g.cod_size), {}};
    r.map.assign(r.dom_size, 0);
    for (int x = 1; x < f.dom_size; ++x)
      for (int y = 1; y < g.dom_size; ++y) {
        int fx = f.map[x], gy = g.map[y];
        int e = 1 + (x - 1) * (g.dom_size - 1) + (y - 1);
        r.map[e] = (fx == 0 || gy == 0) ? 0 : 1 + (fx - 1) * gb + (gy - 1);
      }
    return r;
  }

  /// Reordering bijection of an iterated smash, slot i to slot pi[i].
  Morphism permute(const std::vector<Object>& objs, const Perm& pi) const {
    const int k = static_cast<int>(objs.size());
    if (static_cast<int>(pi.size()) != k || !is_perm(pi))
      fail_validation("pointed permute: bad permutation");
    std::vector<int> radix(k), cod_radix(k);
    long long total = 1;
    for (int i = 0; i < k; ++i) {
      radix[i] = objs[i] - 1;
      total *= radix[i];
    }
    for (int i = 0; i < k; ++i) cod_radix[pi[i]] = radix[i];
    Morphism r{static_cast<int>(total) + 1, static_cast<int>(total) + 1, {}};
    r.map.assign(r.dom_size, 0);
    if (total == 0) return r; // only the basepoint
    std::vector<int> x(k, 0);
    for (long long code = 1; code <= total; ++code) {
      std::vector<int> y(k, 0);
      for (int i = 0; i < k; ++i) y[pi[i]] = x[i];
      long long out = 0;
      for (int l = 0; l < k; ++l) out = out * cod_radix[l] + y[l];
      r.map[code] = static_cast<int>(out) + 1;
      for (int i = k - 1; i >= 0; --i) {
        if (++x[i] < radix[i]) break;
        x[i] = 0;
      }
    }
    return r;
  }

  std::optional<Morphism> try_inverse(const Morphism& f) const {
    if (f.dom_size != f.cod_size) return std::nullopt;
    Morphism inv{f.cod_size, f.dom_size, std::vector<int>(f.cod_size, -1)};
    for (int i = 0; i < f.dom_size; ++i) {
      if (inv.map[f.map[i]] != -1) return std::nullopt; // not injective
      inv.map[f.map[i]] = i;
    }
    return inv;
  }

  long long count_morphisms(Object a, Object b) const {
    long long total = 1;
    for (int i = 1; i < a; ++i) {
      total *= b;
      if (total > (1LL << 62) / (b > 0 ? b : 1)) return 1LL << 62;
    }
    return total;
  }

  std::vector<Morphism> enumerate_morphisms(Object a, Object b) const {
    std::vector<Morphism> out;
    Morphism m{a, b, std::vector<int>(a, 0)};
    while (true) {
      out.push_back(m);
      int i = 1;
      while (i < a && ++m.map[i] == b) m.map[i++] = 0;
      if (i >= a) break;
    }
    return out;
  }

  std::string describe(const Morphism& f) const {
    std::string s = "[";
    for (int i = 0; i < f.dom_size; ++i)
      s += (i ? "," : "") + std::to_string(f.map[i]);
    return s + "]->" + std::to_string(f.cod_size);
  }
};

} // namespace normcat
