#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normcat/error.hpp"
#include "normcat/perm.hpp"

namespace normcat {

/// Matrices over the prime field F_p with the Kronecker product as tensor.
/// Objects are dimensions; a morphism a → b is a b×a matrix. Everything is
/// exact modular arithmetic, and the Kronecker product is strictly
/// associative on the nose, which is what makes strict diagram equality
/// attainable downstream.
class MatrixInstance {
public:
  using Object = int;

  struct Morphism {
    int rows = 0, cols = 0;
    std::vector<std::uint8_t> a; // row-major
    friend bool operator==(const Morphism&, const Morphism&) = default;
    std::uint8_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
    std::uint8_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  };

  explicit MatrixInstance(int prime = 2) : p_(prime) {
    if (prime < 2) fail_validation("MatrixInstance: prime must be >= 2");
  }

  int prime() const { return p_; }
  std::string name() const { return "matrix_f" + std::to_string(p_); }
  friend bool operator==(const MatrixInstance& x, const MatrixInstance& y) {
    return x.p_ == y.p_;
  }

  Object dom(const Morphism& f) const { return f.cols; }
  Object cod(const Morphism& f) const { return f.rows; }
  Object unit() const { return 1; }
  Object tensor_object(Object a, Object b) const { return a * b; }

  Morphism identity(Object d) const {
    Morphism m{d, d, std::vector<std::uint8_t>(static_cast<std::size_t>(d) * d, 0)};
    for (int i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
  }

  Morphism zero(Object rows, Object cols) const {
    return Morphism{rows, cols,
                    std::vector<std::uint8_t>(static_cast<std::size_t>(rows) * cols, 0)};
  }

  Morphism compose(const Morphism& g, const Morphism& f) const {
    if (g.cols != f.rows) fail_shape("matrix compose: dimension mismatch");
    Morphism r = zero(g.rows, f.cols);
    for (int i = 0; i < g.rows; ++i)
      for (int k = 0; k < g.cols; ++k) {
        int gik = g.at(i, k);
        if (!gik) continue;
        for (int j = 0; j < f.cols; ++j)
          r.at(i, j) = static_cast<std::uint8_t>((r.at(i, j) + gik * f.at(k, j)) % p_);
      }
    return r;
  }

  Morphism tensor_morphism(const Morphism& f, const Morphism& g) const {
    Morphism r = zero(f.rows * g.rows, f.cols * g.cols);
    for (int i = 0; i < f.rows; ++i)
      for (int j = 0; j < f.cols; ++j) {
        int fij = f.at(i, j);
        if (!fij) continue;
        for (int k = 0; k < g.rows; ++k)
          for (int l = 0; l < g.cols; ++l)
            r.at(i * g.rows + k, j * g.cols + l) =
                static_cast<std::uint8_t>((fij * g.at(k, l)) % p_);
      }
    return r;
  }

  /// Reordering isomorphism on a Kronecker factorization: sends the slot-i
  /// factor of the domain to slot pi[i] of the codomain. For two factors and
  /// the transposition this is the perfect-shuffle permutation matrix.
  Morphism permute(const std::vector<Object>& objs, const Perm& pi) const {
    const int k = static_cast<int>(objs.size());
    if (static_cast<int>(pi.size()) != k || !is_perm(pi))
      fail_validation("matrix permute: bad permutation");
    long long total = 1;
    for (Object d : objs) total *= d;
    std::vector<Object> cod_dims(k);
    for (int i = 0; i < k; ++i) cod_dims[pi[i]] = objs[i];
    Morphism r = zero(static_cast<int>(total), static_cast<int>(total));
    if (total == 0) return r;
    std::vector<int> x(k, 0);
    for (long long col = 0; col < total; ++col) {
      // row index of the permuted multi-index in codomain radices
      long long row = 0;
      std::vector<int> y(k, 0);
      for (int i = 0; i < k; ++i) y[pi[i]] = x[i];
      for (int l = 0; l < k; ++l) row = row * cod_dims[l] + y[l];
      r.at(static_cast<int>(row), static_cast<int>(col)) = 1;
      for (int i = k - 1; i >= 0; --i) {
        if (++x[i] < objs[i]) break;
        x[i] = 0;
      }
    }
    return r;
  }

  /// Two-sided inverse via Gauss-Jordan elimination over F_p, if invertible.
  std::optional<Morphism> try_inverse(const Morphism& f) const {
    if (f.rows != f.cols) return std::nullopt;
    const int d = f.rows;
    std::vector<int> m(static_cast<std::size_t>(d) * 2 * d, 0);
    auto at = [&](int r, int c) -> int& { return m[static_cast<std::size_t>(r) * 2 * d + c]; };
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) at(i, j) = f.at(i, j);
      at(i, d + i) = 1;
    }
    for (int col = 0; col < d; ++col) {
      int pivot = -1;
      for (int r = col; r < d; ++r)
        if (at(r, col) != 0) { pivot = r; break; }
      if (pivot < 0) return std::nullopt;
      if (pivot != col)
        for (int c = 0; c < 2 * d; ++c) std::swap(at(pivot, c), at(col, c));
      int inv = 1; // inverse of the pivot in F_p by exponentiation
      for (int e = 0; e < p_ - 2; ++e) inv = (inv * at(col, col)) % p_;
      for (int c = 0; c < 2 * d; ++c) at(col, c) = (at(col, c) * inv) % p_;
      for (int r = 0; r < d; ++r) {
        if (r == col || at(r, col) == 0) continue;
        int factor = at(r, col);
        for (int c = 0; c < 2 * d; ++c)
          at(r, c) = ((at(r, c) - factor * at(col, c)) % p_ + p_) % p_;
      }
    }
    Morphism inv = zero(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        inv.at(i, j) = static_cast<std::uint8_t>(at(i, d + j));
    return inv;
  }

  long long count_morphisms(Object a, Object b) const {
    long long cells = static_cast<long long>(a) * b;
    long long total = 1;
    for (long long i = 0; i < cells; ++i) {
      total *= p_;
      if (total > (1LL << 62) / p_) return 1LL << 62; // saturate
    }
    return total;
  }

  std::vector<Morphism> enumerate_morphisms(Object a, Object b) const {
    std::vector<Morphism> out;
    Morphism m = zero(b, a);
    const std::size_t cells = m.a.size();
    while (true) {
      out.push_back(m);
      std::size_t i = 0;
      while (i < cells && ++m.a[i] == p_) m.a[i++] = 0;
      if (i == cells) break;
    }
    return out;
  }

  std::string describe(const Morphism& f) const {
    std::string s = "[";
    for (int i = 0; i < f.rows; ++i) {
      s += i ? ";[" : "[";
      for (int j = 0; j < f.cols; ++j)
        s += (j ? "," : "") + std::to_string(static_cast<int>(f.at(i, j)));
      s += "]";
    }
    return s + "]";
  }

private:
  int p_;
};

} // namespace normcat
