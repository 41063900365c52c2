#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace kahler {

inline constexpr int kMaxDim = 8;

// Real symmetric non-degenerate bilinear form on an N-dimensional frame,
// with exact rational entries, the exact inverse and the metric signature
// (sign of det g, i.e. (-1)^{#negative eigenvalues}).
class Metric {
 public:
  Metric(int dim, std::vector<std::vector<Rational>> g) : dim_(dim), g_(std::move(g)) {
    if (dim_ < 1 || dim_ > kMaxDim) throw std::invalid_argument("metric dim out of range");
    if ((int)g_.size() != dim_) throw std::invalid_argument("metric shape");
    for (auto const& row : g_)
      if ((int)row.size() != dim_) throw std::invalid_argument("metric shape");
    for (int a = 0; a < dim_; ++a)
      for (int b = 0; b < a; ++b)
        if (g_[a][b] != g_[b][a]) throw std::invalid_argument("metric not symmetric");
    invert();
    diagonal_ = true;
    for (int a = 0; a < dim_ && diagonal_; ++a)
      for (int b = 0; b < dim_; ++b)
        if (a != b && g_[a][b] != 0) { diagonal_ = false; break; }
    if (!diagonal_) build_minors();
  }

  static Metric euclidean(int dim) {
    return diagonal_signs(std::vector<int>(dim, +1));
  }

  static Metric diagonal_signs(std::vector<int> const& signs) {
    int n = (int)signs.size();
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, Rational(0)));
    for (int a = 0; a < n; ++a) g[a][a] = Rational(signs[a]);
    return Metric(n, std::move(g));
  }

  int dim() const { return dim_; }
  bool diagonal() const { return diagonal_; }
  Rational const& at(int a, int b) const { return g_[a][b]; }
  Rational const& inv(int a, int b) const { return g_inv_[a][b]; }
  Rational const& det() const { return det_; }
  int signature() const { return det_ > 0 ? +1 : -1; }

  // det of the submatrix of g^{ab} with rows maskA, columns maskB.
  Rational inv_minor(unsigned maskA, unsigned maskB) const {
    if (diagonal_) {
      if (maskA != maskB) return Rational(0);
      Rational p(1);
      for (int a = 0; a < dim_; ++a)
        if (maskA >> a & 1u) p *= g_inv_[a][a];
      return p;
    }
    auto it = minors_.find({maskA, maskB});
    return it == minors_.end() ? Rational(0) : it->second;
  }

 private:
  void invert() {
    int n = dim_;
    auto a = g_;
    g_inv_.assign(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) g_inv_[i][i] = 1;
    det_ = 1;
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (a[r][col] != 0) { piv = r; break; }
      if (piv < 0) throw std::invalid_argument("metric is degenerate");
      if (piv != col) {
        std::swap(a[piv], a[col]);
        std::swap(g_inv_[piv], g_inv_[col]);
        det_ = -det_;
      }
      det_ *= a[col][col];
      Rational inv_p = Rational(1) / a[col][col];
      for (int c = 0; c < n; ++c) { a[col][c] *= inv_p; g_inv_[col][c] *= inv_p; }
      for (int r = 0; r < n; ++r) {
        if (r == col || a[r][col] == 0) continue;
        Rational f = a[r][col];
        for (int c = 0; c < n; ++c) {
          a[r][c] -= f * a[col][c];
          g_inv_[r][c] -= f * g_inv_[col][c];
        }
      }
    }
  }

  // All minors det g^{AB} over equal-size index subsets, by Laplace
  // recursion on the lowest row index.
  void build_minors() {
    minors_[{0u, 0u}] = Rational(1);
    unsigned full = (1u << dim_) - 1;
    for (unsigned A = 1; A <= full; ++A) {
      int s = __builtin_popcount(A);
      int a0 = __builtin_ctz(A);
      unsigned Arest = A & (A - 1u);
      for (unsigned B = 1; B <= full; ++B) {
        if (__builtin_popcount(B) != s) continue;
        Rational d(0);
        int pos = 0;
        for (int b = 0; b < dim_; ++b) {
          if (!(B >> b & 1u)) continue;
          Rational sub = minors_[{Arest, B & ~(1u << b)}];
          if (pos % 2 == 0) d += g_inv_[a0][b] * sub;
          else d -= g_inv_[a0][b] * sub;
          ++pos;
        }
        if (d != 0) minors_[{A, B}] = d;
      }
    }
  }

  int dim_;
  bool diagonal_ = true;
  std::vector<std::vector<Rational>> g_, g_inv_;
  Rational det_;
  std::map<std::pair<unsigned, unsigned>, Rational> minors_;
};

}  // namespace kahler
