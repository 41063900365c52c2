#pragma once

#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace kahler {

// Small dense matrix over an exact field.
template <class R>
class ExactMat {
 public:
  ExactMat() = default;
  ExactMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static ExactMat identity(int n) {
    ExactMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = R::from_rational(Rational(1));
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  R& at(int r, int c) { return a_[r * cols_ + c]; }
  R const& at(int r, int c) const { return a_[r * cols_ + c]; }

  friend ExactMat operator+(ExactMat const& x, ExactMat const& y) {
    ExactMat out(x.rows_, x.cols_);
    for (size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = x.a_[i] + y.a_[i];
    return out;
  }
  friend ExactMat operator-(ExactMat const& x, ExactMat const& y) {
    ExactMat out(x.rows_, x.cols_);
    for (size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = x.a_[i] - y.a_[i];
    return out;
  }
  friend ExactMat operator*(ExactMat const& x, ExactMat const& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape");
    ExactMat out(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        if (x.at(i, k).is_zero()) continue;
        for (int j = 0; j < y.cols_; ++j)
          out.at(i, j) = out.at(i, j) + x.at(i, k) * y.at(k, j);
      }
    return out;
  }
  friend ExactMat operator*(R const& c, ExactMat const& x) {
    ExactMat out(x.rows_, x.cols_);
    for (size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = c * x.a_[i];
    return out;
  }
  friend bool operator==(ExactMat const& x, ExactMat const& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  bool is_zero() const {
    for (auto const& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<R> a_;
};

// Reduced row echelon form in place; returns pivot columns.  Deterministic:
// first nonzero entry scanning columns left to right.
template <class R>
std::vector<int> rref(ExactMat<R>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!m.at(r, col).is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(row, c));
    R inv = m.at(row, col).inverse();
    for (int c = 0; c < m.cols(); ++c) m.at(row, c) = inv * m.at(row, c);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      R f = m.at(r, col);
      for (int c = 0; c < m.cols(); ++c)
        m.at(r, c) = m.at(r, c) - f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Solves A x = b exactly; throws if inconsistent.  A is destroyed.
template <class R>
std::vector<R> solve_exact(ExactMat<R> a, std::vector<R> b) {
  int n = a.rows(), m = a.cols();
  ExactMat<R> aug(n, m + 1);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < m; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, m) = b[r];
  }
  auto pivots = rref(aug);
  std::vector<R> x(m);
  int row = 0;
  for (int col : pivots) {
    if (col == m) throw std::runtime_error("inconsistent linear system");
    x[col] = aug.at(row, m);
    ++row;
  }
  return x;
}

}  // namespace kahler
