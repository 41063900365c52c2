#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "exact_matrix.hpp"
#include "half_int.hpp"
#include "scalar.hpp"

namespace kahler {

// One exact eigenvalue i(rat + sqrt_coeff * sqrt(sqrt_arg)) with its
// predicted multiplicity; the spectra here are purely imaginary.
struct PredictedEigen {
  Rational rat;
  int sqrt_coeff = 0;
  Rational sqrt_arg = Rational(0);
  int mult = 0;

  double im() const {
    return to_double(rat) + sqrt_coeff * std::sqrt(to_double(sqrt_arg));
  }
};

// Restriction of an operator to one W_j block, assembled over an orthogonal
// labelled basis with exact entries and exact squared norms.
struct BlockOperator {
  std::string op_name;
  HalfInt j;
  int components = 0;

  struct Label {
    HalfInt m, n;
    int comp;
  };
  std::vector<Label> labels;       // lexicographic (m, n, component)
  ExactMat<Scalar> mat;            // O b_l = sum_k mat(k,l) b_k
  std::vector<Rational> norms;     // <b_k | b_k>, positive

  int dim() const { return (int)labels.size(); }

  // Exact anti-Hermiticity in the orthonormalized basis:
  // conj(M_{lk}) r_l = -M_{kl} r_k for all k, l.
  bool anti_hermitian_exact() const {
    for (int k = 0; k < dim(); ++k)
      for (int l = 0; l < dim(); ++l) {
        Scalar lhs = mat.at(l, k).conj() * Scalar(norms[l]);
        Scalar rhs = -(mat.at(k, l) * Scalar(norms[k]));
        if (!(lhs == rhs)) return false;
      }
    return true;
  }

  // Matrix in the orthonormalized basis, M'_{kl} = sqrt(r_k / r_l) M_{kl}.
  Eigen::MatrixXcd numeric() const {
    int n = dim();
    Eigen::MatrixXcd m(n, n);
    std::vector<double> root(n);
    for (int k = 0; k < n; ++k) root[k] = std::sqrt(to_double(norms[k]));
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        m(k, l) = mat.at(k, l).to_complex() * (root[k] / root[l]);
    return m;
  }
};

struct SpectrumLine {
  double im = 0;
  int mult = 0;
  double predicted_im = 0;
  int predicted_mult = 0;
  bool matched = false;
};

struct SpectrumReport {
  std::string op_name;
  HalfInt j;
  int basis_dim = 0;
  double max_re = 0;  // anti-Hermiticity residual of the assembled block
  std::vector<SpectrumLine> lines;
  bool all_matched = true;
};

// Hermitian eigensolve of i M', clustered into multiplicities and compared
// against the closed-form prediction.
inline SpectrumReport eigensolve_block(BlockOperator const& block,
                                       std::vector<PredictedEigen> const& prediction,
                                       double cluster_tol = 1e-9) {
  SpectrumReport rep;
  rep.op_name = block.op_name;
  rep.j = block.j;
  rep.basis_dim = block.dim();

  Eigen::MatrixXcd m = block.numeric();
  Eigen::MatrixXcd herm = std::complex<double>(0, 1) * m;
  double residual = (herm - herm.adjoint()).cwiseAbs().maxCoeff() / 2;
  rep.max_re = residual;
  if (block.dim() > 0 && residual > 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff()))
    throw std::runtime_error("block is not anti-Hermitian: basis orthonormalization bug");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
  // eigenvalue mu of iM' corresponds to lambda = -i mu: im(lambda) = -mu
  std::vector<double> ims(block.dim());
  for (int k = 0; k < block.dim(); ++k) ims[k] = -solver.eigenvalues()(k);
  std::sort(ims.begin(), ims.end());

  std::vector<std::pair<double, int>> clusters;
  for (double x : ims) {
    if (!clusters.empty() && std::abs(x - clusters.back().first) < cluster_tol) {
      auto& [mean, cnt] = clusters.back();
      mean = (mean * cnt + x) / (cnt + 1);
      ++cnt;
    } else {
      clusters.push_back({x, 1});
    }
  }

  std::vector<PredictedEigen> pred = prediction;
  std::sort(pred.begin(), pred.end(),
            [](auto const& a, auto const& b) { return a.im() < b.im(); });

  size_t np = std::max(clusters.size(), pred.size());
  for (size_t k = 0; k < np; ++k) {
    SpectrumLine line;
    bool have_c = k < clusters.size(), have_p = k < pred.size();
    if (have_c) {
      line.im = clusters[k].first;
      line.mult = clusters[k].second;
    }
    if (have_p) {
      line.predicted_im = pred[k].im();
      line.predicted_mult = pred[k].mult;
    }
    line.matched = have_c && have_p &&
                   std::abs(line.im - line.predicted_im) < cluster_tol &&
                   line.mult == line.predicted_mult;
    rep.all_matched = rep.all_matched && line.matched;
    rep.lines.push_back(line);
  }
  return rep;
}

}  // namespace kahler
