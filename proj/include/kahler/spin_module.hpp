#pragma once

#include <functional>
#include <vector>

#include "exact_matrix.hpp"
#include "multivector.hpp"

namespace kahler {

template <class R>
bool is_idempotent(Multivector<R> const& p, Metric const& g) {
  return clifford(p, p, g) == p;
}

// Blades sorted by grade, then by mask within each grade.
inline std::vector<Blade> graded_blade_order(int n) {
  std::vector<Blade> order;
  for (int k = 0; k <= n; ++k)
    for (Blade b = 0; b < (1u << n); ++b)
      if (grade_of(b) == k) order.push_back(b);
  return order;
}

// Minimal-ideal data for an idempotent P: a deterministic basis of
// I_P = {psi : psi v P = psi} (row-reduced over the canonical blade order)
// and its rank.
template <class R>
struct IdempotentModule {
  Multivector<R> p;
  std::vector<Multivector<R>> basis;
  int rank = 0;
};

// Matrix of right Clifford multiplication psi -> psi v P on the blade basis.
template <class R>
ExactMat<R> right_mult_matrix(Multivector<R> const& p, Metric const& g) {
  int n = p.dim();
  int dim = 1 << n;
  ExactMat<R> m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    auto img = clifford(Multivector<R>::basis_blade(n, (Blade)i), p, g);
    for (auto const& [b, c] : img.terms()) m.at((int)b, i) = c;
  }
  return m;
}

template <class R>
IdempotentModule<R> ideal_basis(Multivector<R> const& p, Metric const& g) {
  if (!is_idempotent(p, g)) throw std::invalid_argument("not an idempotent");
  int n = p.dim();
  int dim = 1 << n;
  // Fixed space of the right multiplication: kernel of (M - I), echelonized.
  ExactMat<R> m = right_mult_matrix(p, g);
  for (int i = 0; i < dim; ++i)
    m.at(i, i) = m.at(i, i) - R::from_rational(Rational(1));
  auto pivots = rref(m);
  std::vector<bool> is_pivot(dim, false);
  for (int c : pivots) is_pivot[c] = true;

  // Kernel basis, one vector per free column.
  std::vector<std::vector<R>> kernel;
  for (int free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    std::vector<R> v(dim);
    v[free] = R::from_rational(Rational(1));
    int row = 0;
    for (int c : pivots) {
      v[c] = -m.at(row, free);
      ++row;
    }
    kernel.push_back(std::move(v));
  }

  // Canonical form: echelonize the basis rows over the graded blade order
  // (grade first, mask within a grade), so each basis vector leads with
  // coefficient 1 at its lowest blade.
  std::vector<Blade> order = graded_blade_order(n);
  ExactMat<R> rows((int)kernel.size(), dim);
  for (int r = 0; r < (int)kernel.size(); ++r)
    for (int c = 0; c < dim; ++c) rows.at(r, c) = kernel[r][(int)order[c]];
  rref(rows);

  IdempotentModule<R> mod;
  mod.p = p;
  for (int r = 0; r < rows.rows(); ++r) {
    Multivector<R> v(n);
    for (int c = 0; c < dim; ++c) v.set(order[c], rows.at(r, c));
    if (!v.is_zero()) mod.basis.push_back(std::move(v));
  }
  mod.rank = (int)mod.basis.size();
  return mod;
}

// Gamma matrices of the left Clifford action on the module basis:
// theta^a v w_i = (gamma^a)^j_i w_j, columns indexed by i.
template <class R>
std::vector<ExactMat<R>> gamma_rep(IdempotentModule<R> const& mod, Metric const& g) {
  int n = mod.p.dim();
  int dim = 1 << n;
  int s = mod.rank;
  ExactMat<R> basis_mat(dim, s);
  for (int i = 0; i < s; ++i)
    for (auto const& [b, c] : mod.basis[i].terms()) basis_mat.at((int)b, i) = c;

  std::vector<ExactMat<R>> gammas;
  for (int a = 0; a < n; ++a) {
    ExactMat<R> gamma(s, s);
    for (int i = 0; i < s; ++i) {
      auto img = clifford(Multivector<R>::basis_vector(n, a), mod.basis[i], g);
      std::vector<R> rhs(dim);
      for (auto const& [b, c] : img.terms()) rhs[(int)b] = c;
      std::vector<R> x;
      try {
        x = solve_exact(basis_mat, rhs);
      } catch (std::runtime_error const&) {
        throw std::runtime_error("not a left ideal");
      }
      // Verify the expansion (solve_exact ignores residuals of overdetermined
      // systems on non-pivot rows only if inconsistent pivots appear; check).
      Multivector<R> recon(n);
      for (int j = 0; j < s; ++j) recon = recon + x[j] * mod.basis[j];
      if (!(recon == img)) throw std::runtime_error("not a left ideal");
      for (int j = 0; j < s; ++j) gamma.at(j, i) = x[j];
    }
    gammas.push_back(std::move(gamma));
  }
  return gammas;
}

// Ad_v(x) = -v v x v v^{-1} for a non-null grade-1 v: the reflection of x in
// the hyperplane perpendicular to v.
template <class R>
Multivector<R> adjoint_reflect(Multivector<R> const& v, Multivector<R> const& x,
                               Metric const& g) {
  R vv = scalar_product_ext(v, v, g);
  if (vv.is_zero()) throw std::domain_error("null vector has no reflection");
  Multivector<R> v_inv = vv.inverse() * v;
  return -clifford(clifford(v, x, g), v_inv, g);
}

// Product of unit grade-1 factors; lies in Spin iff the factor count is even.
template <class R>
struct PinElement {
  std::vector<Multivector<R>> factors;
  Multivector<R> product;
  Multivector<R> inverse;

  static PinElement make(std::vector<Multivector<R>> fs, Metric const& g) {
    if (fs.empty()) throw std::invalid_argument("empty Pin element");
    PinElement e;
    e.product = Multivector<R>::unit(fs[0].dim());
    e.inverse = e.product;
    for (auto const& v : fs) {
      R vv = scalar_product_ext(v, v, g);
      bool unit = vv == R::from_rational(Rational(1)) ||
                  vv == R::from_rational(Rational(-1));
      if (!unit) throw std::invalid_argument("Pin factor with g(v,v) != +-1");
      e.product = clifford(e.product, v, g);
      // (v1 v ... v vk)^{-1} = vk^{-1} v ... v v1^{-1}, vi^{-1} = vi/g(vi,vi).
      e.inverse = clifford(vv.inverse() * v, e.inverse, g);
    }
    e.factors = std::move(fs);
    return e;
  }

  bool in_spin() const { return factors.size() % 2 == 0; }
};

template <class R>
Multivector<R> idempotent_conjugate(Multivector<R> const& p, PinElement<R> const& eps,
                                    Metric const& g) {
  return clifford(clifford(eps.product, p, g), eps.inverse, g);
}

// P v nabla_a P = 0 for every frame direction: the condition for the Dirac
// operator to stay inside I_P.
template <class R>
bool integrability_check(Multivector<R> const& p,
                         std::function<Multivector<R>(int, Multivector<R> const&)> const& nabla,
                         Metric const& g) {
  for (int a = 0; a < p.dim(); ++a)
    if (!clifford(p, nabla(a, p), g).is_zero()) return false;
  return true;
}

}  // namespace kahler
