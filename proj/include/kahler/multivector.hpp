#pragma once

#include <bit>
#include <map>
#include <stdexcept>
#include <vector>

#include "metric.hpp"

namespace kahler {

// Basis blades are bitmasks: bit a set <=> frame covector e_a present,
// factors in ascending index order; permutation signs live in coefficients.
using Blade = unsigned;

inline int grade_of(Blade b) { return std::popcount(b); }

// Sign of e_A ^ e_B for disjoint masks: (-1)^{#inversions} when sorting the
// concatenated factor list.
inline int wedge_sign(Blade a, Blade b) {
  int swaps = 0;
  for (int i = 0; i < kMaxDim; ++i)
    if (b >> i & 1u) swaps += std::popcount(a >> (i + 1));
  return swaps % 2 == 0 ? +1 : -1;
}

// Exterior-algebra element with coefficients in a commutative ring R.
// R needs: default ctor (zero), + - * unary-, is_zero(), static from_rational.
template <class R>
class Multivector {
 public:
  explicit Multivector(int dim = 1) : dim_(dim) {}

  static Multivector zero(int dim) { return Multivector(dim); }
  static Multivector scalar(int dim, R c) {
    Multivector m(dim);
    m.set(0u, std::move(c));
    return m;
  }
  static Multivector unit(int dim) { return scalar(dim, R::from_rational(Rational(1))); }
  static Multivector basis_blade(int dim, Blade b, R c = R::from_rational(Rational(1))) {
    Multivector m(dim);
    m.set(b, std::move(c));
    return m;
  }
  static Multivector basis_vector(int dim, int a) {
    return basis_blade(dim, 1u << a);
  }

  int dim() const { return dim_; }
  std::map<Blade, R> const& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  R coeff(Blade b) const {
    auto it = coeffs_.find(b);
    return it == coeffs_.end() ? R() : it->second;
  }

  void set(Blade b, R c) {
    if (b >= (1u << dim_)) throw std::invalid_argument("blade outside algebra");
    if (c.is_zero()) coeffs_.erase(b);
    else coeffs_[b] = std::move(c);
  }

  void add_term(Blade b, R const& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = coeffs_.try_emplace(b, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  friend Multivector operator+(Multivector const& x, Multivector const& y) {
    check_dims(x, y);
    Multivector out = x;
    for (auto const& [b, c] : y.coeffs_) out.add_term(b, c);
    return out;
  }
  friend Multivector operator-(Multivector const& x, Multivector const& y) {
    check_dims(x, y);
    Multivector out = x;
    for (auto const& [b, c] : y.coeffs_) out.add_term(b, -c);
    return out;
  }
  friend Multivector operator-(Multivector const& x) {
    Multivector out(x.dim_);
    for (auto const& [b, c] : x.coeffs_) out.coeffs_.emplace(b, -c);
    return out;
  }
  friend Multivector operator*(R const& c, Multivector const& x) {
    Multivector out(x.dim_);
    for (auto const& [b, v] : x.coeffs_) out.add_term(b, c * v);
    return out;
  }
  friend Multivector operator*(Rational const& q, Multivector const& x) {
    return R::from_rational(q) * x;
  }
  friend bool operator==(Multivector const& x, Multivector const& y) {
    return x.dim_ == y.dim_ && x.coeffs_ == y.coeffs_;
  }

  std::vector<int> grades() const {
    std::vector<int> g;
    for (auto const& [b, c] : coeffs_) {
      int k = grade_of(b);
      if (g.empty() || g.back() != k) {
        bool seen = false;
        for (int x : g) seen = seen || x == k;
        if (!seen) g.push_back(k);
      }
    }
    return g;
  }

  Multivector grade_part(int k) const {
    Multivector out(dim_);
    for (auto const& [b, c] : coeffs_)
      if (grade_of(b) == k) out.coeffs_.emplace(b, c);
    return out;
  }

  static void check_dims(Multivector const& x, Multivector const& y) {
    if (x.dim_ != y.dim_) throw std::invalid_argument("dimension mismatch");
  }

 private:
  int dim_;
  std::map<Blade, R> coeffs_;
};

// --- exterior product -------------------------------------------------------

template <class R>
Multivector<R> wedge(Multivector<R> const& x, Multivector<R> const& y) {
  Multivector<R>::check_dims(x, y);
  Multivector<R> out(x.dim());
  for (auto const& [a, ca] : x.terms())
    for (auto const& [b, cb] : y.terms()) {
      if (a & b) continue;
      R c = ca * cb;
      if (wedge_sign(a, b) < 0) c = -c;
      out.add_term(a | b, c);
    }
  return out;
}

// --- contractions ------------------------------------------------------------

// i_{e_a} with the metric pairing i_v(w) = g(v, w) on grade 1 and the graded
// Leibniz rule; grade k -> k-1.
template <class R>
Multivector<R> contract_basis(int a, Multivector<R> const& m, Metric const& g) {
  Multivector<R> out(m.dim());
  for (auto const& [blade, c] : m.terms()) {
    int pos = 0;
    for (int b = 0; b < m.dim(); ++b) {
      if (!(blade >> b & 1u)) continue;
      if (g.at(a, b) != 0) {
        R t = R::from_rational(pos % 2 == 0 ? g.at(a, b) : -g.at(a, b)) * c;
        out.add_term(blade & ~(1u << b), t);
      }
      ++pos;
    }
  }
  return out;
}

// i_v for a vector given by its frame components.
template <class R>
Multivector<R> contract(std::vector<R> const& v, Multivector<R> const& m, Metric const& g) {
  if ((int)v.size() != m.dim()) throw std::invalid_argument("dimension mismatch");
  Multivector<R> out(m.dim());
  for (int a = 0; a < m.dim(); ++a)
    if (!v[a].is_zero()) out = out + v[a] * contract_basis(a, m, g);
  return out;
}

// Dual-pairing deletion i_{X_b} with X_b the frame vector: delta pairing.
template <class R>
Multivector<R> contract_dual(int b, Multivector<R> const& m) {
  Multivector<R> out(m.dim());
  for (auto const& [blade, c] : m.terms()) {
    if (!(blade >> b & 1u)) continue;
    int pos = std::popcount(blade & ((1u << b) - 1u));
    out.add_term(blade & ~(1u << b), pos % 2 == 0 ? c : -c);
  }
  return out;
}

// --- grade involution and reversal ------------------------------------------

template <class R>
Multivector<R> grade_involution(Multivector<R> const& m) {
  Multivector<R> out(m.dim());
  for (auto const& [b, c] : m.terms())
    out.add_term(b, grade_of(b) % 2 == 0 ? c : -c);
  return out;
}

template <class R>
Multivector<R> reverse(Multivector<R> const& m) {
  Multivector<R> out(m.dim());
  for (auto const& [b, c] : m.terms()) {
    int k = grade_of(b);
    out.add_term(b, (k * (k - 1) / 2) % 2 == 0 ? c : -c);
  }
  return out;
}

// --- Clifford product --------------------------------------------------------

namespace detail {

// Iterated metric contraction over the sorted index set `mask`, lowest index
// outermost (the composition order of the product formula).
template <class R>
Multivector<R> contract_set(Blade mask, Multivector<R> const& m, Metric const& g) {
  Multivector<R> out = m;
  for (int a = g.dim() - 1; a >= 0; --a)
    if (mask >> a & 1u) out = contract_basis(a, out, g);
  return out;
}

inline std::vector<Blade> submasks_of_size(int dim, int s) {
  std::vector<Blade> out;
  for (Blade b = 0; b < (1u << dim); ++b)
    if (grade_of(b) == s) out.push_back(b);
  return out;
}

}  // namespace detail

// The inner (Clifford) product on the exterior algebra: the finite
// contraction expansion
//   phi v omega = sum_s (-1)^{s(s-1)/2} g^{a1 b1}...g^{as bs}
//                 (gamma^s i_{a1}..i_{as} phi) ^ (i_{b1}..i_{bs} omega) / s!
// collapsed over sorted index subsets with the metric-minor determinant.
template <class R>
Multivector<R> clifford(Multivector<R> const& x, Multivector<R> const& y, Metric const& g) {
  Multivector<R>::check_dims(x, y);
  if (x.dim() != g.dim()) throw std::invalid_argument("dimension mismatch");
  int n = g.dim();
  Multivector<R> out(n);
  for (int s = 0; s <= n; ++s) {
    int sign_s = (s * (s - 1) / 2) % 2 == 0 ? +1 : -1;
    for (Blade A = 0; A < (1u << n); ++A) {
      if (grade_of(A) != s) continue;
      Multivector<R> cx = detail::contract_set(A, x, g);
      if (cx.is_zero()) continue;
      // gamma-involution applied s times.
      if (s % 2 == 1) cx = grade_involution(cx);
      for (Blade B = 0; B < (1u << n); ++B) {
        if (grade_of(B) != s) continue;
        Rational minor = g.inv_minor(A, B);
        if (minor == 0) continue;
        Multivector<R> cy = detail::contract_set(B, y, g);
        if (cy.is_zero()) continue;
        Rational w = sign_s > 0 ? minor : -minor;
        out = out + w * wedge(cx, cy);
      }
    }
  }
  return out;
}

// --- the Phi-map construction (independent product oracle) -------------------

// Phi(e_a): omega -> e_a ^ omega + i_{e_a} omega.
template <class R>
Multivector<R> phi_map(int a, Multivector<R> const& m, Metric const& g) {
  return wedge(Multivector<R>::basis_vector(m.dim(), a), m) + contract_basis(a, m, g);
}

namespace detail {

template <class R>
Multivector<R> phi_apply_impl(Multivector<R> const& phi, Multivector<R> const& omega,
                              Metric const& g);

// Phi extended to a blade through Phi(e_a ^ r) = Phi(e_a) Phi(r) - Phi(i_{e_a} r).
template <class R>
Multivector<R> phi_blade(Blade blade, R const& c, Multivector<R> const& omega,
                         Metric const& g) {
  if (blade == 0) return c * omega;
  int a = std::countr_zero(blade);
  Blade rest = blade & (blade - 1u);
  Multivector<R> x = phi_blade(rest, c, omega, g);
  Multivector<R> head = phi_map(a, x, g);
  Multivector<R> rest_mv = Multivector<R>::basis_blade(omega.dim(), rest, c);
  Multivector<R> tail = phi_apply_impl(contract_basis(a, rest_mv, g), omega, g);
  return head - tail;
}

template <class R>
Multivector<R> phi_apply_impl(Multivector<R> const& phi, Multivector<R> const& omega,
                              Metric const& g) {
  Multivector<R> out(omega.dim());
  for (auto const& [b, c] : phi.terms()) out = out + phi_blade(b, c, omega, g);
  return out;
}

}  // namespace detail

// Evaluates the algebra homomorphism Phi at omega; phi_apply(x, 1) recovers
// the Clifford image of x, and phi_apply(x, y) must equal clifford(x, y).
template <class R>
Multivector<R> phi_apply(Multivector<R> const& x, Multivector<R> const& y, Metric const& g) {
  Multivector<R>::check_dims(x, y);
  return detail::phi_apply_impl(x, y, g);
}

// --- scalar products ---------------------------------------------------------

// <a|b> with grades mutually orthogonal; on equal-grade blades the iterated
// contraction i_{e_{a_s}}...i_{e_{a_1}}(e_{b_1}^...^e_{b_s}).
template <class R>
R scalar_product_ext(Multivector<R> const& x, Multivector<R> const& y, Metric const& g) {
  Multivector<R>::check_dims(x, y);
  R out{};
  for (auto const& [a, ca] : x.terms()) {
    for (auto const& [b, cb] : y.terms()) {
      if (grade_of(a) != grade_of(b)) continue;
      // lowest index of a innermost: contract ascending.
      Multivector<R> m = Multivector<R>::basis_blade(y.dim(), b, cb);
      for (int i = 0; i < x.dim(); ++i)
        if (a >> i & 1u) m = contract_basis(i, m, g);
      out = out + ca * m.coeff(0u);
    }
  }
  return out;
}

// <a|b>_Cl = <1 | reverse(a) v b>.
template <class R>
R scalar_product_cl(Multivector<R> const& x, Multivector<R> const& y, Metric const& g) {
  return clifford(reverse(x), y, g).coeff(0u);
}

// --- Hodge duality -----------------------------------------------------------

// star(e_{a_1}^...^e_{a_k}) = g^{a1 b1}...g^{ak bk} i_{b_k}...i_{b_1} mu with
// mu = orientation |g|^{1/2} e_1^...^e_N.  Exact backend: |g|^{1/2} must be
// rational, which holds for every orthonormal frame; otherwise rescale the
// frame before calling.
template <class R>
Multivector<R> hodge_star(Multivector<R> const& m, Metric const& g, int orientation = +1) {
  if (m.dim() != g.dim()) throw std::invalid_argument("dimension mismatch");
  Rational adet = g.det() < 0 ? -g.det() : g.det();
  auto vol = exact_sqrt(adet);
  if (!vol)
    throw std::domain_error(
        "hodge_star: |g|^{1/2} is irrational; rescale the frame to make the "
        "volume factor rational");
  int n = g.dim();
  Blade top = (1u << n) - 1u;
  Multivector<R> out(n);
  for (auto const& [blade, c] : m.terms()) {
    Multivector<R> x = Multivector<R>::basis_blade(n, top, R::from_rational(*vol));
    for (int a = 0; a < n; ++a) {
      if (!(blade >> a & 1u)) continue;
      // sharp index: sum_b g^{ab} (dual deletion of b).
      Multivector<R> next(n);
      for (int b = 0; b < n; ++b)
        if (g.inv(a, b) != 0) next = next + g.inv(a, b) * contract_dual(b, x);
      x = next;
    }
    out = out + c * x;
  }
  if (orientation < 0) out = -out;
  return out;
}

}  // namespace kahler
