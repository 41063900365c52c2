#pragma once

#include <array>

#include "multivector.hpp"
#include "polyfun.hpp"

namespace kahler {

// Differential forms on S^3 in the global left-invariant frame
// (theta^x, theta^y, theta^z) = (e_0, e_1, e_2), Cartan-Killing metric.
using FrameForm = Multivector<PolyFun>;

inline Metric const& ck_metric() {
  static const Metric g = Metric::euclidean(3);
  return g;
}

inline int eps_lc(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  return ((b - a + 3) % 3 == 1) ? +1 : -1;
}

inline FrameForm ff_scalar(PolyFun f) {
  FrameForm m(3);
  m.set(0u, std::move(f));
  return m;
}
inline FrameForm ff_one() { return ff_scalar(PolyFun::one()); }
inline FrameForm theta(int a) { return FrameForm::basis_vector(3, a); }

inline FrameForm theta_minus() {
  // (theta^x + i theta^y)/sqrt2
  FrameForm m(3);
  m.set(1u << 0, PolyFun::constant(Scalar::inv_sqrt2()));
  m.set(1u << 1, PolyFun::constant(Scalar::i() * Scalar::inv_sqrt2()));
  return m;
}
inline FrameForm theta_plus() {
  FrameForm m(3);
  m.set(1u << 0, PolyFun::constant(Scalar::inv_sqrt2()));
  m.set(1u << 1, PolyFun::constant(-(Scalar::i() * Scalar::inv_sqrt2())));
  return m;
}

inline FrameForm tau_s3() { return FrameForm::basis_blade(3, 0b111u); }

namespace detail {

// Substitutes factor b of each blade in place by the 1-form repl, with the
// sign of skipped preceding factors when signed is true (anti-derivations).
inline FrameForm substitute_factor(FrameForm const& m, int b, FrameForm const& repl,
                                   bool signed_rule) {
  FrameForm out(3);
  for (auto const& [blade, c] : m.terms()) {
    if (!(blade >> b & 1u)) continue;
    Blade lower = blade & ((1u << b) - 1u);
    Blade upper = blade & ~((2u << b) - 1u);
    FrameForm piece = wedge(wedge(FrameForm::basis_blade(3, lower), repl),
                            FrameForm::basis_blade(3, upper));
    int sign = signed_rule && grade_of(lower) % 2 == 1 ? -1 : +1;
    out = out + (sign > 0 ? c : -c) * piece;
  }
  return out;
}

}  // namespace detail

// d theta^a = -(1/2) f_bc^a theta^b ^ theta^c with f = epsilon:
// d theta^x = -theta^y ^ theta^z and cyclic.
inline FrameForm dtheta(int a) {
  int b = (a + 1) % 3, c = (a + 2) % 3;
  return -wedge(theta(b), theta(c));
}

// Exterior derivative in the left-invariant frame.
inline FrameForm frame_d(FrameForm const& m) {
  FrameForm out(3);
  for (auto const& [blade, c] : m.terms()) {
    for (int a = 0; a < 3; ++a) {
      PolyFun dc = left_deriv(a, c);
      if (dc.is_zero()) continue;
      out = out + dc * wedge(theta(a), FrameForm::basis_blade(3, blade));
    }
  }
  for (int b = 0; b < 3; ++b) out = out + detail::substitute_factor(m, b, dtheta(b), true);
  return out;
}

// Levi-Civita covariant derivative along the frame direction a:
// nabla_a theta^b = (1/2) eps_{sab} theta^s plus L_a on coefficients.
inline FrameForm levi_civita(int a, FrameForm const& m) {
  FrameForm out(3);
  for (auto const& [blade, c] : m.terms()) {
    PolyFun dc = left_deriv(a, c);
    if (!dc.is_zero()) out.add_term(blade, dc);
  }
  for (int b = 0; b < 3; ++b) {
    FrameForm repl(3);
    for (int s = 0; s < 3; ++s) {
      int eps = eps_lc(s, a, b);
      if (eps) repl.add_term(1u << s, PolyFun::constant(Scalar(Rational(eps, 2))));
    }
    if (!repl.is_zero()) out = out + detail::substitute_factor(m, b, repl, false);
  }
  return out;
}

// Lie derivative along the frame field, via the Cartan identity.
inline FrameForm lie_deriv(int a, FrameForm const& m) {
  return contract_dual(a, frame_d(m)) + frame_d(contract_dual(a, m));
}

// Direct form of the same operator: L_a on coefficients plus
// L_a theta^b = -f_{ac}^b theta^c on the frame.
inline FrameForm lie_deriv_direct(int a, FrameForm const& m) {
  FrameForm out(3);
  for (auto const& [blade, c] : m.terms()) {
    PolyFun dc = left_deriv(a, c);
    if (!dc.is_zero()) out.add_term(blade, dc);
  }
  for (int b = 0; b < 3; ++b) {
    FrameForm repl(3);
    for (int c2 = 0; c2 < 3; ++c2) {
      int eps = eps_lc(a, c2, b);
      if (eps) repl.add_term(1u << c2, PolyFun::constant(Scalar(Rational(-eps))));
    }
    if (!repl.is_zero()) out = out + detail::substitute_factor(m, b, repl, false);
  }
  return out;
}

// The Kahler (Hodge - de Rham Dirac) operator D = theta^a v nabla_a.
inline FrameForm kahler_dirac_s3(FrameForm const& m) {
  FrameForm out(3);
  for (int a = 0; a < 3; ++a)
    out = out + clifford(theta(a), levi_civita(a, m), ck_metric());
  return out;
}

// Coefficient-only derivative theta^a v L_a, the frame factors frozen; the
// spin operator on the ideal acts this way.
inline FrameForm gamma_l_s3(FrameForm const& m) {
  FrameForm out(3);
  for (int a = 0; a < 3; ++a) {
    FrameForm la(3);
    for (auto const& [blade, c] : m.terms()) {
      PolyFun dc = left_deriv(a, c);
      if (!dc.is_zero()) la.add_term(blade, dc);
    }
    out = out + clifford(theta(a), la, ck_metric());
  }
  return out;
}

// --- the parallel idempotent and its module ----------------------------------

inline FrameForm projector_s3() {
  FrameForm p = ff_one();
  p.add_term(0b111u, PolyFun::constant(-(Scalar(Rational(1, 2)) * Scalar::i())));
  p.set(0u, PolyFun::constant(Scalar(Rational(1, 2))));
  return p;
}

// w_0 = 1 - i tau, w_a = theta^a + i d theta^a, constant coefficients.
inline FrameForm w_basis_cart(int i) {
  if (i == 0) {
    FrameForm w = ff_one();
    w.add_term(0b111u, PolyFun::constant(-Scalar::i()));
    return w;
  }
  int a = i - 1;
  return theta(a) + PolyFun::constant(Scalar::i()) * dtheta(a);
}

// Components (psi^0, psi^x, psi^y, psi^z) of a form lying in I_P; throws if
// the form is outside the module.  The w's have unit leading coefficients on
// the disjoint pivot blades 1, theta^x, theta^y, theta^z.
inline std::array<PolyFun, 4> ip_components(FrameForm const& m) {
  std::array<PolyFun, 4> psi = {m.coeff(0u), m.coeff(0b001u), m.coeff(0b010u),
                                m.coeff(0b100u)};
  FrameForm recon(3);
  for (int i = 0; i < 4; ++i) recon = recon + psi[i] * w_basis_cart(i);
  if (!(recon == m)) throw std::domain_error("form is not inside I_P");
  return psi;
}

inline FrameForm ip_form(std::array<PolyFun, 4> const& psi) {
  FrameForm out(3);
  for (int i = 0; i < 4; ++i) out = out + psi[i] * w_basis_cart(i);
  return out;
}

}  // namespace kahler
