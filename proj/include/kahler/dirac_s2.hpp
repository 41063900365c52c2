#pragma once

#include <array>
#include <optional>

#include "dirac_s3.hpp"

namespace kahler {

// --- horizontal U(1)-equivariant forms: the exterior algebra of S^2 ------------

// f + c_- theta^- + c_+ theta^+ + i h theta^- ^ theta^+ with
// L_z f = L_z h = 0 and L_z c_pm = mp i c_pm.
struct EquivariantForm {
  PolyFun f, cm, cp, h;

  bool conditions_hold() const {
    Scalar i = Scalar::i();
    return Lz(f).is_zero() && Lz(h).is_zero() && Lz(cm) == i * cm &&
           Lz(cp) == -(i * cp);
  }

  friend EquivariantForm operator+(EquivariantForm const& x, EquivariantForm const& y) {
    return {x.f + y.f, x.cm + y.cm, x.cp + y.cp, x.h + y.h};
  }
  friend EquivariantForm operator-(EquivariantForm const& x, EquivariantForm const& y) {
    return {x.f - y.f, x.cm - y.cm, x.cp - y.cp, x.h - y.h};
  }
  friend bool operator==(EquivariantForm const& x, EquivariantForm const& y) {
    return x.f == y.f && x.cm == y.cm && x.cp == y.cp && x.h == y.h;
  }
  bool is_zero() const {
    return f.is_zero() && cm.is_zero() && cp.is_zero() && h.is_zero();
  }
};

inline FrameForm to_frame_form(EquivariantForm const& e) {
  FrameForm out = ff_scalar(e.f);
  out = out + e.cm * theta_minus() + e.cp * theta_plus();
  out = out + (Scalar::i() * e.h) * wedge(theta_minus(), theta_plus());
  return out;
}

inline EquivariantForm from_frame_form(FrameForm const& m) {
  // theta^- ^ theta^+ = -i theta^x ^ theta^y
  EquivariantForm e;
  e.f = m.coeff(0u);
  Scalar r = Scalar::inv_sqrt2(), i = Scalar::i();
  // c_pm from the x,y components: m1 = (cm + cp)/sqrt2, m2 = i(cm - cp)/sqrt2
  PolyFun m1 = m.coeff(0b001u), m2 = m.coeff(0b010u);
  e.cm = r * (m1 - i * m2);
  e.cp = r * (m1 + i * m2);
  e.h = m.coeff(0b011u);  // i h (theta^-^theta^+) = h theta^x^theta^y
  if (!(to_frame_form(e) == m))
    throw std::domain_error("form has non-horizontal content");
  return e;
}

// L_z phi = 0 and i_{L_z} phi = 0, both exact.
inline bool is_s2_form(FrameForm const& m) {
  return lie_deriv_direct(2, m).is_zero() && contract_dual(2, m).is_zero();
}

// --- module machinery -----------------------------------------------------------

// phi = (u^2, sqrt2 uv, v^2) and its conjugate; sum_j phi_j phibar_j = 1.
inline std::array<PolyFun, 3> phi_array() {
  return {PolyFun::monomial(2, 0, 0, 0),
          PolyFun::monomial(1, 1, 0, 0, Scalar::sqrt2()),
          PolyFun::monomial(0, 2, 0, 0)};
}
inline std::array<PolyFun, 3> phibar_array() {
  auto p = phi_array();
  return {p[0].conj(), p[1].conj(), p[2].conj()};
}

// sign = +1: L_z c = +ic (a c_- coefficient), c = sum alpha_j phibar_j with
// alpha_j = c phi_j.  sign = -1: L_z c = -ic (a c_+), c = sum beta_j phi_j
// with beta_j = c phibar_j.  Completeness sum phi_j phibar_j = 1 makes the
// reconstruction exact.
inline std::array<PolyFun, 3> module_decompose(PolyFun const& c, int sign) {
  Scalar i = Scalar::i();
  if (!(Lz(c) == (sign > 0 ? i * c : -(i * c))))
    throw std::invalid_argument("coefficient is not U(1)-equivariant");
  auto p = phi_array();
  std::array<PolyFun, 3> out;
  for (int k = 0; k < 3; ++k) out[k] = sign > 0 ? c * p[k] : c * p[k].conj();
  return out;
}

// --- the global projector -------------------------------------------------------

// P = (1 - theta^- ^ theta^+)/2 = (1 + i theta^x ^ theta^y)/2.
inline FrameForm projector_s2() {
  FrameForm p = ff_scalar(PolyFun::constant(Scalar(Rational(1, 2))));
  p.add_term(0b011u, PolyFun::constant(Scalar(Rational(1, 2)) * Scalar::i()));
  return p;
}

inline FrameForm psi1_s2() {
  return PolyFun::constant(Scalar(Rational(2))) * projector_s2();
}

// Verifies P v P = P, the ideal relations c_- theta^- v P = c_- theta^-,
// c_+ theta^+ v P = 0, theta^- v theta^+ v P = 0, and that the projector
// conditions f = 1/2, 2 c_- c_+ = 1/4 + h^2 are forced.
inline bool s2_projector_check() {
  Metric const& g = ck_metric();
  FrameForm p = projector_s2();
  if (!(clifford(p, p, g) == p)) return false;

  FrameForm tm = theta_minus(), tp = theta_plus();
  if (!(clifford(tm, p, g) == tm)) return false;
  if (!clifford(tp, p, g).is_zero()) return false;
  if (!clifford(clifford(tm, tp, g), p, g).is_zero()) return false;

  // Generic idempotent condition inside Lambda(S^2): with the product rule
  // for f + c_-theta^- + c_+theta^+ + ih theta^-^theta^+, P v P = P forces
  // f = 1/2 and 2 c_- c_+ = 1/4 + h^2.  Checked on rational samples.
  auto mk = [&](Rational f, Rational cmv, Rational cpv, Rational h) {
    FrameForm m = ff_scalar(PolyFun::constant(Scalar(f)));
    m = m + PolyFun::constant(Scalar(cmv)) * tm + PolyFun::constant(Scalar(cpv)) * tp;
    m = m + PolyFun::constant(Scalar(h) * Scalar::i()) * wedge(tm, tp);
    return m;
  };
  for (int fn = 0; fn <= 2; ++fn)
    for (int hn = 0; hn <= 2; ++hn) {
      Rational f(fn, 2), h(hn, 2);
      // pick c_- = 1, c_+ = (1/4 + h^2)/2 so the quadratic condition holds
      Rational cp = (Rational(1, 4) + h * h) / 2;
      FrameForm m = mk(f, Rational(1), cp, h);
      bool idem = is_idempotent(m, g);
      if (idem != (f == Rational(1, 2))) return false;
      // and breaking the quadratic condition must break idempotency
      FrameForm bad = mk(Rational(1, 2), Rational(1), cp + 1, h);
      if (is_idempotent(bad, g)) return false;
    }
  return true;
}

// --- Hodge duality on the quotient ------------------------------------------------

// star f = i f theta^-^theta^+, star(c_- theta^-) = -i c_- theta^-,
// star(c_+ theta^+) = i c_+ theta^+, star(i f theta^-^theta^+) = f.
inline EquivariantForm hodge_s2(EquivariantForm const& e) {
  Scalar i = Scalar::i();
  return {e.h, -(i * e.cm), i * e.cp, e.f};
}

// Exterior derivative restricted to the horizontal equivariant forms.
inline EquivariantForm d_s2(EquivariantForm const& e) {
  Scalar i = Scalar::i();
  // d f = (L_- f) theta^- + (L_+ f) theta^+;
  // d(c_- theta^-) = -(L_+ c_-) theta^-^theta^+;
  // d(c_+ theta^+) = +(L_- c_+) theta^-^theta^+;  d(grade 2) = 0.
  return {PolyFun{}, Lminus(e.f), Lplus(e.f), i * Lplus(e.cm) - i * Lminus(e.cp)};
}

// Kahler-Dirac operator on the quotient, D = d - d* with d* = -star d star.
inline EquivariantForm dirac_s2_form(EquivariantForm const& e) {
  EquivariantForm dstar = hodge_s2(d_s2(hodge_s2(e)));
  return d_s2(e) + dstar;  // d - (-star d star)
}

// --- the spinor module I_P --------------------------------------------------------

// psi = f psi_1 + (sum alpha_j phibar_j) theta^-; components (psi0, alpha_1..3),
// all annihilated by L_z.
struct S2Spinor {
  PolyFun psi0;
  std::array<PolyFun, 3> alpha;

  bool equivariant() const {
    if (!Lz(psi0).is_zero()) return false;
    for (auto const& a : alpha)
      if (!Lz(a).is_zero()) return false;
    return true;
  }

  PolyFun c_minus() const {
    auto pb = phibar_array();
    return alpha[0] * pb[0] + alpha[1] * pb[1] + alpha[2] * pb[2];
  }

  friend bool operator==(S2Spinor const& x, S2Spinor const& y) {
    return x.psi0 == y.psi0 && x.alpha == y.alpha;
  }
};

inline EquivariantForm s2_spinor_form(S2Spinor const& s) {
  // f psi_1 = f/2 - (f/2) theta^-^theta^+: h-part = i f/2
  Scalar half = Scalar(Rational(1, 2));
  return {half * s.psi0, s.c_minus(), PolyFun{},
          (half * Scalar::i()) * s.psi0};
}

// D(f psi_1) = sum_j {phi_j L_- f}(phibar_j theta^-)
// D(sum_j alpha_j phibar_j theta^-) = 2 (L_+ sum_j alpha_j phibar_j) psi_1.
inline S2Spinor dirac_s2_apply(S2Spinor const& s) {
  auto p = phi_array();
  PolyFun lm = Lminus(s.psi0);
  S2Spinor out;
  out.psi0 = Scalar(Rational(2)) * Lplus(s.c_minus());
  for (int k = 0; k < 3; ++k) out.alpha[k] = p[k] * lm;
  return out;
}

// --- the spectral block -------------------------------------------------------------

// Meaningful only for integer j; the equivariant sector in W_j is spanned by
// the n = 0 column for psi0 and the n = 1 column for c_-.
inline BlockOperator dirac_s2_block(HalfInt j) {
  if (!j.is_integer())
    throw std::invalid_argument("no equivariant sector for half-integer j");
  WjBasis wj = wj_basis(j);

  BlockOperator block;
  block.op_name = "kahler_s2";
  block.j = j;
  block.components = 2;

  // norms: <D psi_1 | D psi_1> = |D|^2 / 2; <c theta^- | c theta^-> = |c|^2.
  std::vector<PolyFun> c_basis;  // c_- = L_- D^j_{m,0}, nonzero for j >= 1
  for (int tm = -j.twice; tm <= j.twice; tm += 2) {
    HalfInt m(tm), n0(0);
    block.labels.push_back({m, n0, 0});
    block.norms.push_back(wj.norms[wj.index_of(m, n0)] / 2);
  }
  if (j.twice > 0) {
    for (int tm = -j.twice; tm <= j.twice; tm += 2) {
      HalfInt m(tm), n0(0);
      PolyFun c = Lminus(wj.funs[wj.index_of(m, n0)]);
      Scalar n2 = pw_inner(c, c);
      if (!(n2.rat.im == 0) || !n2.srt.is_zero() || !(n2.rat.re > 0))
        throw std::logic_error("c-sector norm is not a positive rational");
      c_basis.push_back(c);
      block.labels.push_back({m, HalfInt(2), 1});
      block.norms.push_back(n2.rat.re);
    }
  }

  int d = block.dim();
  int per = j.twice + 1;  // number of m values
  block.mat = ExactMat<Scalar>(d, d);
  // D maps the psi0 sector into the c sector with coefficient 1, and the c
  // sector back with 2 L_+ L_- = -j(j+1).
  for (int k = 0; k < per && j.twice > 0; ++k) {
    block.mat.at(per + k, k) = Scalar(Rational(1));
    block.mat.at(k, per + k) = Scalar(-casimir_eigenvalue(j));
  }
  return block;
}

inline std::vector<PredictedEigen> s2_spectrum_closed_form(HalfInt j) {
  if (!j.is_integer())
    throw std::invalid_argument("no equivariant sector for half-integer j");
  if (j.twice == 0) return {{Rational(0), 0, Rational(0), 1}};
  Rational jj = casimir_eigenvalue(j);
  int d = j.twice + 1;
  return {{Rational(0), +1, jj, d}, {Rational(0), -1, jj, d}};
}

// Closed-form eigenspinors psi_pm = (D^j_{m,0}, lambda^{-1} phi_k L_- D).
inline std::vector<ExactEigvec> s2_eigenspinor_families(HalfInt j) {
  if (!j.is_integer())
    throw std::invalid_argument("no equivariant sector for half-integer j");
  std::vector<ExactEigvec> out;
  if (j.twice == 0) return out;
  Rational jj = casimir_eigenvalue(j);
  auto p = phi_array();
  for (int tm = -j.twice; tm <= j.twice; tm += 2) {
    PolyFun d = wigner({j, HalfInt(tm), HalfInt(0)});
    PolyFun lm = Lminus(d);
    for (int q : {+1, -1}) {
      // lambda = q i sqrt(jj); 1/lambda = -q i sqrt(jj)/jj
      ExactEigvec v;
      v.A = SpinorField::zero(SpinorBasis::S2);
      v.A.c[0] = d;
      v.B = SpinorField::zero(SpinorBasis::S2);
      Scalar f = Scalar(Rational(-q) / jj) * Scalar::i();
      for (int k = 0; k < 3; ++k) v.B.c[1 + k] = f * (p[k] * lm);
      v.p = 0;
      v.q = q;
      v.c = jj;
      out.push_back(v);
    }
  }
  return out;
}

// Operator wrapper matching the 4-component carrier used above.
inline SpinorField dirac_s2_apply_vec(SpinorField const& x) {
  S2Spinor s;
  s.psi0 = x.c[0];
  for (int k = 0; k < 3; ++k) s.alpha[k] = x.c[1 + k];
  S2Spinor img = dirac_s2_apply(s);
  SpinorField out = x;
  out.c[0] = img.psi0;
  for (int k = 0; k < 3; ++k) out.c[1 + k] = img.alpha[k];
  return out;
}

// --- the non-restriction witness ----------------------------------------------------

// The Kahler operator of the 3-sphere applied to f theta^-^theta^+ leaves
// the horizontal subspace; the returned contraction i_{L_z} D(...) is the
// obstruction and is nonzero for f != 0 with L_z f = 0.
inline FrameForm nonrestriction_witness(PolyFun const& f) {
  if (f.is_zero() || !Lz(f).is_zero())
    throw std::invalid_argument("witness needs nonzero f with L_z f = 0");
  FrameForm phi = f * wedge(theta_minus(), theta_plus());
  FrameForm image = kahler_dirac_s3(phi);
  return contract_dual(2, image);
}

}  // namespace kahler
