#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "block_operator.hpp"
#include "s3_frame.hpp"
#include "spin_module.hpp"
#include "wigner.hpp"

namespace kahler {

// --- spinor fields ------------------------------------------------------------

// C2: components (psi_1, psi_2) of a section of the spinor bundle.
// IPLadder: components (psi_0, psi_-, psi_z, psi_+) along (w_0, w_-, w_z, w_+).
// IPCart: components (psi^0, psi^x, psi^y, psi^z) along (w_0, w_a).
// S2: components (psi_0, alpha_1..3) of the two-sphere module.
enum class SpinorBasis { C2, IPLadder, IPCart, S2 };

struct SpinorField {
  SpinorBasis basis;
  std::vector<PolyFun> c;

  static SpinorField zero(SpinorBasis b) {
    return {b, std::vector<PolyFun>(b == SpinorBasis::C2 ? 2 : 4)};
  }
  bool is_zero() const {
    for (auto const& f : c)
      if (!f.is_zero()) return false;
    return true;
  }
  friend SpinorField operator+(SpinorField const& x, SpinorField const& y) {
    if (x.basis != y.basis) throw std::invalid_argument("spinor basis mismatch");
    SpinorField out = x;
    for (size_t k = 0; k < out.c.size(); ++k) out.c[k] = out.c[k] + y.c[k];
    return out;
  }
  friend SpinorField operator-(SpinorField const& x, SpinorField const& y) {
    if (x.basis != y.basis) throw std::invalid_argument("spinor basis mismatch");
    SpinorField out = x;
    for (size_t k = 0; k < out.c.size(); ++k) out.c[k] = out.c[k] - y.c[k];
    return out;
  }
  friend SpinorField operator*(Scalar const& s, SpinorField const& x) {
    SpinorField out = x;
    for (auto& f : out.c) f = s * f;
    return out;
  }
  friend bool operator==(SpinorField const& x, SpinorField const& y) {
    return x.basis == y.basis && x.c == y.c;
  }
};

inline SpinorField scale_fun(PolyFun const& f, SpinorField const& x) {
  SpinorField out = x;
  for (auto& g : out.c) g = f * g;
  return out;
}

inline SpinorField ip_to_cart(SpinorField const& x) {
  if (x.basis != SpinorBasis::IPLadder) throw std::invalid_argument("wrong basis_tag");
  Scalar r = Scalar::inv_sqrt2(), i = Scalar::i();
  SpinorField out = SpinorField::zero(SpinorBasis::IPCart);
  out.c[0] = x.c[0];
  out.c[1] = r * (x.c[1] + x.c[3]);            // psi^x = (psi_- + psi_+)/sqrt2
  out.c[2] = (i * r) * (x.c[1] - x.c[3]);      // psi^y = i(psi_- - psi_+)/sqrt2
  out.c[3] = x.c[2];
  return out;
}

inline SpinorField cart_to_ip(SpinorField const& x) {
  if (x.basis != SpinorBasis::IPCart) throw std::invalid_argument("wrong basis_tag");
  Scalar r = Scalar::inv_sqrt2(), i = Scalar::i();
  SpinorField out = SpinorField::zero(SpinorBasis::IPLadder);
  out.c[0] = x.c[0];
  out.c[1] = r * (x.c[1] - i * x.c[2]);        // psi_- = (psi^x - i psi^y)/sqrt2
  out.c[2] = x.c[3];
  out.c[3] = r * (x.c[1] + i * x.c[2]);        // psi_+ = (psi^x + i psi^y)/sqrt2
  return out;
}

// --- the spin Dirac operator on C^2 spinors -----------------------------------

// sigma^a psi for a = 0,1,2.
inline SpinorField sigma(int a, SpinorField const& x) {
  if (x.basis != SpinorBasis::C2) throw std::invalid_argument("wrong basis_tag");
  SpinorField out = SpinorField::zero(SpinorBasis::C2);
  Scalar i = Scalar::i();
  switch (a) {
    case 0: out.c[0] = x.c[1]; out.c[1] = x.c[0]; break;
    case 1: out.c[0] = -(i * x.c[1]); out.c[1] = i * x.c[0]; break;
    case 2: out.c[0] = x.c[0]; out.c[1] = -x.c[1]; break;
    default: throw std::invalid_argument("sigma index");
  }
  return out;
}

// sigma^a L_a, the matrix [[L_z, sqrt2 L_-], [sqrt2 L_+, -L_z]].
inline SpinorField sigma_l_apply(SpinorField const& x) {
  if (x.basis != SpinorBasis::C2) throw std::invalid_argument("wrong basis_tag");
  Scalar r2 = Scalar::sqrt2();
  SpinorField out = SpinorField::zero(SpinorBasis::C2);
  out.c[0] = Lz(x.c[0]) + r2 * Lminus(x.c[1]);
  out.c[1] = r2 * Lplus(x.c[0]) - Lz(x.c[1]);
  return out;
}

// The full spin Dirac operator sigma^a L_a - 3i/4.
inline SpinorField spin_dirac_apply(SpinorField const& x) {
  Scalar shift = Scalar(Rational(3, 4)) * Scalar::i();
  return sigma_l_apply(x) - shift * x;
}

// L_a phi = alpha sigma_a phi for all a, checked through the ladder system.
inline bool killing_check(SpinorField const& phi, Scalar const& alpha) {
  if (phi.basis != SpinorBasis::C2) throw std::invalid_argument("wrong basis_tag");
  Scalar r2 = Scalar::sqrt2();
  PolyFun const &p1 = phi.c[0], &p2 = phi.c[1];
  return Lz(p1) == alpha * p1 && Lz(p2) == -alpha * p2 &&
         Lplus(p1) == (alpha * r2) * p2 && Lplus(p2).is_zero() &&
         Lminus(p2) == (alpha * r2) * p1 && Lminus(p1).is_zero();
}

// The two Killing spinors of the round 3-sphere, factor i/2.
inline SpinorField killing_phi() {
  SpinorField s = SpinorField::zero(SpinorBasis::C2);
  s.c[0] = PolyFun::var(VB);
  s.c[1] = PolyFun::var(U);
  return s;
}
inline SpinorField killing_phi_prime() {
  SpinorField s = SpinorField::zero(SpinorBasis::C2);
  s.c[0] = PolyFun::var(UB);
  s.c[1] = -PolyFun::var(V);
  return s;
}

// --- operators on the algebraic spinor module I_P ------------------------------

// Hodge - de Rham Dirac operator in the ladder basis (w_0, w_-, w_z, w_+):
// rows (0, L_+, L_z, L_- / L_-, L_z - i, -L_-, 0 / L_z, -L_+, -i, L_- /
//       L_+, 0, L_+, -i - L_z).
inline SpinorField hdr_apply_ladder(SpinorField const& x) {
  if (x.basis != SpinorBasis::IPLadder) throw std::invalid_argument("wrong basis_tag");
  Scalar i = Scalar::i();
  PolyFun const &p0 = x.c[0], &pm = x.c[1], &pz = x.c[2], &pp = x.c[3];
  SpinorField out = SpinorField::zero(SpinorBasis::IPLadder);
  out.c[0] = Lplus(pm) + Lz(pz) + Lminus(pp);
  out.c[1] = Lminus(p0) + Lz(pm) - i * pm - Lminus(pz);
  out.c[2] = Lz(p0) - Lplus(pm) - i * pz + Lminus(pp);
  out.c[3] = Lplus(p0) + Lplus(pz) - i * pp - Lz(pp);
  return out;
}

// The same operator on cartesian components:
// psi^0 w_0 -> (L_a psi^0) w_a,
// psi^a w_a -> (L_k psi^k) w_0 + i(eps_{ska} L_k psi^a - psi^s) w_s.
inline SpinorField hdr_apply_cart(SpinorField const& x) {
  if (x.basis != SpinorBasis::IPCart) throw std::invalid_argument("wrong basis_tag");
  Scalar i = Scalar::i();
  SpinorField out = SpinorField::zero(SpinorBasis::IPCart);
  for (int a = 0; a < 3; ++a) out.c[0] = out.c[0] + left_deriv(a, x.c[1 + a]);
  for (int s = 0; s < 3; ++s) {
    PolyFun row = left_deriv(s, x.c[0]) - i * x.c[1 + s];
    for (int k = 0; k < 3; ++k)
      for (int a = 0; a < 3; ++a) {
        int eps = eps_lc(s, k, a);
        if (eps) row = row + Scalar(Rational(eps)) * (i * left_deriv(k, x.c[1 + a]));
      }
    out.c[1 + s] = row;
  }
  return out;
}

// gamma^a L_a on the ladder basis; differs from the Hodge - de Rham matrix
// only in the constant diagonal terms.
inline SpinorField ideal_gamma_l_ladder(SpinorField const& x) {
  if (x.basis != SpinorBasis::IPLadder) throw std::invalid_argument("wrong basis_tag");
  PolyFun const &p0 = x.c[0], &pm = x.c[1], &pz = x.c[2], &pp = x.c[3];
  SpinorField out = SpinorField::zero(SpinorBasis::IPLadder);
  out.c[0] = Lplus(pm) + Lz(pz) + Lminus(pp);
  out.c[1] = Lminus(p0) + Lz(pm) - Lminus(pz);
  out.c[2] = Lz(p0) - Lplus(pm) + Lminus(pp);
  out.c[3] = Lplus(p0) + Lplus(pz) - Lz(pp);
  return out;
}

inline SpinorField ideal_gamma_l_cart(SpinorField const& x) {
  if (x.basis != SpinorBasis::IPCart) throw std::invalid_argument("wrong basis_tag");
  Scalar i = Scalar::i();
  SpinorField out = SpinorField::zero(SpinorBasis::IPCart);
  for (int a = 0; a < 3; ++a) out.c[0] = out.c[0] + left_deriv(a, x.c[1 + a]);
  for (int s = 0; s < 3; ++s) {
    PolyFun row = left_deriv(s, x.c[0]);
    for (int k = 0; k < 3; ++k)
      for (int a = 0; a < 3; ++a) {
        int eps = eps_lc(s, k, a);
        if (eps) row = row + Scalar(Rational(eps)) * (i * left_deriv(k, x.c[1 + a]));
      }
    out.c[1 + s] = row;
  }
  return out;
}

// The spin Dirac operator on I_P: gamma^a L_a - 3i/4.
inline SpinorField ideal_spin_dirac_apply(SpinorField const& x) {
  Scalar shift = Scalar(Rational(3, 4)) * Scalar::i();
  return ideal_gamma_l_ladder(x) - shift * x;
}

// --- Laplacians ----------------------------------------------------------------

// D^2 on I_P: psi^0 w_0 -> (L^2 psi^0) w_0,
// psi^a w_a -> (L^2 psi^j + eps_{jbs} L_b psi^s - psi^j) w_j.
inline SpinorField hdr_laplacian_cart(SpinorField const& x) {
  if (x.basis != SpinorBasis::IPCart) throw std::invalid_argument("wrong basis_tag");
  SpinorField out = SpinorField::zero(SpinorBasis::IPCart);
  out.c[0] = casimir(x.c[0]);
  for (int jj = 0; jj < 3; ++jj) {
    PolyFun row = casimir(x.c[1 + jj]) - x.c[1 + jj];
    for (int b = 0; b < 3; ++b)
      for (int s = 0; s < 3; ++s) {
        int eps = eps_lc(jj, b, s);
        if (eps) row = row + Scalar(Rational(eps)) * left_deriv(b, x.c[1 + s]);
      }
    out.c[1 + jj] = row;
  }
  return out;
}

// slashed-D^2 on I_P:
// psi^0 w_0 -> (L^2 psi^0 - 9/16 psi^0) w_0 - (i/2)(L_k psi^0) w_k,
// psi^a w_a -> -(i/2)(L_k psi^k) w_0
//              + (L^2 psi^j + (1/2) eps_{jsa} L_s psi^a - 9/16 psi^j) w_j.
inline SpinorField ideal_spin_laplacian_cart(SpinorField const& x) {
  if (x.basis != SpinorBasis::IPCart) throw std::invalid_argument("wrong basis_tag");
  Scalar i = Scalar::i();
  Scalar half_i = Scalar(Rational(1, 2)) * i;
  Rational nine16(9, 16);
  SpinorField out = SpinorField::zero(SpinorBasis::IPCart);
  out.c[0] = casimir(x.c[0]) - Scalar(nine16) * x.c[0];
  for (int k = 0; k < 3; ++k) out.c[0] = out.c[0] - half_i * left_deriv(k, x.c[1 + k]);
  for (int jj = 0; jj < 3; ++jj) {
    PolyFun row = casimir(x.c[1 + jj]) - Scalar(nine16) * x.c[1 + jj];
    row = row - half_i * left_deriv(jj, x.c[0]);
    for (int s = 0; s < 3; ++s)
      for (int a = 0; a < 3; ++a) {
        int eps = eps_lc(jj, s, a);
        if (eps) row = row + Scalar(Rational(eps, 2)) * left_deriv(s, x.c[1 + a]);
      }
    out.c[1 + jj] = row;
  }
  return out;
}

// --- geometric route: operators acting on actual frame forms -------------------

// Applies the Kahler operator theta^a v nabla_a to the form psi^i w_i and
// reads the components back; cross-route for hdr_apply_cart.
inline SpinorField hdr_apply_geometric(SpinorField const& x) {
  if (x.basis != SpinorBasis::IPCart) throw std::invalid_argument("wrong basis_tag");
  std::array<PolyFun, 4> psi = {x.c[0], x.c[1], x.c[2], x.c[3]};
  FrameForm image = kahler_dirac_s3(ip_form(psi));
  auto comps = ip_components(image);
  SpinorField out = SpinorField::zero(SpinorBasis::IPCart);
  for (int k = 0; k < 4; ++k) out.c[k] = comps[k];
  return out;
}

inline SpinorField ideal_gamma_l_geometric(SpinorField const& x) {
  if (x.basis != SpinorBasis::IPCart) throw std::invalid_argument("wrong basis_tag");
  std::array<PolyFun, 4> psi = {x.c[0], x.c[1], x.c[2], x.c[3]};
  FrameForm image = gamma_l_s3(ip_form(psi));
  auto comps = ip_components(image);
  SpinorField out = SpinorField::zero(SpinorBasis::IPCart);
  for (int k = 0; k < 4; ++k) out.c[k] = comps[k];
  return out;
}

// --- connection 1-forms ---------------------------------------------------------

using CMV = Multivector<Scalar>;

// Gamma matrices of the parallel module in the cartesian w-basis, computed
// from the algebra engine.
inline std::vector<ExactMat<Scalar>> const& s3_gamma_matrices() {
  static const std::vector<ExactMat<Scalar>> gams = [] {
    CMV tau = CMV::basis_blade(3, 0b111u);
    CMV p = Scalar(Rational(1, 2)) * (CMV::unit(3) - Scalar::i() * tau);
    auto mod = ideal_basis(p, ck_metric());
    return gamma_rep(mod, ck_metric());
  }();
  return gams;
}

// Vector potential of the Levi-Civita (Hodge - de Rham) covariant derivative:
// (A_k)^s_a = (1/2) eps_{ska}, zero row and column for w_0.
inline std::array<ExactMat<Scalar>, 3> hdr_connection_form() {
  std::array<ExactMat<Scalar>, 3> A{ExactMat<Scalar>(4, 4), ExactMat<Scalar>(4, 4),
                                    ExactMat<Scalar>(4, 4)};
  for (int k = 0; k < 3; ++k)
    for (int s = 0; s < 3; ++s)
      for (int a = 0; a < 3; ++a) {
        int eps = eps_lc(s, k, a);
        if (eps) A[k].at(1 + s, 1 + a) = Scalar(Rational(eps, 2));
      }
  return A;
}

// Vector potential of the spin connection: A_k = -(i/4) gamma^(k).
inline std::array<ExactMat<Scalar>, 3> spin_connection_form() {
  auto const& gams = s3_gamma_matrices();
  Scalar f = -(Scalar(Rational(1, 4)) * Scalar::i());
  return {f * gams[0], f * gams[1], f * gams[2]};
}

// gamma^k (L_k + A_k) on cartesian components.
inline SpinorField covariant_dirac_apply(std::array<ExactMat<Scalar>, 3> const& A,
                                         SpinorField const& x) {
  if (x.basis != SpinorBasis::IPCart) throw std::invalid_argument("wrong basis_tag");
  auto const& gams = s3_gamma_matrices();
  SpinorField out = SpinorField::zero(SpinorBasis::IPCart);
  for (int k = 0; k < 3; ++k) {
    std::vector<PolyFun> der(4);
    for (int i = 0; i < 4; ++i) {
      der[i] = left_deriv(k, x.c[i]);
      for (int j = 0; j < 4; ++j)
        if (!A[k].at(i, j).is_zero()) der[i] = der[i] + A[k].at(i, j) * x.c[j];
    }
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (!gams[k].at(i, j).is_zero())
          out.c[i] = out.c[i] + gams[k].at(i, j) * der[j];
  }
  return out;
}

// --- block assembly --------------------------------------------------------------

using SpinorOp = std::function<SpinorField(SpinorField const&)>;

inline BlockOperator assemble_block(std::string name, HalfInt j, SpinorBasis basis,
                                    SpinorOp const& op,
                                    std::vector<Rational> const& fiber_weights) {
  WjBasis wj = wj_basis(j);
  int ncomp = (int)fiber_weights.size();
  BlockOperator block;
  block.op_name = std::move(name);
  block.j = j;
  block.components = ncomp;

  for (int tm = -j.twice; tm <= j.twice; tm += 2)
    for (int tn = -j.twice; tn <= j.twice; tn += 2)
      for (int comp = 0; comp < ncomp; ++comp) {
        block.labels.push_back({HalfInt(tm), HalfInt(tn), comp});
        int fi = wj.index_of(HalfInt(tm), HalfInt(tn));
        block.norms.push_back(wj.norms[fi] * fiber_weights[comp]);
      }

  int dim = block.dim();
  block.mat = ExactMat<Scalar>(dim, dim);
  for (int col = 0; col < dim; ++col) {
    auto const& l = block.labels[col];
    SpinorField basis_elt = SpinorField::zero(basis);
    basis_elt.c[l.comp] = wj.funs[wj.index_of(l.m, l.n)];
    SpinorField img = op(basis_elt);
    for (int comp = 0; comp < ncomp; ++comp) {
      if (img.c[comp].is_zero()) continue;
      auto coords = wj_coords(wj, img.c[comp]);
      for (int fi = 0; fi < wj.dim(); ++fi) {
        if (coords[fi].is_zero()) continue;
        int row = fi * ncomp + comp;
        block.mat.at(row, col) = coords[fi];
      }
    }
  }
  return block;
}

inline BlockOperator spin_dirac_block(HalfInt j) {
  return assemble_block("spin_s3", j, SpinorBasis::C2, sigma_l_apply,
                        {Rational(1), Rational(1)});
}

inline BlockOperator hdr_dirac_block(HalfInt j) {
  return assemble_block("kahler_s3", j, SpinorBasis::IPLadder, hdr_apply_ladder,
                        {Rational(2), Rational(2), Rational(2), Rational(2)});
}

inline BlockOperator ideal_spin_block(HalfInt j) {
  return assemble_block("spin_ideal_s3", j, SpinorBasis::IPLadder, ideal_gamma_l_ladder,
                        {Rational(2), Rational(2), Rational(2), Rational(2)});
}

// --- closed-form spectra -----------------------------------------------------------

inline std::vector<PredictedEigen> spin_spectrum_closed_form(HalfInt j) {
  Rational jq = j.value();
  std::vector<PredictedEigen> out;
  int d = j.twice + 1;  // 2j+1
  int mult_plus = j.twice * d;                 // 2j(2j+1)
  int mult_minus = j.twice * d + 2 * d;        // 2j(2j+1) + 2(2j+1)
  if (mult_plus > 0) out.push_back({jq + 1, 0, Rational(0), mult_plus});
  out.push_back({-jq, 0, Rational(0), mult_minus});
  return out;
}

inline std::vector<PredictedEigen> hdr_spectrum_closed_form(HalfInt j) {
  std::vector<PredictedEigen> out;
  Rational jq = j.value();
  int d = j.twice + 1;
  if (j.twice == 0) {
    out.push_back({Rational(0), 0, Rational(0), 1});
    out.push_back({Rational(-1), 0, Rational(0), 3});
    return out;
  }
  Rational jj = casimir_eigenvalue(j);
  out.push_back({Rational(0), +1, jj, d * d});
  out.push_back({Rational(0), -1, jj, d * d});
  int mult_ij = (j.twice - 1) * d;
  if (mult_ij > 0) out.push_back({jq, 0, Rational(0), mult_ij});
  out.push_back({-(jq + 1), 0, Rational(0), (j.twice + 3) * d});
  return out;
}

inline std::vector<PredictedEigen> ideal_spin_spectrum_closed_form(HalfInt j) {
  std::vector<PredictedEigen> out;
  Rational jq = j.value();
  int d = j.twice + 1;
  int mult_plus = 2 * j.twice * d;             // 4j(2j+1)
  int mult_minus = (2 * j.twice + 4) * d;      // (4j+4)(2j+1)
  if (mult_plus > 0) out.push_back({jq + 1, 0, Rational(0), mult_plus});
  out.push_back({-jq, 0, Rational(0), mult_minus});
  return out;
}

// --- closed-form eigenspinors -------------------------------------------------------

// Eigenvector A + sqrt(c) B with eigenvalue i (p + q sqrt(c)); residuals are
// checked exactly through the pair of identities
//   op(A) = i (p A + q c B),   op(B) = i (q A + p B).
struct ExactEigvec {
  SpinorField A, B;
  Rational p;
  int q = 0;
  Rational c = Rational(0);
};

inline bool check_exact_eigvec(SpinorOp const& op, ExactEigvec const& v) {
  SpinorField B = v.B.c.empty() ? SpinorField::zero(v.A.basis) : v.B;
  if (v.A.is_zero() && B.is_zero()) return false;
  Scalar i = Scalar::i();
  SpinorField lhsA = op(v.A);
  SpinorField rhsA = (i * Scalar(v.p)) * v.A + (i * Scalar(Rational(v.q) * v.c)) * B;
  if (!(lhsA == rhsA)) return false;
  SpinorField lhsB = op(B);
  SpinorField rhsB = (i * Scalar(Rational(v.q))) * v.A + (i * Scalar(v.p)) * B;
  return lhsB == rhsB;
}

// Spin Dirac eigenspinors: the two ladder branches for n != -j, the n = -j
// column, and the (0, D^j_{mj}) family; 2(2j+1)^2 in total.
inline std::vector<ExactEigvec> spin_eigenspinor_basis(HalfInt j) {
  std::vector<ExactEigvec> out;
  auto emit = [&out](ExactEigvec v) {
    if (v.B.c.empty()) v.B = SpinorField::zero(v.A.basis);
    out.push_back(std::move(v));
  };
  Rational jq = j.value();
  Scalar i = Scalar::i(), r2 = Scalar::sqrt2();
  for (int tm = -j.twice; tm <= j.twice; tm += 2) {
    HalfInt m(tm);
    for (int tn = -j.twice; tn <= j.twice; tn += 2) {
      HalfInt n(tn);
      Rational nq = n.value();
      PolyFun d = wigner({j, m, n});
      if (tn != -j.twice) {
        PolyFun lp = Lplus(d);
        // lambda_+ = i(j+1):  (D, -(i sqrt2/(j+n)) L_+ D)
        ExactEigvec vp;
        vp.A = SpinorField::zero(SpinorBasis::C2);
        vp.A.c[0] = d;
        vp.A.c[1] = (-(i * r2) * Scalar(Rational(1) / (jq + nq))) * lp;
        vp.p = jq + 1;
        emit(vp);
        // lambda_- = -ij:  (D, (i sqrt2/(j+1-n)) L_+ D)
        ExactEigvec vm;
        vm.A = SpinorField::zero(SpinorBasis::C2);
        vm.A.c[0] = d;
        vm.A.c[1] = ((i * r2) * Scalar(Rational(1) / (jq + 1 - nq))) * lp;
        vm.p = -jq;
        emit(vm);
      } else {
        // (D^j_{m,-j}, 0), lambda = -ij
        ExactEigvec v;
        v.A = SpinorField::zero(SpinorBasis::C2);
        v.A.c[0] = d;
        v.p = -jq;
        emit(v);
      }
      if (tn == j.twice) {
        // (0, D^j_{mj}), lambda = -ij
        ExactEigvec v;
        v.A = SpinorField::zero(SpinorBasis::C2);
        v.A.c[1] = d;
        v.p = -jq;
        emit(v);
      }
    }
  }
  return out;
}

namespace detail {

inline SpinorField ip_ladder(PolyFun f0, PolyFun fm, PolyFun fz, PolyFun fp) {
  SpinorField s = SpinorField::zero(SpinorBasis::IPLadder);
  s.c[0] = std::move(f0);
  s.c[1] = std::move(fm);
  s.c[2] = std::move(fz);
  s.c[3] = std::move(fp);
  return s;
}

}  // namespace detail

// Hodge - de Rham eigenspinors, sector by sector (ladder basis).
inline std::vector<ExactEigvec> hdr_eigenspinor_basis(HalfInt j) {
  std::vector<ExactEigvec> out;
  auto emit = [&out](ExactEigvec v) {
    if (v.B.c.empty()) v.B = SpinorField::zero(v.A.basis);
    out.push_back(std::move(v));
  };
  Scalar i = Scalar::i();
  Rational jq = j.value();
  Rational jj = casimir_eigenvalue(j);
  PolyFun zero;

  if (j.twice == 0) {
    // constants: diag(0, -i, -i, -i)
    for (int comp = 0; comp < 4; ++comp) {
      ExactEigvec v;
      v.A = SpinorField::zero(SpinorBasis::IPLadder);
      v.A.c[comp] = PolyFun::one();
      v.p = comp == 0 ? Rational(0) : Rational(-1);
      emit(v);
    }
    return out;
  }

  for (int tm = -j.twice; tm <= j.twice; tm += 2) {
    HalfInt m(tm);
    for (int tn = -j.twice; tn <= j.twice; tn += 2) {
      HalfInt n(tn);
      Rational nq = n.value();
      PolyFun d = wigner({j, m, n});
      PolyFun lm = Lminus(d), lp = Lplus(d), lz = Lz(d);

      if (tn != j.twice && tn != -j.twice) {
        // lambda_pm = pm i sqrt(j(j+1)):  (lambda D, L_- D, L_z D, L_+ D)
        for (int q : {+1, -1}) {
          ExactEigvec v;
          v.A = detail::ip_ladder(zero, lm, lz, lp);
          v.B = detail::ip_ladder((Scalar(Rational(q)) * i) * d, zero, zero, zero);
          v.p = 0;
          v.q = q;
          v.c = jj;
          emit(v);
        }
        // lambda = ij: (0, (i/(j-n)) L_- D, D, -(i/(j+n)) L_+ D)
        {
          ExactEigvec v;
          v.A = detail::ip_ladder(zero, (i * Scalar(Rational(1) / (jq - nq))) * lm, d,
                                  (-(i * Scalar(Rational(1) / (jq + nq)))) * lp);
          v.p = jq;
          emit(v);
        }
        // lambda = -i(j+1): (0, -(i/(j+n+1)) L_- D, D, (i/(j+1-n)) L_+ D)
        {
          ExactEigvec v;
          v.A = detail::ip_ladder(zero, (-(i * Scalar(Rational(1) / (jq + nq + 1)))) * lm,
                                  d, (i * Scalar(Rational(1) / (jq + 1 - nq))) * lp);
          v.p = -(jq + 1);
          emit(v);
        }
      } else if (tn == j.twice) {
        // (lambda D, 0, L_z D, L_+ D)
        for (int q : {+1, -1}) {
          ExactEigvec v;
          v.A = detail::ip_ladder(zero, zero, lz, lp);
          v.B = detail::ip_ladder((Scalar(Rational(q)) * i) * d, zero, zero, zero);
          v.q = q;
          v.c = jj;
          emit(v);
        }
        // (0, 0, -iD, L_+D) and (0, 0, 0, D), both lambda = -i(j+1)
        ExactEigvec v2;
        v2.A = detail::ip_ladder(zero, zero, (-i) * d, lp);
        v2.p = -(jq + 1);
        emit(v2);
        ExactEigvec v3;
        v3.A = detail::ip_ladder(zero, zero, zero, d);
        v3.p = -(jq + 1);
        emit(v3);
      } else {
        // n = -j: (lambda D, L_- D, L_z D, 0)
        for (int q : {+1, -1}) {
          ExactEigvec v;
          v.A = detail::ip_ladder(zero, lm, lz, zero);
          v.B = detail::ip_ladder((Scalar(Rational(q)) * i) * d, zero, zero, zero);
          v.q = q;
          v.c = jj;
          emit(v);
        }
        // (0, L_- D, iD, 0), lambda = -i(j+1) [sign of the w_z entry fixed:
        // the printed -iD fails the eigenvalue equation on the first row]
        ExactEigvec v2;
        v2.A = detail::ip_ladder(zero, lm, i * d, zero);
        v2.p = -(jq + 1);
        emit(v2);
        // (0, D, 0, 0), lambda = -i(j+1)
        ExactEigvec v3;
        v3.A = detail::ip_ladder(zero, d, zero, zero);
        v3.p = -(jq + 1);
        emit(v3);
      }
    }
  }
  return out;
}

// Eigenspinors of gamma^a L_a on I_P.
inline std::vector<ExactEigvec> ideal_spin_eigenspinor_basis(HalfInt j) {
  std::vector<ExactEigvec> out;
  auto emit = [&out](ExactEigvec v) {
    if (v.B.c.empty()) v.B = SpinorField::zero(v.A.basis);
    out.push_back(std::move(v));
  };
  Scalar i = Scalar::i();
  Rational jq = j.value();
  PolyFun zero;

  if (j.twice == 0) {
    for (int comp = 0; comp < 4; ++comp) {
      ExactEigvec v;
      v.A = SpinorField::zero(SpinorBasis::IPLadder);
      v.A.c[comp] = PolyFun::one();
      v.p = 0;
      emit(v);
    }
    return out;
  }

  for (int tm = -j.twice; tm <= j.twice; tm += 2) {
    HalfInt m(tm);
    for (int tn = -j.twice; tn <= j.twice; tn += 2) {
      HalfInt n(tn);
      Rational nq = n.value();
      PolyFun d = wigner({j, m, n});
      PolyFun lm = Lminus(d), lp = Lplus(d);

      if (tn != j.twice && tn != -j.twice) {
        for (Rational lam : std::array<Rational, 2>{Rational(jq + 1), Rational(-jq)}) {
          // psi: (D, L_-D/(lambda - i), -n D/(1 + i lambda), L_+D/(lambda-i))
          // with lambda = i*lam: 1/(lambda-i) = -i/(lam-1), 1+i*lambda = 1-lam
          Scalar inv_lam_mi = -(i * Scalar(Rational(1) / (lam - 1)));
          Scalar mid = Scalar(-nq / (1 - lam));
          ExactEigvec v;
          v.A = detail::ip_ladder(d, inv_lam_mi * lm, mid * d, inv_lam_mi * lp);
          v.p = lam;
          emit(v);
          ExactEigvec vt;
          vt.A = detail::ip_ladder(mid * d, (-inv_lam_mi) * lm, d, inv_lam_mi * lp);
          vt.p = lam;
          emit(vt);
        }
      } else if (tn == -j.twice) {
        ExactEigvec v1;  // (D, 0, D, 0), lambda = -ij
        v1.A = detail::ip_ladder(d, zero, d, zero);
        v1.p = -jq;
        emit(v1);
        ExactEigvec v2;  // (D, i L_-D, 0, 0), lambda = -ij
        v2.A = detail::ip_ladder(d, i * lm, zero, zero);
        v2.p = -jq;
        emit(v2);
        ExactEigvec v3;  // (0, D, 0, 0), lambda = -ij
        v3.A = detail::ip_ladder(zero, d, zero, zero);
        v3.p = -jq;
        emit(v3);
        ExactEigvec v4;  // (D, -(i/j) L_-D, -D, 0), lambda = i(j+1)
        v4.A = detail::ip_ladder(d, (-(i * Scalar(Rational(1) / jq))) * lm, -d, zero);
        v4.p = jq + 1;
        emit(v4);
      } else {
        ExactEigvec v1;  // (D, 0, -D, 0), lambda = -ij
        v1.A = detail::ip_ladder(d, zero, -d, zero);
        v1.p = -jq;
        emit(v1);
        ExactEigvec v2;  // (D, 0, 0, i L_+D), lambda = -ij  [sign fixed]
        v2.A = detail::ip_ladder(d, zero, zero, i * lp);
        v2.p = -jq;
        emit(v2);
        ExactEigvec v3;  // (0, 0, 0, D), lambda = -ij
        v3.A = detail::ip_ladder(zero, zero, zero, d);
        v3.p = -jq;
        emit(v3);
        ExactEigvec v4;  // (D, 0, D, -(i/j) L_+D), lambda = i(j+1)
        v4.A = detail::ip_ladder(d, zero, d, (-(i * Scalar(Rational(1) / jq))) * lp);
        v4.p = jq + 1;
        emit(v4);
      }
    }
  }
  return out;
}

}  // namespace kahler
