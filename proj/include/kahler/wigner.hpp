#pragma once

#include <vector>

#include "half_int.hpp"
#include "polyfun.hpp"

namespace kahler {

// Label of a Wigner function D^j_{mn}: joint eigenfunction of
//   L^2 D = -j(j+1) D,  L_z D = i n D,  R_z D = i m D.
// In this convention u^{2j} sits at (m, n) = (-j, -j); the right ladder
// (R_x + iR_y)/sqrt2 raises m and L_- raises n.
struct WignerLabel {
  HalfInt j, m, n;

  bool admissible() const {
    if (j.twice < 0) return false;
    auto ok = [&](HalfInt x) {
      return x.twice >= -j.twice && x.twice <= j.twice &&
             (j.twice - x.twice) % 2 == 0;
    };
    return ok(m) && ok(n);
  }
};

// D^j_{mn} built by ladders from the corner u^{2j}, rescaled so that the
// leading monomial (lowest exponent key) has coefficient one; eigenrelations,
// not normalization, carry the content.
inline PolyFun wigner(WignerLabel const& l) {
  if (!l.admissible()) throw std::invalid_argument("inadmissible Wigner label");
  int up_m = (l.m.twice + l.j.twice) / 2;
  int up_n = (l.n.twice + l.j.twice) / 2;
  PolyFun f = PolyFun::monomial(l.j.twice, 0, 0, 0);
  for (int k = 0; k < up_m; ++k) f = Rraise(f);
  for (int k = 0; k < up_n; ++k) f = Lminus(f);
  Scalar lead = f.terms().begin()->second;
  return lead.inverse() * f;
}

// The (2j+1)^2-dimensional block W_j with exact norms under the Haar pairing.
struct WjBasis {
  HalfInt j;
  std::vector<WignerLabel> labels;      // lexicographic in (m, n)
  std::vector<PolyFun> funs;
  std::vector<Rational> norms;          // <D|D>, positive rationals

  int dim() const { return (int)labels.size(); }
  int index_of(HalfInt m, HalfInt n) const {
    int per = j.twice + 1;
    return ((m.twice + j.twice) / 2) * per + (n.twice + j.twice) / 2;
  }
};

inline WjBasis wj_basis(HalfInt j) {
  WjBasis b;
  b.j = j;
  for (int tm = -j.twice; tm <= j.twice; tm += 2)
    for (int tn = -j.twice; tn <= j.twice; tn += 2) {
      WignerLabel l{j, HalfInt(tm), HalfInt(tn)};
      b.labels.push_back(l);
      b.funs.push_back(wigner(l));
      Scalar n2 = pw_inner(b.funs.back(), b.funs.back());
      if (!(n2.rat.im == 0) || !n2.srt.is_zero() || !(n2.rat.re > 0))
        throw std::logic_error("Wigner norm is not a positive rational");
      b.norms.push_back(n2.rat.re);
    }
  return b;
}

// Coordinates of f in the W_j basis; exact, with full reconstruction check.
inline std::vector<Scalar> wj_coords(WjBasis const& b, PolyFun const& f) {
  std::vector<Scalar> x(b.dim());
  for (int k = 0; k < b.dim(); ++k) {
    Scalar num = pw_inner(b.funs[k], f);
    x[k] = Scalar(Rational(1) / b.norms[k]) * num;
  }
  PolyFun recon;
  for (int k = 0; k < b.dim(); ++k) recon = recon + x[k] * b.funs[k];
  if (!(recon == f)) throw std::domain_error("function not inside W_j");
  return x;
}

}  // namespace kahler
