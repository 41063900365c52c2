#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "scalar.hpp"

namespace kahler {

// Variables of the coordinate algebra on S^3 = SU(2).
enum Var : int { U = 0, V = 1, UB = 2, VB = 3 };

// Exact polynomial in (u, v, ubar, vbar) reduced modulo ubar u + vbar v = 1.
// Normal form: no monomial carries both u and ubar (ubar u -> 1 - vbar v);
// it is unique, so equality is coefficient-wise.
class PolyFun {
 public:
  // Exponent quadruple packed for ordering: (a, b, c, d) for u^a v^b ub^c vb^d.
  using Mono = std::uint32_t;
  static Mono pack(int a, int b, int c, int d) {
    return (Mono)a << 24 | (Mono)b << 16 | (Mono)c << 8 | (Mono)d;
  }
  static std::array<int, 4> unpack(Mono m) {
    return {(int)(m >> 24 & 0xff), (int)(m >> 16 & 0xff), (int)(m >> 8 & 0xff),
            (int)(m & 0xff)};
  }

  PolyFun() = default;

  static PolyFun from_rational(Rational const& q) { return constant(Scalar(q)); }
  static PolyFun constant(Scalar c) {
    PolyFun f;
    f.add(0, 0, 0, 0, std::move(c));
    return f;
  }
  static PolyFun one() { return constant(Scalar(Rational(1))); }
  static PolyFun monomial(int a, int b, int c, int d, Scalar coeff = Scalar(Rational(1))) {
    PolyFun f;
    f.add(a, b, c, d, std::move(coeff));
    return f;
  }
  static PolyFun var(Var x) {
    int e[4] = {0, 0, 0, 0};
    e[x] = 1;
    return monomial(e[0], e[1], e[2], e[3]);
  }

  std::map<Mono, Scalar> const& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  Scalar constant_part() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? Scalar{} : it->second;
  }

  // Adds coeff * u^a v^b ub^c vb^d, reducing to normal form.
  void add(int a, int b, int c, int d, Scalar coeff) {
    if (coeff.is_zero()) return;
    int k = std::min(a, c);
    if (k == 0) {
      add_raw(pack(a, b, c, d), coeff);
      return;
    }
    // (ubar u)^k = (1 - vbar v)^k = sum_r C(k,r) (-1)^r v^r vb^r
    Rational binom(1);
    for (int r = 0; r <= k; ++r) {
      Scalar c2 = (r % 2 == 0 ? binom : -binom) * coeff;
      add_raw(pack(a - k, b + r, c - k, d + r), c2);
      binom = binom * Rational(k - r) / Rational(r + 1);
    }
  }

  friend PolyFun operator+(PolyFun const& f, PolyFun const& g) {
    PolyFun out = f;
    for (auto const& [m, c] : g.terms_) out.add_raw(m, c);
    return out;
  }
  friend PolyFun operator-(PolyFun const& f, PolyFun const& g) {
    PolyFun out = f;
    for (auto const& [m, c] : g.terms_) out.add_raw(m, -c);
    return out;
  }
  friend PolyFun operator-(PolyFun const& f) {
    PolyFun out;
    for (auto const& [m, c] : f.terms_) out.terms_.emplace(m, -c);
    return out;
  }
  friend PolyFun operator*(Scalar const& s, PolyFun const& f) {
    PolyFun out;
    if (s.is_zero()) return out;
    for (auto const& [m, c] : f.terms_) {
      Scalar p = s * c;
      if (!p.is_zero()) out.terms_.emplace(m, std::move(p));
    }
    return out;
  }
  friend PolyFun operator*(PolyFun const& f, PolyFun const& g) {
    PolyFun out;
    for (auto const& [m1, c1] : f.terms_) {
      auto e1 = unpack(m1);
      for (auto const& [m2, c2] : g.terms_) {
        auto e2 = unpack(m2);
        out.add(e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3], c1 * c2);
      }
    }
    return out;
  }
  friend bool operator==(PolyFun const& f, PolyFun const& g) {
    return f.terms_ == g.terms_;
  }

  // Complex conjugation: u <-> ubar, v <-> vbar.
  PolyFun conj() const {
    PolyFun out;
    for (auto const& [m, c] : terms_) {
      auto e = unpack(m);
      out.add_raw(pack(e[2], e[3], e[0], e[1]), c.conj());
    }
    return out;
  }

  int total_degree() const {
    int d = 0;
    for (auto const& [m, c] : terms_) {
      auto e = unpack(m);
      d = std::max(d, e[0] + e[1] + e[2] + e[3]);
    }
    return d;
  }

 private:
  void add_raw(Mono m, Scalar const& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<Mono, Scalar> terms_;
};

// --- first-order differential operators --------------------------------------

// One term coeff * x_mult * d/d x_diff of a derivation.
struct DerivTerm {
  Var diff;
  Var mult;
  Scalar coeff;
};

inline PolyFun apply_derivation(std::vector<DerivTerm> const& op, PolyFun const& f) {
  PolyFun out;
  for (auto const& [m, c] : f.terms()) {
    auto e = PolyFun::unpack(m);
    for (auto const& t : op) {
      if (e[t.diff] == 0) continue;
      auto e2 = e;
      e2[t.diff] -= 1;
      e2[t.mult] += 1;
      out.add(e2[0], e2[1], e2[2], e2[3], Scalar(Rational(e[t.diff])) * t.coeff * c);
    }
  }
  return out;
}

namespace ops {

inline Scalar half_i() { return Scalar(GaussRat(Rational(0), Rational(1, 2))); }
inline Scalar i_over_sqrt2() {
  return Scalar(GaussRat(), GaussRat(Rational(0), Rational(1, 2)));  // i/sqrt2 = (i/2) sqrt2
}

// Left-invariant vector fields (generators of right translations).
inline std::vector<DerivTerm> const& Lx_table() {
  static const std::vector<DerivTerm> t = {{U, VB, half_i()},
                                           {UB, V, -half_i()},
                                           {V, UB, -half_i()},
                                           {VB, U, half_i()}};
  return t;
}
inline std::vector<DerivTerm> const& Ly_table() {
  static const std::vector<DerivTerm> t = {{U, VB, -Scalar(Rational(1, 2))},
                                           {UB, V, -Scalar(Rational(1, 2))},
                                           {V, UB, Scalar(Rational(1, 2))},
                                           {VB, U, Scalar(Rational(1, 2))}};
  return t;
}
inline std::vector<DerivTerm> const& Lz_table() {
  static const std::vector<DerivTerm> t = {{U, U, -half_i()},
                                           {UB, UB, half_i()},
                                           {V, V, -half_i()},
                                           {VB, VB, half_i()}};
  return t;
}
// Ladder operators L_- = (L_x - i L_y)/sqrt2, L_+ = (L_x + i L_y)/sqrt2.
inline std::vector<DerivTerm> const& Lminus_table() {
  static const std::vector<DerivTerm> t = {{U, VB, i_over_sqrt2()},
                                           {V, UB, -i_over_sqrt2()}};
  return t;
}
inline std::vector<DerivTerm> const& Lplus_table() {
  static const std::vector<DerivTerm> t = {{VB, U, i_over_sqrt2()},
                                           {UB, V, -i_over_sqrt2()}};
  return t;
}

// Right-invariant vector fields (generators of left translations),
// R_a f(gamma) = d/dt f(exp(t T_a) gamma).  They commute with every L_b.
inline std::vector<DerivTerm> const& Rz_table() {
  static const std::vector<DerivTerm> t = {{U, U, -half_i()},
                                           {UB, UB, half_i()},
                                           {V, V, half_i()},
                                           {VB, VB, -half_i()}};
  return t;
}
inline std::vector<DerivTerm> const& Rx_table() {
  static const std::vector<DerivTerm> t = {{U, V, -half_i()},
                                           {V, U, -half_i()},
                                           {UB, VB, half_i()},
                                           {VB, UB, half_i()}};
  return t;
}
inline std::vector<DerivTerm> const& Ry_table() {
  static const std::vector<DerivTerm> t = {{U, V, -Scalar(Rational(1, 2))},
                                           {V, U, Scalar(Rational(1, 2))},
                                           {UB, VB, -Scalar(Rational(1, 2))},
                                           {VB, UB, Scalar(Rational(1, 2))}};
  return t;
}
// (R_x + i R_y)/sqrt2 raises the row label m; (R_x - i R_y)/sqrt2 lowers it.
inline std::vector<DerivTerm> const& Rraise_table() {
  static const std::vector<DerivTerm> t = {{VB, UB, i_over_sqrt2()},
                                           {U, V, -i_over_sqrt2()}};
  return t;
}
inline std::vector<DerivTerm> const& Rlower_table() {
  static const std::vector<DerivTerm> t = {{V, U, -i_over_sqrt2()},
                                           {UB, VB, i_over_sqrt2()}};
  return t;
}

}  // namespace ops

inline PolyFun Lx(PolyFun const& f) { return apply_derivation(ops::Lx_table(), f); }
inline PolyFun Ly(PolyFun const& f) { return apply_derivation(ops::Ly_table(), f); }
inline PolyFun Lz(PolyFun const& f) { return apply_derivation(ops::Lz_table(), f); }
inline PolyFun Lminus(PolyFun const& f) { return apply_derivation(ops::Lminus_table(), f); }
inline PolyFun Lplus(PolyFun const& f) { return apply_derivation(ops::Lplus_table(), f); }
inline PolyFun Rz(PolyFun const& f) { return apply_derivation(ops::Rz_table(), f); }
inline PolyFun Rx(PolyFun const& f) { return apply_derivation(ops::Rx_table(), f); }
inline PolyFun Ry(PolyFun const& f) { return apply_derivation(ops::Ry_table(), f); }
inline PolyFun Rraise(PolyFun const& f) { return apply_derivation(ops::Rraise_table(), f); }
inline PolyFun Rlower(PolyFun const& f) { return apply_derivation(ops::Rlower_table(), f); }

// Indexed left derivation, a = 0,1,2 for x,y,z.
inline PolyFun left_deriv(int a, PolyFun const& f) {
  switch (a) {
    case 0: return Lx(f);
    case 1: return Ly(f);
    case 2: return Lz(f);
  }
  throw std::invalid_argument("derivation index");
}

// Named variant covering the ladder combinations.
inline PolyFun left_derivation(char which, PolyFun const& f) {
  switch (which) {
    case 'x': return Lx(f);
    case 'y': return Ly(f);
    case 'z': return Lz(f);
    case '-': return Lminus(f);
    case '+': return Lplus(f);
  }
  throw std::invalid_argument("derivation name");
}

// Casimir L^2 = sum_a L_a L_a.
inline PolyFun casimir(PolyFun const& f) {
  return Lx(Lx(f)) + Ly(Ly(f)) + Lz(Lz(f));
}

// --- Peter-Weyl integration ---------------------------------------------------

// Closed monomial formula on the raw (unreduced) algebra:
// int u^a v^b ub^c vb^d = delta_{ac} delta_{bd} a! b! / (a+b+1)!.
inline Rational monomial_haar_integral(int a, int b, int c, int d) {
  if (a != c || b != d) return Rational(0);
  Rational r(1);
  for (int k = 1; k <= a; ++k) r *= Rational(k);
  for (int k = 1; k <= b; ++k) r *= Rational(k);
  for (int k = 1; k <= a + b + 1; ++k) r /= Rational(k);
  return r;
}

// Normalized Haar integral, int 1 = 1.
inline Scalar peter_weyl_integral(PolyFun const& f) {
  Scalar out{};
  for (auto const& [m, c] : f.terms()) {
    auto e = PolyFun::unpack(m);
    Rational w = monomial_haar_integral(e[0], e[1], e[2], e[3]);
    if (w != 0) out += Scalar(w) * c;
  }
  return out;
}

// Hermitian pairing <f|g> = int conj(f) g.
inline Scalar pw_inner(PolyFun const& f, PolyFun const& g) {
  return peter_weyl_integral(f.conj() * g);
}

}  // namespace kahler
