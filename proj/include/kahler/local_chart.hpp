#pragma once

#include <map>

#include "multivector.hpp"
#include "scalar.hpp"
#include "spin_module.hpp"

namespace kahler {

// Trigonometric rationals on the polar chart: Laurent polynomials in
// s = sin(theta) with c = cos(theta) of degree <= 1, reduced by c^2 = 1 - s^2.
class TrigRat {
 public:
  TrigRat() = default;
  TrigRat(Scalar v) { add(0, 0, std::move(v)); }

  static TrigRat from_rational(Rational const& q) { return TrigRat(Scalar(q)); }
  static TrigRat sin_pow(int b, Scalar coeff = Scalar(Rational(1))) {
    TrigRat t;
    t.add(0, b, std::move(coeff));
    return t;
  }
  static TrigRat cos(Scalar coeff = Scalar(Rational(1))) {
    TrigRat t;
    t.add(1, 0, std::move(coeff));
    return t;
  }
  // cos/sin, the curvature coefficient of the chart
  static TrigRat cot() {
    TrigRat t;
    t.add(1, -1, Scalar(Rational(1)));
    return t;
  }

  void add(int a, int b, Scalar v) {
    if (v.is_zero()) return;
    if (a >= 2) {  // c^2 = 1 - s^2
      add(a - 2, b, v);
      add(a - 2, b + 2, -v);
      return;
    }
    auto [it, fresh] = terms_.try_emplace({a, b}, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<std::pair<int, int>, Scalar> const& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend TrigRat operator+(TrigRat const& x, TrigRat const& y) {
    TrigRat out = x;
    for (auto const& [k, v] : y.terms_) out.add(k.first, k.second, v);
    return out;
  }
  friend TrigRat operator-(TrigRat const& x, TrigRat const& y) {
    TrigRat out = x;
    for (auto const& [k, v] : y.terms_) out.add(k.first, k.second, -v);
    return out;
  }
  friend TrigRat operator-(TrigRat const& x) {
    TrigRat out;
    for (auto const& [k, v] : x.terms_) out.terms_.emplace(k, -v);
    return out;
  }
  friend TrigRat operator*(TrigRat const& x, TrigRat const& y) {
    TrigRat out;
    for (auto const& [k1, v1] : x.terms_)
      for (auto const& [k2, v2] : y.terms_)
        out.add(k1.first + k2.first, k1.second + k2.second, v1 * v2);
    return out;
  }
  friend TrigRat operator*(Scalar const& s, TrigRat const& x) {
    return TrigRat(s) * x;
  }
  friend bool operator==(TrigRat const& x, TrigRat const& y) {
    return x.terms_ == y.terms_;
  }

  // d/d theta: s' = c, c' = -s.
  TrigRat dtheta() const {
    TrigRat out;
    for (auto const& [k, v] : terms_) {
      auto [a, b] = k;
      if (b != 0) out.add(a + 1, b - 1, Scalar(Rational(b)) * v);
      if (a != 0) out.add(a - 1, b + 1, -(Scalar(Rational(a)) * v));
    }
    return out;
  }

 private:
  std::map<std::pair<int, int>, Scalar> terms_;
};

// Smooth chart functions: finite Fourier sums  sum_k t_k(theta) e^{ik phi}.
class LocalFun {
 public:
  LocalFun() = default;
  LocalFun(TrigRat t) { set(0, std::move(t)); }

  static LocalFun from_rational(Rational const& q) {
    return LocalFun(TrigRat::from_rational(q));
  }
  static LocalFun mode(int k, TrigRat t) {
    LocalFun f;
    f.set(k, std::move(t));
    return f;
  }

  void set(int k, TrigRat t) {
    if (t.is_zero()) modes_.erase(k);
    else modes_[k] = std::move(t);
  }
  std::map<int, TrigRat> const& modes() const { return modes_; }
  bool is_zero() const { return modes_.empty(); }

  friend LocalFun operator+(LocalFun const& x, LocalFun const& y) {
    LocalFun out = x;
    for (auto const& [k, t] : y.modes_) out.set(k, out.mode_at(k) + t);
    return out;
  }
  friend LocalFun operator-(LocalFun const& x, LocalFun const& y) {
    LocalFun out = x;
    for (auto const& [k, t] : y.modes_) out.set(k, out.mode_at(k) - t);
    return out;
  }
  friend LocalFun operator-(LocalFun const& x) {
    LocalFun out;
    for (auto const& [k, t] : x.modes_) out.modes_.emplace(k, -t);
    return out;
  }
  friend LocalFun operator*(LocalFun const& x, LocalFun const& y) {
    LocalFun out;
    for (auto const& [k1, t1] : x.modes_)
      for (auto const& [k2, t2] : y.modes_)
        out.set(k1 + k2, out.mode_at(k1 + k2) + t1 * t2);
    return out;
  }
  friend LocalFun operator*(Scalar const& s, LocalFun const& x) {
    return LocalFun(TrigRat(s)) * x;
  }
  friend bool operator==(LocalFun const& x, LocalFun const& y) {
    return x.modes_ == y.modes_;
  }

  LocalFun dtheta() const {
    LocalFun out;
    for (auto const& [k, t] : modes_) out.set(k, t.dtheta());
    return out;
  }
  // (1/sin) d/d phi
  LocalFun dphi_over_sin() const {
    LocalFun out;
    for (auto const& [k, t] : modes_) {
      if (k == 0) continue;
      out.set(k, TrigRat::sin_pow(-1, Scalar(Rational(k)) * Scalar::i()) * t);
    }
    return out;
  }

 private:
  TrigRat mode_at(int k) const {
    auto it = modes_.find(k);
    return it == modes_.end() ? TrigRat{} : it->second;
  }

  std::map<int, TrigRat> modes_;
};

// Polynomials in one formal parameter (the projector modulus beta) over a
// coefficient ring.
template <class R>
class Poly1 {
 public:
  Poly1() = default;
  Poly1(R c) : coeffs_{std::move(c)} { trim(); }

  static Poly1 from_rational(Rational const& q) { return Poly1(R::from_rational(q)); }
  static Poly1 variable() {
    Poly1 p;
    p.coeffs_ = {R{}, R::from_rational(Rational(1))};
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  std::vector<R> const& coeffs() const { return coeffs_; }

  friend Poly1 operator+(Poly1 const& x, Poly1 const& y) {
    Poly1 out;
    out.coeffs_.resize(std::max(x.coeffs_.size(), y.coeffs_.size()));
    for (size_t k = 0; k < out.coeffs_.size(); ++k) {
      if (k < x.coeffs_.size()) out.coeffs_[k] = out.coeffs_[k] + x.coeffs_[k];
      if (k < y.coeffs_.size()) out.coeffs_[k] = out.coeffs_[k] + y.coeffs_[k];
    }
    out.trim();
    return out;
  }
  friend Poly1 operator-(Poly1 const& x, Poly1 const& y) { return x + (-y); }
  friend Poly1 operator-(Poly1 const& x) {
    Poly1 out = x;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }
  friend Poly1 operator*(Poly1 const& x, Poly1 const& y) {
    Poly1 out;
    if (x.is_zero() || y.is_zero()) return out;
    out.coeffs_.resize(x.coeffs_.size() + y.coeffs_.size() - 1);
    for (size_t a = 0; a < x.coeffs_.size(); ++a)
      for (size_t b = 0; b < y.coeffs_.size(); ++b)
        out.coeffs_[a + b] = out.coeffs_[a + b] + x.coeffs_[a] * y.coeffs_[b];
    out.trim();
    return out;
  }
  friend bool operator==(Poly1 const& x, Poly1 const& y) {
    return x.coeffs_ == y.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<R> coeffs_;
};

// --- the polar chart of the two-sphere -------------------------------------------

// Frame covectors th = d theta (e_0) and ph = sin(theta) d phi (e_1).
inline Metric const& chart_metric() {
  static const Metric g = Metric::euclidean(2);
  return g;
}

using ChartForm = Multivector<LocalFun>;

// P_pm(beta) = (1 pm i tau)/2 + beta (th pm i ph) over the beta-polynomial ring.
inline Multivector<Poly1<Scalar>> chart_projector(int sign) {
  using P = Poly1<Scalar>;
  Multivector<P> p(2);
  p.set(0u, P(Scalar(Rational(1, 2))));
  p.set(0b11u, P(Scalar(Rational(sign, 2)) * Scalar::i()));
  P beta = P::variable();
  p.add_term(0b01u, beta);
  p.add_term(0b10u, beta * P(Scalar(Rational(sign)) * Scalar::i()));
  return p;
}

inline Multivector<Scalar> chart_projector_at(int sign, Scalar beta) {
  Multivector<Scalar> p(2);
  p.set(0u, Scalar(Rational(1, 2)));
  p.set(0b11u, Scalar(Rational(sign, 2)) * Scalar::i());
  p.add_term(0b01u, beta);
  p.add_term(0b10u, beta * (Scalar(Rational(sign)) * Scalar::i()));
  return p;
}

// psi_1^pm = 1 pm i tau, psi_2^pm = th pm i ph.
inline Multivector<Scalar> chart_psi(int sign, int which) {
  Multivector<Scalar> m(2);
  if (which == 1) {
    m.set(0u, Scalar(Rational(1)));
    m.set(0b11u, Scalar(Rational(sign)) * Scalar::i());
  } else {
    m.set(0b01u, Scalar(Rational(1)));
    m.set(0b10u, Scalar(Rational(sign)) * Scalar::i());
  }
  return m;
}

// Levi-Civita derivative along the chart frame: along e_0 the coframe is
// parallel; along e_1, nabla th = (c/s) ph and nabla ph = -(c/s) th.
inline ChartForm chart_nabla(int a, ChartForm const& m) {
  ChartForm out(2);
  for (auto const& [blade, f] : m.terms()) {
    LocalFun df = a == 0 ? f.dtheta() : f.dphi_over_sin();
    if (!df.is_zero()) out.add_term(blade, df);
  }
  if (a == 1) {
    LocalFun cot{TrigRat::cot()};
    for (auto const& [blade, f] : m.terms()) {
      if (blade & 0b01u) {  // th -> (c/s) ph
        Blade other = (blade & ~0b01u) | 0b10u;
        if (!(blade & 0b10u))
          out.add_term(other, cot * f);  // no reordering needed: th before ph
      }
      if (blade & 0b10u) {  // ph -> -(c/s) th
        if (!(blade & 0b01u)) {
          Blade other = (blade & ~0b10u) | 0b01u;
          out.add_term(other, -(cot * f));
        }
      }
    }
  }
  return out;
}

// Kahler-Dirac operator of the chart, D = th v nabla_0 + ph v nabla_1.
inline ChartForm chart_kahler_dirac(ChartForm const& m) {
  Metric const& g = chart_metric();
  ChartForm out(2);
  for (int a = 0; a < 2; ++a)
    out = out + clifford(ChartForm::basis_vector(2, a), chart_nabla(a, m), g);
  return out;
}

// Sections of I_- as component pairs against (psi_1^-, psi_2^-).
struct ChartSection {
  LocalFun f1, f2;
  friend bool operator==(ChartSection const& x, ChartSection const& y) {
    return x.f1 == y.f1 && x.f2 == y.f2;
  }
};

inline ChartForm chart_section_form(ChartSection const& s) {
  ChartForm out(2);
  Scalar i = Scalar::i();
  out.add_term(0u, s.f1);
  out.add_term(0b11u, -(i)*s.f1);
  out.add_term(0b01u, s.f2);
  out.add_term(0b10u, -(i)*s.f2);
  return out;
}

inline ChartSection chart_form_section(ChartForm const& m) {
  ChartSection s{m.coeff(0u), m.coeff(0b01u)};
  if (!(chart_section_form(s) == m))
    throw std::domain_error("form is not inside the chart module I_-");
  return s;
}

// The Kahler operator in matrix form on (f1, f2):
// [[0, cot + d_th - (i/s) d_ph], [d_th + (i/s) d_ph, 0]].
inline ChartSection chart_kahler_matrix_apply(ChartSection const& s) {
  LocalFun cot{TrigRat::cot()};
  ChartSection out;
  out.f1 = cot * s.f2 + s.f2.dtheta() - Scalar::i() * s.f2.dphi_over_sin();
  out.f2 = s.f1.dtheta() + Scalar::i() * s.f1.dphi_over_sin();
  return out;
}

// The spin Dirac operator built from the spin connection: the chart frame
// has omega_12(e_1) = -cot, so gamma^a(e_a + (1/4) omega_bc(e_a) g^b g^c)
// collapses to [[0, cot/2 + d_th - (i/s) d_ph], [cot/2 + d_th + (i/s) d_ph, 0]].
inline ChartSection chart_spin_dirac_apply(ChartSection const& s) {
  // gamma matrices of the module: sigma_x, sigma_y (engine-derived).
  static const std::vector<ExactMat<Scalar>> gams = [] {
    auto mod = ideal_basis(chart_projector_at(-1, Scalar{}), chart_metric());
    return gamma_rep(mod, chart_metric());
  }();
  LocalFun half_cot{TrigRat::cot()};
  half_cot = Scalar(Rational(1, 2)) * half_cot;

  // delta_r psi = e_r(psi) + (1/2) omega_12(e_r) (gamma1 gamma2 psi)
  std::array<std::array<LocalFun, 2>, 2> delta;
  ExactMat<Scalar> g1g2 = gams[0] * gams[1];
  std::array<LocalFun, 2> comp = {s.f1, s.f2};
  for (int r = 0; r < 2; ++r) {
    std::array<LocalFun, 2> d;
    for (int i = 0; i < 2; ++i)
      d[i] = r == 0 ? comp[i].dtheta() : comp[i].dphi_over_sin();
    if (r == 1) {
      // omega_12(e_1) = -c/s
      for (int i = 0; i < 2; ++i) {
        LocalFun rot;
        for (int k = 0; k < 2; ++k)
          if (!g1g2.at(i, k).is_zero()) rot = rot + g1g2.at(i, k) * comp[k];
        d[i] = d[i] - half_cot * rot;
      }
    }
    delta[r] = d;
  }
  ChartSection out;
  for (int r = 0; r < 2; ++r)
    for (int i = 0; i < 2; ++i) {
      if (!gams[r].at(0, i).is_zero())
        out.f1 = out.f1 + gams[r].at(0, i) * delta[r][i];
      if (!gams[r].at(1, i).is_zero())
        out.f2 = out.f2 + gams[r].at(1, i) * delta[r][i];
    }
  return out;
}

// Matrix form of the spin operator for the comparison test.
inline ChartSection chart_spin_matrix_apply(ChartSection const& s) {
  LocalFun half_cot{TrigRat::cot()};
  half_cot = Scalar(Rational(1, 2)) * half_cot;
  ChartSection out;
  out.f1 = half_cot * s.f2 + s.f2.dtheta() - Scalar::i() * s.f2.dphi_over_sin();
  out.f2 = half_cot * s.f1 + s.f1.dtheta() + Scalar::i() * s.f1.dphi_over_sin();
  return out;
}

}  // namespace kahler
