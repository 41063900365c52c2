#pragma once

#include <complex>
#include <ostream>

#include "rational.hpp"

namespace kahler {

// Complex number with rational real and imaginary parts.
struct GaussRat {
  Rational re, im;

  GaussRat() = default;
  GaussRat(Rational r) : re(std::move(r)) {}
  GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }

  friend GaussRat operator+(GaussRat const& a, GaussRat const& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRat operator-(GaussRat const& a, GaussRat const& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRat operator-(GaussRat const& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(GaussRat const& a, GaussRat const& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(GaussRat const& a, GaussRat const& b) {
    return a.re == b.re && a.im == b.im;
  }

  GaussRat conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  GaussRat inverse() const {
    Rational n = norm2();
    if (n == 0) throw std::domain_error("division by zero");
    return {re / n, -im / n};
  }
};

// Element of the field Q(i, sqrt 2), stored as rat + srt*sqrt(2) with
// Gaussian-rational parts.  Every coefficient appearing in the algebra on
// S^3 and S^2 lives here: the only irrationality the frame calculus
// introduces is the 1/sqrt(2) of the ladder operators.
struct Scalar {
  GaussRat rat, srt;

  Scalar() = default;
  Scalar(int n) : rat(Rational(n)) {}
  Scalar(Rational r) : rat(std::move(r)) {}
  Scalar(GaussRat g) : rat(std::move(g)) {}
  Scalar(GaussRat g, GaussRat s) : rat(std::move(g)), srt(std::move(s)) {}

  static Scalar from_rational(Rational const& q) { return Scalar(q); }
  static Scalar i() { return Scalar(GaussRat(Rational(0), Rational(1))); }
  static Scalar sqrt2() { return Scalar(GaussRat(Rational(0)), GaussRat(Rational(1))); }
  static Scalar inv_sqrt2() {
    return Scalar(GaussRat(Rational(0)), GaussRat(Rational(1, 2)));
  }

  bool is_zero() const { return rat.is_zero() && srt.is_zero(); }
  bool is_rational() const { return rat.im == 0 && srt.is_zero(); }

  friend Scalar operator+(Scalar const& a, Scalar const& b) {
    return {a.rat + b.rat, a.srt + b.srt};
  }
  friend Scalar operator-(Scalar const& a, Scalar const& b) {
    return {a.rat - b.rat, a.srt - b.srt};
  }
  friend Scalar operator-(Scalar const& a) { return {-a.rat, -a.srt}; }
  friend Scalar operator*(Scalar const& a, Scalar const& b) {
    GaussRat two{Rational(2)};
    return {a.rat * b.rat + two * (a.srt * b.srt), a.rat * b.srt + a.srt * b.rat};
  }
  friend Scalar operator*(Rational const& q, Scalar const& s) { return Scalar(q) * s; }
  Scalar& operator+=(Scalar const& o) { return *this = *this + o; }
  Scalar& operator-=(Scalar const& o) { return *this = *this - o; }
  Scalar& operator*=(Scalar const& o) { return *this = *this * o; }
  friend bool operator==(Scalar const& a, Scalar const& b) {
    return a.rat == b.rat && a.srt == b.srt;
  }

  // Complex conjugation; sqrt(2) is real so it conjugates componentwise.
  Scalar conj() const { return {rat.conj(), srt.conj()}; }

  Scalar inverse() const {
    // 1/(a + b sqrt2) = (a - b sqrt2)/(a^2 - 2 b^2), the denominator Gaussian.
    GaussRat two{Rational(2)};
    GaussRat den = rat * rat - two * (srt * srt);
    if (den.is_zero()) {
      if (is_zero()) throw std::domain_error("division by zero");
      // a^2 = 2 b^2 with (a, b) != 0 forces a = b = 0 in Q(i); unreachable,
      // since sqrt2 is irrational over Q(i).
      throw std::domain_error("non-invertible scalar");
    }
    GaussRat d = den.inverse();
    return {rat * d, -(srt * d)};
  }
  friend Scalar operator/(Scalar const& a, Scalar const& b) { return a * b.inverse(); }

  std::complex<double> to_complex() const {
    double const r2 = 1.4142135623730950488;
    return {to_double(rat.re) + r2 * to_double(srt.re),
            to_double(rat.im) + r2 * to_double(srt.im)};
  }

  // |z|^2, a real element of Q(sqrt 2) returned as a Scalar.
  Scalar abs2() const { return conj() * (*this); }
};

inline std::ostream& operator<<(std::ostream& os, Scalar const& s) {
  os << "(" << to_string(s.rat.re) << "+" << to_string(s.rat.im) << "i";
  if (!s.srt.is_zero())
    os << "+(" << to_string(s.srt.re) << "+" << to_string(s.srt.im) << "i)r2";
  return os << ")";
}

}  // namespace kahler
