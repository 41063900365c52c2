#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace kahler {

// Half-integer (j, m, n labels), stored as twice its value.
struct HalfInt {
  int twice = 0;

  HalfInt() = default;
  explicit HalfInt(int t) : twice(t) {}
  static HalfInt of_int(int n) { return HalfInt(2 * n); }

  bool is_integer() const { return twice % 2 == 0; }
  Rational value() const { return Rational(twice, 2); }
  double to_double() const { return twice / 2.0; }

  friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
  friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
  friend HalfInt operator-(HalfInt a) { return HalfInt(-a.twice); }
  auto operator<=>(HalfInt const&) const = default;

  std::string str() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }

  // Accepts "2", "1.5", "3/2".
  static HalfInt parse(std::string const& s) {
    if (auto dot = s.find('.'); dot != std::string::npos) {
      std::string frac = s.substr(dot + 1);
      if (frac != "5" && frac != "0")
        throw std::invalid_argument("not a half-integer: " + s);
      int whole = std::stoi(s.substr(0, dot));
      int t = 2 * whole + (frac == "5" ? (whole < 0 || s[0] == '-' ? -1 : 1) : 0);
      return HalfInt(t);
    }
    if (auto slash = s.find('/'); slash != std::string::npos) {
      if (s.substr(slash + 1) != "2")
        throw std::invalid_argument("not a half-integer: " + s);
      return HalfInt(std::stoi(s.substr(0, slash)));
    }
    return HalfInt(2 * std::stoi(s));
  }
};

// j(j+1) as an exact rational.
inline Rational casimir_eigenvalue(HalfInt j) {
  return Rational(j.twice, 2) * Rational(j.twice + 2, 2);
}

}  // namespace kahler
