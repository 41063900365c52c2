#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace kahler {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(Rational const& q) { return q.template convert_to<double>(); }

// Exact square root of a non-negative rational, when it is a perfect square.
inline std::optional<Rational> exact_sqrt(Rational const& q) {
  if (q < 0) return std::nullopt;
  BigInt n = numerator(q);
  BigInt d = denominator(q);
  BigInt rn = boost::multiprecision::sqrt(n);
  BigInt rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rational(rn, rd);
}

inline std::string to_string(Rational const& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

// Parses "p", "-p", "p/q".
inline Rational parse_rational(std::string const& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (std::exception const&) {
    throw std::invalid_argument("not a rational: " + s);
  }
}

}  // namespace kahler
