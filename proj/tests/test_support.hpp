#pragma once

#include <cstdint>
#include <vector>

#include "kahler/multivector.hpp"
#include "kahler/scalar.hpp"

namespace kahler::testing {

// Portable deterministic generator (std distributions are not portable).
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  // uniform in [0, n)
  int below(int n) { return (int)(next() % (std::uint64_t)n); }
  Rational small_rational() {
    int num = below(9) - 4;
    int den = 1 + below(3);
    return Rational(num, den);
  }
  Scalar small_scalar() {
    return Scalar(GaussRat(small_rational(), small_rational()));
  }
};

inline Multivector<Scalar> random_multivector(Rng& rng, int dim, int max_terms = 5) {
  Multivector<Scalar> m(dim);
  int terms = 1 + rng.below(max_terms);
  for (int t = 0; t < terms; ++t)
    m.add_term((Blade)rng.below(1 << dim), rng.small_scalar());
  return m;
}

inline Multivector<Scalar> random_vector(Rng& rng, int dim) {
  Multivector<Scalar> m(dim);
  for (int a = 0; a < dim; ++a) m.add_term(1u << a, rng.small_scalar());
  return m;
}

// All diagonal +-1 metrics of the given dimension.
inline std::vector<Metric> all_signatures(int dim) {
  std::vector<Metric> out;
  for (unsigned mask = 0; mask < (1u << dim); ++mask) {
    std::vector<int> signs(dim, +1);
    for (int a = 0; a < dim; ++a)
      if (mask >> a & 1u) signs[a] = -1;
    out.push_back(Metric::diagonal_signs(signs));
  }
  return out;
}

}  // namespace kahler::testing
