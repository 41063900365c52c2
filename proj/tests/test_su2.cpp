#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <complex>

#include "kahler/polyfun.hpp"
#include "kahler/wigner.hpp"
#include "test_support.hpp"

using namespace kahler;
using kahler::testing::Rng;

namespace {

PolyFun u() { return PolyFun::var(U); }
PolyFun v() { return PolyFun::var(V); }
PolyFun ub() { return PolyFun::var(UB); }
PolyFun vb() { return PolyFun::var(VB); }
Scalar I() { return Scalar::i(); }

// All normal-form monomials with total degree <= deg.
std::vector<PolyFun> monomials_up_to(int deg) {
  std::vector<PolyFun> out;
  for (int a = 0; a <= deg; ++a)
    for (int b = 0; a + b <= deg; ++b)
      for (int c = 0; a + c == std::min(a, c) * 2 + std::max(a, c) && a + b + c <= deg; ++c) {
        if (a > 0 && c > 0) continue;
        for (int d = 0; a + b + c + d <= deg; ++d)
          out.push_back(PolyFun::monomial(a, b, c, d));
      }
  return out;
}

using Op = PolyFun (*)(PolyFun const&);

void check_identity_on_monomials(std::vector<std::pair<Op, Op>> const& lhs2,
                                 std::vector<std::pair<Op, Op>> const& rhs2,
                                 std::vector<std::pair<Scalar, Op>> const& rhs1, int deg) {
  for (auto const& f : monomials_up_to(deg)) {
    PolyFun lhs, rhs;
    for (auto [o1, o2] : lhs2) lhs = lhs + o1(o2(f));
    for (auto [o1, o2] : rhs2) rhs = rhs + o1(o2(f));
    for (auto const& [c, o] : rhs1) rhs = rhs + c * o(f);
    CHECK(lhs == rhs);
  }
}

// Independent quadrature oracle for the Haar monomial integral, in Hopf
// coordinates u = cos(t) e^{i al}, v = sin(t) e^{i be}:
// measure 2 cos t sin t dt (trapezoid in the phases, Simpson in t).
double phase_factor(int k) {
  if (k == 0) return 1.0;
  int const N = 64;
  std::complex<double> s{};
  for (int p = 0; p < N; ++p)
    s += std::exp(std::complex<double>(0, k * 2.0 * M_PI * p / N));
  return std::abs(s) / N < 1e-13 ? 0.0 : 1.0;  // trapezoid is exact here
}

double quadrature_integral(int a, int b, int c, int d) {
  if (phase_factor(a - c) == 0.0 || phase_factor(b - d) == 0.0) return 0.0;
  int const N = 4000;  // Simpson panels
  double h = (M_PI / 2) / N;
  auto g = [&](double t) {
    return 2.0 * std::pow(std::cos(t), a + c + 1) * std::pow(std::sin(t), b + d + 1);
  };
  double s = g(0) + g(M_PI / 2);
  for (int k = 1; k < N; ++k) s += (k % 2 ? 4.0 : 2.0) * g(k * h);
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("normal form of the sphere relation", "[su2]") {
  CHECK(ub() * u() == PolyFun::one() - vb() * v());
  CHECK(u() * ub() * v() * vb() == v() * vb() - v() * v() * vb() * vb());

  // Confluence: one-step reductions in arbitrary order agree with the
  // closed-form normalization.
  Rng rng(17);
  for (int it = 0; it < 40; ++it) {
    // random raw exponents, then reduce stepwise
    int a = rng.below(4), b = rng.below(3), c = rng.below(4), d = rng.below(3);
    std::map<std::array<int, 4>, Scalar> raw{{{a, b, c, d}, Scalar(Rational(1))}};
    bool progress = true;
    while (progress) {
      progress = false;
      for (auto it2 = raw.begin(); it2 != raw.end(); ++it2) {
        auto [ea, eb, ec, ed] = it2->first;
        if (ea > 0 && ec > 0) {
          Scalar coeff = it2->second;
          raw.erase(it2);
          // ubar u -> 1 - vbar v, applied once
          auto add = [&](std::array<int, 4> e, Scalar cc) {
            auto [jt, fresh] = raw.try_emplace(e, cc);
            if (!fresh) {
              jt->second += cc;
              if (jt->second.is_zero()) raw.erase(jt);
            }
          };
          add({ea - 1, eb, ec - 1, ed}, coeff);
          add({ea - 1, eb + 1, ec - 1, ed + 1}, -coeff);
          progress = true;
          break;
        }
      }
    }
    PolyFun stepwise;
    for (auto const& [e, cc] : raw)
      stepwise = stepwise + PolyFun::monomial(e[0], e[1], e[2], e[3], cc);
    CHECK(stepwise == PolyFun::monomial(a, b, c, d));
  }
}

TEST_CASE("left derivations on generators", "[su2]") {
  Scalar half_i = Scalar(Rational(1, 2)) * I();
  CHECK(Lz(u()) == -half_i * u());
  CHECK(Lz(PolyFun::one()).is_zero());
  // L_+(vbar) = (i/sqrt2) u
  CHECK(Lplus(vb()) == Scalar::i() * Scalar::inv_sqrt2() * u());
  CHECK(Lminus(u()) == Scalar::i() * Scalar::inv_sqrt2() * vb());
  CHECK(Lplus(u()).is_zero());
  CHECK(Lplus(v()).is_zero());
}

TEST_CASE("right derivation R_z", "[su2]") {
  Scalar half_i = Scalar(Rational(1, 2)) * I();
  CHECK(Rz(u()) == -half_i * u());
  CHECK(Rz(PolyFun::one()).is_zero());
  // R_z D^{1/2}_{1/2,n} = (i/2) D^{1/2}_{1/2,n} for both n
  CHECK(Rz(v()) == half_i * v());
  CHECK(Rz(ub()) == half_i * ub());
}

TEST_CASE("commutation relations hold as operator identities", "[su2]") {
  // [L_-, L_+] = i L_z
  check_identity_on_monomials({{Lminus, Lplus}}, {{Lplus, Lminus}}, {{I(), Lz}}, 6);
  // [L_-, L_z] = -i L_-
  check_identity_on_monomials({{Lminus, Lz}}, {{Lz, Lminus}}, {{-I(), Lminus}}, 6);
  // [L_+, L_z] = i L_+
  check_identity_on_monomials({{Lplus, Lz}}, {{Lz, Lplus}}, {{I(), Lplus}}, 6);
  // [L_x, L_y] = L_z and cyclic
  check_identity_on_monomials({{Lx, Ly}}, {{Ly, Lx}}, {{Scalar(Rational(1)), Lz}}, 5);
  check_identity_on_monomials({{Ly, Lz}}, {{Lz, Ly}}, {{Scalar(Rational(1)), Lx}}, 5);
  check_identity_on_monomials({{Lz, Lx}}, {{Lx, Lz}}, {{Scalar(Rational(1)), Ly}}, 5);
}

TEST_CASE("right derivations commute with left ones", "[su2]") {
  for (Op right : {Rz, Rraise, Rlower})
    for (Op left : {Lx, Ly, Lz, Lminus, Lplus})
      check_identity_on_monomials({{right, left}}, {{left, right}}, {}, 5);
}

TEST_CASE("ladder squares against the Casimir", "[su2]") {
  // 2 L_- L_+ = L^2 - L_z^2 + i L_z ;  2 L_+ L_- = L^2 - L_z^2 - i L_z
  for (auto const& f : monomials_up_to(6)) {
    PolyFun two_mp = Scalar(Rational(2)) * Lminus(Lplus(f));
    PolyFun two_pm = Scalar(Rational(2)) * Lplus(Lminus(f));
    PolyFun base = casimir(f) - Lz(Lz(f));
    CHECK(two_mp == base + I() * Lz(f));
    CHECK(two_pm == base - I() * Lz(f));
  }
}

TEST_CASE("ladders recombine the cartesian derivations", "[su2]") {
  for (auto const& f : monomials_up_to(5)) {
    // L_x = (L_- + L_+)/sqrt2, L_y = i(L_- - L_+)/sqrt2
    PolyFun sum = Lminus(f) + Lplus(f);
    PolyFun diff = Lminus(f) - Lplus(f);
    CHECK(Scalar::sqrt2() * Lx(f) == sum);
    CHECK(Scalar::sqrt2() * Ly(f) == I() * diff);
  }
}

TEST_CASE("casimir eigenvalues", "[su2]") {
  CHECK(casimir(PolyFun::one()).is_zero());
  CHECK(casimir(u()) == -Scalar(Rational(3, 4)) * u());
  CHECK(casimir(u() * u()) == -Scalar(Rational(2)) * (u() * u()));
}

TEST_CASE("spin one-half Wigner matrix", "[su2]") {
  HalfInt h(1);  // j = 1/2
  CHECK(wigner({h, HalfInt(-1), HalfInt(-1)}) == u());
  CHECK(wigner({h, HalfInt(-1), HalfInt(1)}) == vb());
  CHECK(wigner({h, HalfInt(1), HalfInt(-1)}) == v());
  CHECK(wigner({h, HalfInt(1), HalfInt(1)}) == ub());
}

TEST_CASE("Wigner corner elements", "[su2]") {
  // u^{2j} at (m,n) = (-j,-j); the (j, j) corner is ubar^{2j}.
  CHECK(wigner({HalfInt(2), HalfInt(-2), HalfInt(-2)}) == u() * u());
  CHECK(wigner({HalfInt(2), HalfInt(2), HalfInt(2)}) == ub() * ub());
  CHECK(wigner({HalfInt(2), HalfInt(2), HalfInt(-2)}) == v() * v());
  CHECK(wigner({HalfInt(2), HalfInt(-2), HalfInt(2)}) == vb() * vb());
  CHECK_THROWS_AS(wigner({HalfInt(2), HalfInt(1), HalfInt(0)}), std::invalid_argument);
  CHECK_THROWS_AS(wigner({HalfInt(1), HalfInt(1), HalfInt(3)}), std::invalid_argument);
}

TEST_CASE("column-extremal Wigner functions are L_+ null", "[su2]") {
  for (int tj : {1, 2, 3, 4})
    for (int tm = -tj; tm <= tj; tm += 2)
      CHECK(Lplus(wigner({HalfInt(tj), HalfInt(tm), HalfInt(-tj)})).is_zero());
}

TEST_CASE("Wigner eigenrelations up to j = 4", "[su2]") {
  for (int tj = 0; tj <= 8; ++tj) {
    Rational jj = casimir_eigenvalue(HalfInt(tj));
    for (int tm = -tj; tm <= tj; tm += 2)
      for (int tn = -tj; tn <= tj; tn += 2) {
        PolyFun d = wigner({HalfInt(tj), HalfInt(tm), HalfInt(tn)});
        REQUIRE_FALSE(d.is_zero());
        CHECK(casimir(d) == -Scalar(jj) * d);
        CHECK(Lz(d) == Scalar(Rational(tn, 2)) * I() * d);
        CHECK(Rz(d) == Scalar(Rational(tm, 2)) * I() * d);
      }
  }
}

TEST_CASE("Peter-Weyl orthogonality and dimension", "[su2]") {
  for (int tj = 0; tj <= 6; ++tj) {
    auto b = wj_basis(HalfInt(tj));
    CHECK(b.dim() == (tj + 1) * (tj + 1));
    for (int p = 0; p < b.dim(); ++p) {
      CHECK(b.norms[p] > 0);
      for (int q = p + 1; q < b.dim(); ++q)
        CHECK(pw_inner(b.funs[p], b.funs[q]).is_zero());
    }
  }
  // across different j
  CHECK(pw_inner(wigner({HalfInt(2), HalfInt(0), HalfInt(0)}),
                 wigner({HalfInt(4), HalfInt(0), HalfInt(0)}))
            .is_zero());
  CHECK(pw_inner(PolyFun::one(), wigner({HalfInt(2), HalfInt(0), HalfInt(0)})).is_zero());
}

TEST_CASE("monomial Haar integral against the quadrature oracle", "[su2]") {
  CHECK(peter_weyl_integral(PolyFun::one()) == Scalar(Rational(1)));
  // frozen from the quadrature oracle below: int u ubar = 1/2
  CHECK(quadrature_integral(1, 0, 1, 0) == Catch::Approx(0.5).margin(1e-10));
  CHECK(peter_weyl_integral(u() * ub()) == Scalar(Rational(1, 2)));

  for (int a = 0; a <= 8; ++a)
    for (int b = 0; a + b <= 8; ++b)
      for (int c = 0; a + b + c <= 8; ++c)
        for (int d = 0; a + b + c + d <= 8; ++d) {
          double exact = to_double(monomial_haar_integral(a, b, c, d));
          CHECK(quadrature_integral(a, b, c, d) == Catch::Approx(exact).margin(1e-10));
        }
}

TEST_CASE("reduced and raw integration agree", "[su2]") {
  // the normal-form path must reproduce the raw monomial formula
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 3; ++b) {
      PolyFun f = PolyFun::monomial(a, b, a, b);
      Scalar lhs = peter_weyl_integral(f);
      CHECK(lhs == Scalar(monomial_haar_integral(a, b, a, b)));
    }
}

TEST_CASE("left derivations are antisymmetric under the Haar pairing", "[su2]") {
  Rng rng(23);
  auto random_poly = [&](int terms) {
    PolyFun f;
    for (int t = 0; t < terms; ++t) {
      int a = rng.below(3), b = rng.below(3), c = rng.below(3), d = rng.below(3);
      if (a > 0 && c > 0) (rng.below(2) ? a : c) = 0;
      f = f + PolyFun::monomial(a, b, c, d, rng.small_scalar());
    }
    return f;
  };
  for (int it = 0; it < 25; ++it) {
    PolyFun f = random_poly(4), g = random_poly(4);
    for (Op op : {Lx, Ly, Lz})
      CHECK((pw_inner(op(f), g) + pw_inner(f, op(g))).is_zero());
    // ladders: <L_- f | g> = -<f | L_+ g>
    CHECK((pw_inner(Lminus(f), g) + pw_inner(f, Lplus(g))).is_zero());
  }
}

TEST_CASE("W_j coordinates round-trip", "[su2]") {
  auto b = wj_basis(HalfInt(3));
  PolyFun f = Scalar(Rational(2, 3)) * b.funs[1] - I() * b.funs[5] +
              Scalar::sqrt2() * b.funs[8];
  auto x = wj_coords(b, f);
  CHECK(x[1] == Scalar(Rational(2, 3)));
  CHECK(x[5] == -I());
  CHECK(x[8] == Scalar::sqrt2());
  CHECK_THROWS_AS(wj_coords(b, u()), std::domain_error);
}
