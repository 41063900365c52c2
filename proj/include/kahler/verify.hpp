#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dirac_s2.hpp"
#include "dirac_s3.hpp"
#include "local_chart.hpp"

namespace kahler::verification {

struct Options {
  std::uint64_t seed = 1;
  bool fault_gamma_sign = false;  // deliberate mutation for the regression test
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int below(int n) { return (int)(next() % (std::uint64_t)n); }
  Rational small_rational() { return Rational(below(9) - 4, 1 + below(3)); }
  Scalar small_scalar() { return Scalar(GaussRat(small_rational(), small_rational())); }
};

using MV = Multivector<Scalar>;

inline MV random_multivector(Rng& rng, int dim, int terms = 4) {
  MV m(dim);
  for (int t = 0; t < terms; ++t)
    m.add_term((Blade)rng.below(1 << dim), rng.small_scalar());
  return m;
}

inline MV random_vector(Rng& rng, int dim) {
  MV m(dim);
  for (int a = 0; a < dim; ++a) m.add_term(1u << a, rng.small_scalar());
  return m;
}

inline std::vector<Metric> signatures(int dim) {
  std::vector<Metric> out;
  for (unsigned mask = 0; mask < (1u << dim); ++mask) {
    std::vector<int> signs(dim, +1);
    for (int a = 0; a < dim; ++a)
      if (mask >> a & 1u) signs[a] = -1;
    out.push_back(Metric::diagonal_signs(signs));
  }
  return out;
}

inline PolyFun random_wj(Rng& rng, int tj) {
  PolyFun f;
  for (int t = 0; t < 3; ++t) {
    int tm = -tj + 2 * rng.below(tj + 1), tn = -tj + 2 * rng.below(tj + 1);
    f = f + rng.small_scalar() * wigner({HalfInt(tj), HalfInt(tm), HalfInt(tn)});
  }
  return f;
}

}  // namespace detail

// --- Kahler-Atiyah kernel suites -------------------------------------------------

inline bool suite_clifford_anticommutator(detail::Rng& rng) {
  using detail::MV;
  for (int dim = 2; dim <= 5; ++dim)
    for (auto const& g : detail::signatures(dim))
      for (int it = 0; it < 4; ++it) {
        MV a = detail::random_vector(rng, dim), b = detail::random_vector(rng, dim);
        Scalar gab{};
        for (int p = 0; p < dim; ++p)
          for (int q = 0; q < dim; ++q)
            gab += Scalar(g.at(p, q)) * a.coeff(1u << p) * b.coeff(1u << q);
        if (!(clifford(a, b, g) + clifford(b, a, g) ==
              MV::scalar(dim, Scalar(Rational(2)) * gab)))
          return false;
      }
  return true;
}

inline bool suite_clifford_associativity(detail::Rng& rng) {
  using detail::MV;
  for (int dim = 2; dim <= 5; ++dim)
    for (auto const& g : detail::signatures(dim)) {
      MV a = detail::random_multivector(rng, dim, 3);
      MV b = detail::random_multivector(rng, dim, 3);
      MV c = detail::random_multivector(rng, dim, 3);
      if (!(clifford(clifford(a, b, g), c, g) == clifford(a, clifford(b, c, g), g)))
        return false;
    }
  return true;
}

inline bool suite_clifford_vs_phi(detail::Rng& rng, int pairs_per_case = 200) {
  using detail::MV;
  for (int dim = 2; dim <= 5; ++dim)
    for (auto const& g : detail::signatures(dim))
      for (int it = 0; it < pairs_per_case; ++it) {
        MV a = detail::random_multivector(rng, dim);
        MV b = detail::random_multivector(rng, dim);
        if (!(clifford(a, b, g) == phi_apply(a, b, g))) return false;
      }
  return true;
}

inline bool suite_grade_bounds(detail::Rng& rng) {
  using detail::MV;
  Metric g = Metric::euclidean(4);
  for (int it = 0; it < 20; ++it) {
    MV a = detail::random_multivector(rng, 4), b = detail::random_multivector(rng, 4);
    for (int j = 0; j <= 4; ++j)
      for (int k = 0; k <= 4; ++k) {
        for (int gr : clifford(a.grade_part(j), b.grade_part(k), g).grades())
          if (gr < std::abs(j - k) || gr > j + k || (gr - std::abs(j - k)) % 2)
            return false;
        for (int gr : wedge(a.grade_part(j), b.grade_part(k)).grades())
          if (gr != j + k) return false;
      }
  }
  return true;
}

inline bool suite_hodge_sign_rule() {
  using detail::MV;
  for (int dim = 1; dim <= 5; ++dim)
    for (auto const& g : detail::signatures(dim))
      for (Blade b = 0; b < (1u << dim); ++b) {
        MV blade = MV::basis_blade(dim, b);
        int k = grade_of(b);
        int sign = ((k * (dim - k)) % 2 == 0 ? 1 : -1) * g.signature();
        MV expect = sign > 0 ? blade : -blade;
        if (!(hodge_star(hodge_star(blade, g), g) == expect)) return false;
      }
  return true;
}

inline bool suite_contraction_anticommutes(detail::Rng& rng) {
  for (auto const& g : detail::signatures(4))
    for (int it = 0; it < 10; ++it) {
      auto m = detail::random_multivector(rng, 4);
      int v = rng.below(4), w = rng.below(4);
      auto vw = contract_basis(v, contract_basis(w, m, g), g);
      auto wv = contract_basis(w, contract_basis(v, m, g), g);
      if (!(vw == -wv)) return false;
    }
  return true;
}

inline bool suite_ext_product_positive(detail::Rng& rng) {
  using detail::MV;
  Metric g = Metric::euclidean(4);
  for (int it = 0; it < 25; ++it) {
    MV m(4);
    for (int t = 0; t < 5; ++t)
      m.add_term((Blade)rng.below(16), Scalar(rng.small_rational()));
    Scalar n = scalar_product_ext(m, m, g);
    if (!(n.rat.im == 0) || !n.srt.is_zero()) return false;
    if (!m.is_zero() && !(n.rat.re > 0)) return false;
  }
  return true;
}

// --- spin module suites -----------------------------------------------------------

inline bool suite_gamma_anticommutation(bool fault) {
  using detail::MV;
  // The parallel sphere module and the chart module.
  struct Case {
    Metric g;
    MV p;
  };
  MV tau3 = MV::basis_blade(3, 0b111u);
  MV p3 = Scalar(Rational(1, 2)) * (MV::unit(3) - Scalar::i() * tau3);
  std::vector<Case> cases;
  cases.push_back({Metric::euclidean(3), p3});
  cases.push_back({Metric::euclidean(2), chart_projector_at(-1, Scalar{})});

  for (auto const& [g, p] : cases) {
    auto mod = ideal_basis(p, g);
    auto gam = gamma_rep(mod, g);
    if (fault) {
      // deliberate sign flip of one matrix entry
      gam[0].at(0, 1) = -gam[0].at(0, 1);
    }
    int s = mod.rank;
    for (int a = 0; a < (int)gam.size(); ++a)
      for (int b = 0; b < (int)gam.size(); ++b) {
        ExactMat<Scalar> anti = gam[a] * gam[b] + gam[b] * gam[a];
        ExactMat<Scalar> want = a == b
                                    ? Scalar(Rational(2) * g.inv(a, a)) *
                                          ExactMat<Scalar>::identity(s)
                                    : ExactMat<Scalar>(s, s);
        if (!(anti == want)) return false;
      }
  }
  return true;
}

inline bool suite_s3_module_relations() {
  using detail::MV;
  Metric g = Metric::euclidean(3);
  MV tau3 = MV::basis_blade(3, 0b111u);
  MV p3 = Scalar(Rational(1, 2)) * (MV::unit(3) - Scalar::i() * tau3);
  auto mod = ideal_basis(p3, g);
  if (mod.rank != 4) return false;
  // theta^a v w_b = i eps_{sab}... w_s + delta w_0 and theta^a v w_0 = w_a
  for (int a = 0; a < 3; ++a) {
    if (!(clifford(MV::basis_vector(3, a), mod.basis[0], g) == mod.basis[a + 1]))
      return false;
    for (int b = 0; b < 3; ++b) {
      MV expect(3);
      if (a == b) expect = expect + mod.basis[0];
      for (int s = 0; s < 3; ++s)
        if (int eps = eps_lc(s, a, b))
          expect = expect + (Scalar(Rational(eps)) * Scalar::i()) * mod.basis[s + 1];
      if (!(clifford(MV::basis_vector(3, a), mod.basis[b + 1], g) == expect))
        return false;
    }
  }
  return true;
}

inline bool suite_adjoint_isometry(detail::Rng& rng) {
  using detail::MV;
  for (int dim = 2; dim <= 4; ++dim)
    for (auto const& g : detail::signatures(dim)) {
      int found = 0;
      for (int tries = 0; tries < 300 && found < 50; ++tries) {
        MV v = detail::random_vector(rng, dim);
        Scalar vv = scalar_product_ext(v, v, g);
        if (vv.is_zero()) continue;
        ++found;
        MV x = detail::random_vector(rng, dim), y = detail::random_vector(rng, dim);
        MV ax = adjoint_reflect(v, x, g), ay = adjoint_reflect(v, y, g);
        if (!(scalar_product_ext(ax, ay, g) == scalar_product_ext(x, y, g)))
          return false;
        MV direct =
            x - (Scalar(Rational(2)) * scalar_product_ext(x, v, g) * vv.inverse()) * v;
        if (!(ax == direct)) return false;
      }
    }
  return true;
}

inline bool suite_conjugation_preserves_rank(detail::Rng& rng) {
  using detail::MV;
  Metric g = Metric::euclidean(3);
  MV tau3 = MV::basis_blade(3, 0b111u);
  MV p = Scalar(Rational(1, 2)) * (MV::unit(3) - Scalar::i() * tau3);
  for (int it = 0; it < 6; ++it) {
    std::vector<MV> fs;
    int count = 1 + rng.below(3);
    for (int k = 0; k < count; ++k) {
      int a = rng.below(3);
      fs.push_back(rng.below(2) ? MV::basis_vector(3, a) : -MV::basis_vector(3, a));
    }
    fs.push_back(Scalar(Rational(3, 5)) * MV::basis_vector(3, rng.below(3)) +
                 Scalar(Rational(4, 5)) * MV::basis_vector(3, (rng.below(2) + 1) % 3));
    // make sure the last one is unit: components on distinct axes
    if (fs.back().terms().size() != 2) fs.pop_back();
    auto eps = PinElement<Scalar>::make(fs, g);
    MV q = idempotent_conjugate(p, eps, g);
    if (!is_idempotent(q, g)) return false;
    if (ideal_basis(q, g).rank != 4) return false;
  }
  return true;
}

inline bool suite_parallel_rank2_nonexistence() {
  using detail::MV;
  Metric g = Metric::euclidean(3);
  // nabla_a on grades 1 and 2 has trivial kernel; the surviving family
  // (1 + c tau)/2 is idempotent only for c = +-i with rank four.
  auto nabla = [&](int a, MV const& m) {
    MV out(3);
    for (auto const& [blade, c] : m.terms())
      for (int b = 0; b < 3; ++b) {
        if (!(blade >> b & 1u)) continue;
        for (int s = 0; s < 3; ++s) {
          if (int eps = eps_lc(s, a, b)) {
            Blade lower = blade & ((1u << b) - 1u);
            Blade upper = blade & ~((2u << b) - 1u);
            MV rep = wedge(wedge(MV::basis_blade(3, lower), MV::basis_vector(3, s)),
                           MV::basis_blade(3, upper));
            out = out + (Scalar(Rational(eps, 2)) * c) * rep;
          }
        }
      }
    return out;
  };
  ExactMat<Scalar> stack(18, 6);
  std::vector<Blade> basis = {0b001u, 0b010u, 0b100u, 0b011u, 0b101u, 0b110u};
  for (int col = 0; col < 6; ++col)
    for (int a = 0; a < 3; ++a) {
      MV img = nabla(a, MV::basis_blade(3, basis[col]));
      for (int r = 0; r < 6; ++r) stack.at(a * 6 + r, col) = img.coeff(basis[r]);
    }
  if (rref(stack).size() != 6) return false;
  for (int s : {+1, -1}) {
    MV p = Scalar(Rational(1, 2)) *
           (MV::unit(3) + Scalar(Rational(s)) * Scalar::i() * MV::basis_blade(3, 0b111u));
    if (!is_idempotent(p, g)) return false;
    if (ideal_basis(p, g).rank != 4) return false;
  }
  return true;
}

// --- harmonic analysis suites -------------------------------------------------------

inline bool suite_normal_form_confluence(detail::Rng& rng) {
  for (int it = 0; it < 20; ++it) {
    int a = rng.below(4), b = rng.below(3), c = rng.below(4), d = rng.below(3);
    // closed form against a second reduction order: reduce (a,c) one step via
    // a product of already-normal factors
    PolyFun lhs = PolyFun::monomial(a, b, 0, 0) * PolyFun::monomial(0, 0, c, d);
    PolyFun rhs = PolyFun::monomial(0, 0, c, d) * PolyFun::monomial(a, b, 0, 0);
    if (!(lhs == rhs)) return false;
    if (!(lhs == PolyFun::monomial(a, b, c, d))) return false;
  }
  return true;
}

inline bool suite_ladder_commutators() {
  Scalar i = Scalar::i();
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b)
      for (int c = 0; a + b + c <= 4 && (a == 0 || c == 0); ++c)
        for (int d = 0; a + b + c + d <= 4; ++d) {
          PolyFun f = PolyFun::monomial(a, b, c, d);
          if (!(Lminus(Lplus(f)) - Lplus(Lminus(f)) == i * Lz(f))) return false;
          if (!(Lminus(Lz(f)) - Lz(Lminus(f)) == -(i)*Lminus(f))) return false;
          if (!(Lplus(Lz(f)) - Lz(Lplus(f)) == i * Lplus(f))) return false;
          if (!(Lx(Ly(f)) - Ly(Lx(f)) == Lz(f))) return false;
          if (!(Rz(Lminus(f)) == Lminus(Rz(f)))) return false;
        }
  return true;
}

inline bool suite_icomsu() {
  Scalar i = Scalar::i();
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b)
      for (int c = 0; a + b + c <= 4 && (a == 0 || c == 0); ++c)
        for (int d = 0; a + b + c + d <= 4; ++d) {
          PolyFun f = PolyFun::monomial(a, b, c, d);
          PolyFun base = casimir(f) - Lz(Lz(f));
          if (!(Scalar(Rational(2)) * Lminus(Lplus(f)) == base + i * Lz(f)))
            return false;
          if (!(Scalar(Rational(2)) * Lplus(Lminus(f)) == base - i * Lz(f)))
            return false;
        }
  return true;
}

inline bool suite_wigner_eigenrelations() {
  for (int tj = 0; tj <= 8; ++tj) {
    Rational jj = casimir_eigenvalue(HalfInt(tj));
    for (int tm = -tj; tm <= tj; tm += 2)
      for (int tn = -tj; tn <= tj; tn += 2) {
        PolyFun d = wigner({HalfInt(tj), HalfInt(tm), HalfInt(tn)});
        if (d.is_zero()) return false;
        if (!(casimir(d) == -Scalar(jj) * d)) return false;
        if (!(Lz(d) == Scalar(Rational(tn, 2)) * Scalar::i() * d)) return false;
        if (!(Rz(d) == Scalar(Rational(tm, 2)) * Scalar::i() * d)) return false;
      }
  }
  return true;
}

inline bool suite_wigner_orthogonality() {
  for (int tj = 0; tj <= 6; ++tj) {
    auto b = wj_basis(HalfInt(tj));
    if (b.dim() != (tj + 1) * (tj + 1)) return false;
    for (int p = 0; p < b.dim(); ++p) {
      if (!(b.norms[p] > 0)) return false;
      for (int q = p + 1; q < b.dim(); ++q)
        if (!pw_inner(b.funs[p], b.funs[q]).is_zero()) return false;
    }
  }
  return true;
}

inline bool suite_derivation_antisymmetry(detail::Rng& rng) {
  for (int it = 0; it < 20; ++it) {
    PolyFun f = detail::random_wj(rng, 2), g = detail::random_wj(rng, 2);
    for (int a = 0; a < 3; ++a)
      if (!(pw_inner(left_deriv(a, f), g) + pw_inner(f, left_deriv(a, g))).is_zero())
        return false;
  }
  return true;
}

// --- sphere operator suites ----------------------------------------------------------

inline bool suite_s3_blocks(HalfInt max_j) {
  for (int tj = 0; tj <= max_j.twice; ++tj) {
    HalfInt j(tj);
    BlockOperator spin = spin_dirac_block(j);
    if (!spin.anti_hermitian_exact()) return false;
    if (!eigensolve_block(spin, spin_spectrum_closed_form(j)).all_matched)
      return false;
    BlockOperator hdr = hdr_dirac_block(j);
    if (!hdr.anti_hermitian_exact()) return false;
    if (!eigensolve_block(hdr, hdr_spectrum_closed_form(j)).all_matched)
      return false;
    BlockOperator gl = ideal_spin_block(j);
    if (!gl.anti_hermitian_exact()) return false;
    if (!eigensolve_block(gl, ideal_spin_spectrum_closed_form(j)).all_matched)
      return false;
  }
  return true;
}

inline bool suite_s3_eigenspinors(HalfInt max_j) {
  for (int tj = 0; tj <= max_j.twice; ++tj) {
    HalfInt j(tj);
    auto spin = spin_eigenspinor_basis(j);
    if ((int)spin.size() != 2 * (tj + 1) * (tj + 1)) return false;
    for (auto const& v : spin)
      if (!check_exact_eigvec(sigma_l_apply, v)) return false;
    auto hdr = hdr_eigenspinor_basis(j);
    if ((int)hdr.size() != 4 * (tj + 1) * (tj + 1)) return false;
    for (auto const& v : hdr)
      if (!check_exact_eigvec(hdr_apply_ladder, v)) return false;
    auto gl = ideal_spin_eigenspinor_basis(j);
    if ((int)gl.size() != 4 * (tj + 1) * (tj + 1)) return false;
    for (auto const& v : gl)
      if (!check_exact_eigvec(ideal_gamma_l_ladder, v)) return false;
  }
  return true;
}

inline bool suite_laplacians(HalfInt max_j) {
  std::vector<Rational> w4(4, Rational(2));
  for (int tj = 0; tj <= max_j.twice; ++tj) {
    HalfInt j(tj);
    BlockOperator b = spin_dirac_block(j);
    ExactMat<Scalar> expect =
        Scalar(-casimir_eigenvalue(j)) * ExactMat<Scalar>::identity(b.dim()) +
        Scalar::i() * b.mat;
    if (!(b.mat * b.mat == expect)) return false;

    BlockOperator hdr = hdr_dirac_block(j);
    BlockOperator lap = assemble_block(
        "lap", j, SpinorBasis::IPLadder,
        [](SpinorField const& x) {
          return cart_to_ip(hdr_laplacian_cart(ip_to_cart(x)));
        },
        w4);
    if (!(hdr.mat * hdr.mat == lap.mat)) return false;

    BlockOperator gl = ideal_spin_block(j);
    ExactMat<Scalar> slashed =
        gl.mat -
        (Scalar(Rational(3, 4)) * Scalar::i()) * ExactMat<Scalar>::identity(gl.dim());
    BlockOperator slap = assemble_block(
        "slap", j, SpinorBasis::IPLadder,
        [](SpinorField const& x) {
          return cart_to_ip(ideal_spin_laplacian_cart(ip_to_cart(x)));
        },
        w4);
    if (!(slashed * slashed == slap.mat)) return false;
  }
  return true;
}

inline bool suite_connections(detail::Rng& rng) {
  auto A_hdr = hdr_connection_form();
  auto A_spin = spin_connection_form();
  bool differ = false;
  for (int k = 0; k < 3; ++k) differ = differ || !(A_hdr[k] == A_spin[k]);
  if (!differ) return false;
  for (int it = 0; it < 3; ++it) {
    SpinorField x = SpinorField::zero(SpinorBasis::IPLadder);
    for (int k = 0; k < 4; ++k) x.c[k] = detail::random_wj(rng, 1);
    SpinorField cart = ip_to_cart(x);
    if (!(covariant_dirac_apply(A_hdr, cart) == hdr_apply_cart(cart))) return false;
    SpinorField slashed =
        ideal_gamma_l_cart(cart) - (Scalar(Rational(3, 4)) * Scalar::i()) * cart;
    if (!(covariant_dirac_apply(A_spin, cart) == slashed)) return false;
  }
  return true;
}

inline bool suite_killing() {
  Scalar alpha = Scalar(Rational(1, 2)) * Scalar::i();
  if (!killing_check(killing_phi(), alpha)) return false;
  if (!killing_check(killing_phi_prime(), alpha)) return false;
  SpinorField phi = killing_phi();
  if (!(sigma_l_apply(phi) == (Scalar(Rational(3, 2)) * Scalar::i()) * phi))
    return false;
  return true;
}

// --- two-sphere suites ----------------------------------------------------------------

inline bool suite_s2_operator(detail::Rng& rng) {
  if (!s2_projector_check()) return false;
  for (int jn = 0; jn <= 2; ++jn) {
    HalfInt j = HalfInt::of_int(jn);
    BlockOperator b = dirac_s2_block(j);
    if (!b.anti_hermitian_exact()) return false;
    if (!eigensolve_block(b, s2_spectrum_closed_form(j)).all_matched) return false;
    for (auto const& v : s2_eigenspinor_families(j))
      if (!check_exact_eigvec(dirac_s2_apply_vec, v)) return false;
  }
  // equivariance preservation on random sections
  for (int it = 0; it < 4; ++it) {
    S2Spinor s;
    s.psi0 = detail::random_wj(rng, 2);
    // project psi0 onto ker L_z: keep only n = 0 content
    PolyFun ker;
    auto wj = wj_basis(HalfInt(2));
    auto coords = wj_coords(wj, s.psi0);
    for (int k = 0; k < wj.dim(); ++k)
      if (wj.labels[k].n.twice == 0) ker = ker + coords[k] * wj.funs[k];
    s.psi0 = ker;
    s.alpha = module_decompose(Lminus(wigner({HalfInt(2), HalfInt(0), HalfInt(0)})), +1);
    if (!s.equivariant()) return false;
    if (!dirac_s2_apply(s).equivariant()) return false;
  }
  // star rules square correctly
  EquivariantForm e{PolyFun::one(), {}, {}, PolyFun::constant(Scalar(Rational(2)))};
  if (!(hodge_s2(hodge_s2(e)) == e)) return false;
  // witness of the non-restriction
  if (nonrestriction_witness(PolyFun::one()).is_zero()) return false;
  return true;
}

inline bool suite_local_chart() {
  Metric const& g = chart_metric();
  for (int sign : {+1, -1}) {
    auto p = chart_projector(sign);
    if (!(clifford(p, p, g) == p)) return false;
    auto m0 = ideal_basis(chart_projector_at(sign, Scalar{}), g);
    if (m0.rank != 2) return false;
    for (int b : {1, 2})
      if (!(ideal_basis(chart_projector_at(sign, Scalar(Rational(b))), g).basis ==
            m0.basis))
        return false;
  }
  ChartSection s1{LocalFun::from_rational(Rational(1)), LocalFun{}};
  ChartSection s2{LocalFun{}, LocalFun::from_rational(Rational(1))};
  if (!chart_kahler_dirac(chart_section_form(s1)).is_zero()) return false;
  auto out2 = chart_form_section(chart_kahler_dirac(chart_section_form(s2)));
  if (!(out2.f1 == LocalFun{TrigRat::cot()}) || !out2.f2.is_zero()) return false;
  for (int k : {-1, 0, 1}) {
    ChartSection s{LocalFun::mode(k, TrigRat::sin_pow(1)),
                   LocalFun::mode(k, TrigRat::cos())};
    auto geo = chart_form_section(chart_kahler_dirac(chart_section_form(s)));
    if (!(geo == chart_kahler_matrix_apply(s))) return false;
    if (!(chart_spin_dirac_apply(s) == chart_spin_matrix_apply(s))) return false;
  }
  return true;
}

// --- the runner -----------------------------------------------------------------------

inline std::vector<SuiteResult> run_all(Options const& opt) {
  std::vector<SuiteResult> results;
  auto run = [&](std::string name, std::function<bool()> fn) {
    SuiteResult r;
    r.name = std::move(name);
    try {
      r.pass = fn();
    } catch (std::exception const& e) {
      r.pass = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  };

  detail::Rng rng(opt.seed);
  run("clifford_anticommutator", [&] { return suite_clifford_anticommutator(rng); });
  run("clifford_associativity", [&] { return suite_clifford_associativity(rng); });
  run("clifford_vs_phi_map", [&] { return suite_clifford_vs_phi(rng, 200); });
  run("grade_bounds", [&] { return suite_grade_bounds(rng); });
  run("hodge_sign_rule", [&] { return suite_hodge_sign_rule(); });
  run("contraction_anticommutes", [&] { return suite_contraction_anticommutes(rng); });
  run("ext_scalar_product_positive", [&] { return suite_ext_product_positive(rng); });
  run("gamma_anticommutation",
      [&] { return suite_gamma_anticommutation(opt.fault_gamma_sign); });
  run("s3_module_structure", [&] { return suite_s3_module_relations(); });
  run("adjoint_isometry", [&] { return suite_adjoint_isometry(rng); });
  run("conjugation_preserves_rank", [&] { return suite_conjugation_preserves_rank(rng); });
  run("parallel_rank2_nonexistence", [&] { return suite_parallel_rank2_nonexistence(); });
  run("normal_form_confluence", [&] { return suite_normal_form_confluence(rng); });
  run("ladder_commutators", [&] { return suite_ladder_commutators(); });
  run("casimir_ladder_identities", [&] { return suite_icomsu(); });
  run("wigner_eigenrelations", [&] { return suite_wigner_eigenrelations(); });
  run("wigner_orthogonality", [&] { return suite_wigner_orthogonality(); });
  run("derivation_antisymmetry", [&] { return suite_derivation_antisymmetry(rng); });
  run("s3_spectral_blocks", [&] { return suite_s3_blocks(HalfInt(4)); });
  run("s3_closed_form_eigenspinors", [&] { return suite_s3_eigenspinors(HalfInt(3)); });
  run("laplacian_identities", [&] { return suite_laplacians(HalfInt(2)); });
  run("connection_forms", [&] { return suite_connections(rng); });
  run("killing_spinors", [&] { return suite_killing(); });
  run("s2_operator", [&] { return suite_s2_operator(rng); });
  run("local_chart", [&] { return suite_local_chart(); });
  return results;
}

}  // namespace kahler::verification
