#include <doctest.h>

#include "rrh/flat/sections.hpp"
#include "rrh/precision/error.hpp"
#include "rrh/precision/special.hpp"
#include "test_support.hpp"

using namespace rrh;
using namespace rrh::flat;
using rrh::testing::close;
using rrh::testing::cplx;
using rrh::testing::jets_close;
using rrh::testing::rational;

namespace {

// Psi(e, z) at a numeric e by direct summation with Log z = log|z| + i pi.
APComplex psi_scalar(const APComplex& N, const APComplex& z, const APComplex& e, Precision p) {
  const APComplex logz = log(z);
  const APComplex power = N + 2;
  APComplex sum(p);
  APComplex prod(1, p);
  for (long l = 0; l < 4000; ++l) {
    if (l > 0) prod = prod * exp(-(power * log(e + l)));
    const APComplex term = exp((e + l) * logz) * prod;
    sum += term;
    if (l > 10 && abs(term) < ldexp(abs(sum), -p.bits() - 8)) break;
  }
  return sum;
}

// Taylor coefficients by the trapezoidal rule on a small circle.
std::vector<APComplex> cauchy_coeffs(const APComplex& N, const APComplex& z, std::size_t K, Precision p) {
  const int M = 96;
  const Real r(mpq_class(1, 16), p);  // well inside the pole at e = -1
  std::vector<APComplex> out(K, APComplex(p));
  const Real two_pi = const_pi(p) * 2;
  for (int s = 0; s < M; ++s) {
    const Real theta = two_pi * s / M;
    const APComplex unit(cos(theta), sin(theta));
    const APComplex value = psi_scalar(N, z, unit * r, p);
    for (std::size_t k = 0; k < K; ++k) {
      out[k] += value * pow(conj(unit), static_cast<long>(k)) / pow(r, static_cast<long>(k));
    }
  }
  for (auto& c : out) c /= M;
  return out;
}

}  // namespace

TEST_CASE("gamma class coefficients") {
  const Precision p(192);
  const APComplex N = rational(5, 1, p);
  const GammaCoeffs g = gamma_class_coeffs(N, 6, p);
  CHECK(g.d[0] == APComplex(1, p));
  CHECK(close(g.c[0], APComplex(1, p), -185));
  const Real gamma_e = euler_gamma(p);
  CHECK(close(g.d[1], APComplex(gamma_e * -7), -180));
  CHECK(close(g.c[1], g.d[1] + i_pi(p) * 2, -180));

  const GammaCoeffs flat = gamma_class_coeffs(APComplex(-2, p), 5, p);
  const EpsJet e2pi = EpsJet::exponential(i_pi(p) * 2, 5);
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(close(flat.d[k], APComplex(k == 0 ? 1 : 0, p), -185));
    CHECK(close(flat.c[k], e2pi[k], -180));
  }

  rrh::testing::Rng rng(2);
  for (int trial = 0; trial < 6; ++trial) {
    const APComplex M = cplx(rng.uniform(-1, 8), rng.uniform(-2, 2), p);
    const GammaCoeffs h = gamma_class_coeffs(M, 4, p);
    CHECK(close(h.c[1] * h.d[0] - h.c[0] * h.d[1], i_pi(p) * 2, -180));
  }
  CHECK_THROWS_AS(gamma_class_coeffs(N, 1, p), DomainError);
}

TEST_CASE("closed-form series") {
  const Precision p(192);
  for (long z : {-1L, -5L, -20L}) {
    const auto data = psi_jet(APComplex(-1, p), APComplex(z, p), 3, p);
    INFO("z=" << z);
    CHECK(close(data.psi[0], APComplex(exp(Real(z, p))), -185));
    // d/dz e^z = e^z
    CHECK(close(data.psi_prime[0], APComplex(exp(Real(z, p))), -180));
  }
  for (const APComplex& z : {rational(1, 2, p), rational(-7, 10, p), cplx(0.3, 0.4, p)}) {
    const auto data = psi_jet(APComplex(-2, p), z, 2, p);
    CHECK(close(data.psi[0], APComplex(1, p) / (1 - z), -180));
  }
  // single coefficient: sum z^l / (l!)^(N+2)
  const APComplex z(-10, p);
  APComplex direct(p);
  Real fact(1, p);
  for (long l = 0; l < 200; ++l) {
    if (l > 0) fact *= l;
    direct += pow(z, l) / pow(fact, 7);
  }
  CHECK(close(psi_jet(APComplex(5, p), z, 1, p).psi[0], direct, -180));
}

TEST_CASE("jet coefficients match a contour-integral oracle") {
  const Precision p(256);
  const Precision hi(512);
  const APComplex N(5, p);
  const APComplex z(-10, p);
  const auto data = psi_jet(N, z, 4, p);
  const auto oracle = cauchy_coeffs(N.with_precision(hi), z.with_precision(hi), 4, hi);
  for (std::size_t k = 0; k < 4; ++k) {
    INFO("k=" << k);
    CHECK(close(data.psi[k], oracle[k].with_precision(p), -200));
  }
  // complex N and z off the axis
  const APComplex M = cplx(2.5, 0.75, p);
  const APComplex w = cplx(-3.0, 1.25, p);
  const auto data2 = psi_jet(M, w, 3, p);
  const auto oracle2 = cauchy_coeffs(M.with_precision(hi), w.with_precision(hi), 3, hi);
  for (std::size_t k = 0; k < 3; ++k) CHECK(close(data2.psi[k], oracle2[k].with_precision(p), -200));
}

TEST_CASE("precision doubling and derivative oracle") {
  const Precision p(256);
  const auto lo = psi_jet(APComplex(5, p), APComplex(-10, p), 4, p);
  const auto hi = psi_jet(APComplex(5, Precision(512)), APComplex(-10, Precision(512)), 4, Precision(512));
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(close(lo.psi[k], hi.psi[k].with_precision(p), -256 + 16));
    CHECK(close(lo.psi_prime[k], hi.psi_prime[k].with_precision(p), -256 + 16));
  }

  // central differences in z at 400 bits
  const Precision q(400);
  const Real h = ldexp(Real(1, q), -80);
  const APComplex z(-7, q);
  const auto mid = psi_jet(APComplex(3, q), z, 4, q);
  const auto up = psi_jet(APComplex(3, q), z + h, 4, q);
  const auto down = psi_jet(APComplex(3, q), z - h, 4, q);
  for (std::size_t k = 0; k < 4; ++k) {
    const APComplex fd = (up.psi[k] - down.psi[k]) / (h * 2);
    CHECK(close(mid.psi_prime[k], fd, -150));
  }
}

TEST_CASE("branches and normalization") {
  const Precision p(192);
  const APComplex N = rational(7, 2, p);
  const APComplex z(-12, p);
  const auto plus = psi_jet(N, z, 5, p, Branch::Plus);
  const auto minus = psi_jet(N, z, 5, p, Branch::Minus);
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(close(minus.psi[k], conj(plus.psi[k]), -180));
    CHECK(close(minus.psi_prime[k], conj(plus.psi_prime[k]), -180));
  }
  // Gamma^(1) normalization multiplies by exp(2 pi i e)
  const auto one = psi_jet(N, z, 5, p, Branch::Plus, Normalization::One);
  const EpsJet expected = jet_mul(plus.psi, EpsJet::exponential(i_pi(p) * 2, 5));
  CHECK(jets_close(one.psi, expected, -175));
  // off the axis the branches coincide
  const APComplex w = cplx(-2.0, 0.5, p);
  CHECK(psi_jet(N, w, 3, p, Branch::Plus).psi == psi_jet(N, w, 3, p, Branch::Minus).psi);
}

TEST_CASE("wronskian and gamma ratios") {
  const Precision p(192);
  const APComplex N(5, p);
  const auto data = psi_jet(N, APComplex(-10, p), 6, p);
  CHECK(wronskian_ratio(data, 1, 0) == APComplex(1, p));
  CHECK(close(wronskian_ratio(data, 0, 1), APComplex(-1, p), -185));
  const GammaCoeffs g = gamma_class_coeffs(N, 6, p);
  CHECK(gamma_rhs(g, 1, 0) == APComplex(1, p));
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(wronskian_ratio(data, i, i).is_zero());
    CHECK(gamma_rhs(g, i, i).is_zero());
    for (std::size_t j = 0; j < 6; ++j) {
      CHECK(close(wronskian_ratio(data, i, j), -wronskian_ratio(data, j, i), -180));
      CHECK(close(gamma_rhs(g, i, j), -gamma_rhs(g, j, i), -180));
    }
  }
  // (c_2 d_0 - c_0 d_2) / (2 pi i) = d_1 + pi i
  CHECK(close(gamma_rhs(g, 2, 0), APComplex(euler_gamma(p) * -7, const_pi(p)), -180));
  CHECK(close(gamma_rhs(N, 2, 0, 6, p), gamma_rhs(g, 2, 0), -185));
  CHECK_THROWS_AS(wronskian_ratio(data, 6, 0), DomainError);
  CHECK_THROWS_AS(gamma_rhs(g, 0, 6), DomainError);
}

TEST_CASE("claim report trend") {
  const Precision p(256);
  const std::vector<APComplex> zs{APComplex(-10, p), APComplex(-20, p), APComplex(-40, p), APComplex(-80, p)};
  const ClaimReport report = claim_report(APComplex(5, p), zs, {3, 3}, 6, p);
  REQUIRE(report.rows.size() == 3);
  CHECK(report.warnings.empty());
  for (const auto& row : report.rows) {
    INFO("(" << row.i << "," << row.j << ")");
    CHECK(row.non_increasing);
    REQUIRE(row.entries.size() == zs.size());
  }
  CHECK(report.rows[0].i == 1);
  CHECK(report.rows[0].final_discrepancy == 0.0);
  const auto& row20 = report.rows[1];
  REQUIRE(row20.i == 2);
  REQUIRE(row20.j == 0);
  CHECK(row20.entries.back().abs_err * 2 <= row20.entries.front().abs_err);

  const ClaimReport small = claim_report(APComplex(1, p), {APComplex(-5, p)}, {2, 2}, 4, p);
  CHECK(!small.warnings.empty());
  REQUIRE(small.rows.size() == 1);
  CHECK_THROWS_AS(claim_report(APComplex(5, p), {APComplex(5, p)}, {3, 3}, 6, p), DomainError);
  CHECK_THROWS_AS(claim_report(APComplex(5, p), {cplx(-5, 1, p)}, {3, 3}, 6, p), DomainError);
  CHECK_THROWS_AS(claim_report(APComplex(5, p), {APComplex(-20, p), APComplex(-10, p)}, {3, 3}, 6, p), DomainError);
}

TEST_CASE("integer ODE residual") {
  const Precision p(192);
  const Real bound = ldexp(Real(1, p), -p.bits() + 16);
  CHECK(integer_ode_residual(1, APComplex(-2, p), 6, p) < bound);
  CHECK(integer_ode_residual(2, APComplex(-1, p), 6, p) < bound);
  CHECK(integer_ode_residual(3, APComplex(-7, p), 6, p) < bound);
  CHECK(integer_ode_residual(1, cplx(1.5, -2.0, p), 5, p, Branch::Minus) < bound);

  // the l = 0 term alone: D^p z^e G(e) = e^p z^e G(e)
  const EpsJet single = jet_mul(EpsJet::exponential(log(APComplex(-2, p)), 6),
                                gamma_power_jet(APComplex(-3, p), 6, p));
  const EpsJet eps_cubed = EpsJet::from_rationals({0, 0, 0, 1, 0, 0}, p);
  CHECK(jets_close(jet_mul(eps_cubed, single), single.shifted(3), -185));

  CHECK_THROWS_AS(integer_ode_residual(0, APComplex(-2, p), 6, p), DomainError);
  CHECK_THROWS_AS(integer_ode_residual(4, APComplex(-2, p), 6, p), DomainError);
}

TEST_CASE("series domain") {
  const Precision p(128);
  CHECK_THROWS_AS(psi_jet(APComplex(1, p), APComplex(p), 3, p), DomainError);
  CHECK_THROWS_AS(psi_jet(APComplex(-3, p), APComplex(-1, p), 3, p), DomainError);
  CHECK_THROWS_AS(psi_jet(APComplex(-2, p), APComplex(-1, p), 3, p), DomainError);
  CHECK(series_guard_bits(APComplex(5, p), APComplex(-80, p)) > 64);
}
