#include <doctest.h>

#include <vector>

#include "rrh/chi/chi.hpp"
#include "rrh/precision/error.hpp"
#include "rrh/precision/special.hpp"
#include "test_support.hpp"

using namespace rrh;
using namespace rrh::chi;
using rrh::testing::close;
using rrh::testing::cplx;
using rrh::testing::rational;

namespace {

// dim S_{(n^k)}(C^m) by the hook-content formula, m = N + k.
mpq_class rectangle_dimension(int k, long N, int n) {
  const long m = N + k;
  mpq_class value = 1;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) {
      const long content = j - i;
      const long hook = (n - 1 - j) + (k - 1 - i) + 1;
      value *= mpq_class(m + content, hook);
    }
  }
  value.canonicalize();
  return value;
}

// Littlewood's product in integer arithmetic.
mpq_class littlewood_integer(int k, unsigned long N, int n) {
  mpz_class top = 1;
  mpz_class bottom = 1;
  for (int i = 0; i < k; ++i) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), N + static_cast<unsigned long>(n + i), static_cast<unsigned long>(n + i));
    top *= b;
    mpz_bin_uiui(b.get_mpz_t(), N + static_cast<unsigned long>(i), static_cast<unsigned long>(i));
    bottom *= b;
  }
  mpq_class q(top, bottom);
  q.canonicalize();
  return q;
}

APComplex lagrange_at(const std::vector<mpq_class>& nodes, const std::vector<mpq_class>& values, const APComplex& x) {
  const Precision p = x.precision();
  APComplex sum(p);
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    APComplex basis(values[a], p);
    for (std::size_t b = 0; b < nodes.size(); ++b) {
      if (a == b) continue;
      basis *= (x - Real(nodes[b], p)) / Real(mpq_class(nodes[a] - nodes[b]), p);
    }
    sum += basis;
  }
  return sum;
}

}  // namespace

TEST_CASE("chi_projective examples") {
  const Precision p(128);
  CHECK(chi_projective(mpq_class(-1, 2), 2) == mpq_class(3, 8));
  CHECK(chi_projective(rational(-1, 2, p), 2) == rational(3, 8, p));
  CHECK(chi_projective(cplx(1.7, -2.2, p), 0) == APComplex(1, p));
  CHECK(chi_projective(mpq_class(3), 2) == 10);
  // negative integers are regular points of the polynomial
  CHECK(chi_projective(mpq_class(-3), 2) == 1);
  CHECK(chi_projective(mpq_class(-3), 4) == 0);
  CHECK_THROWS_AS(chi_projective(mpq_class(1), -1), DomainError);
}

TEST_CASE("chi_grassmannian examples") {
  const Precision p(128);
  CHECK(chi_grassmannian(2, mpq_class(-1, 2), 1) == mpq_class(3, 8));
  CHECK(chi_grassmannian(2, mpq_class(-1, 2), 2) == mpq_class(15, 64));
  CHECK(chi_grassmannian(2, mpq_class(2), 1) == 6);
  CHECK(chi_grassmannian(ChiQuery(2, rational(-1, 2, p), 1)) == rational(3, 8, p));
  CHECK(close(chi_grassmannian(ChiQuery(2, rational(-1, 2, p), 2)), rational(15, 64, p), -125));
  rrh::testing::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = rng.integer(1, 6);
    const APComplex N = cplx(rng.uniform(-5, 5), rng.uniform(-3, 3), p);
    CHECK(close(chi_grassmannian(ChiQuery(k, N, 0)), APComplex(1, p), -120));
    // k = 1 reduces to the projective binomial
    const int n = rng.integer(0, 8);
    CHECK(chi_grassmannian(ChiQuery(1, N, n)) == chi_projective(N, n));
  }
}

TEST_CASE("degenerate Littlewood denominators name the factor") {
  const Precision p(128);
  try {
    (void)chi_grassmannian(ChiQuery(3, APComplex(-1, p), 2));
    FAIL("expected degenerate parameter");
  } catch (const DegenerateParameterError& e) {
    CHECK(e.factor() == 1);
  }
  try {
    (void)chi_grassmannian(3, mpq_class(-2), 2);
    FAIL("expected degenerate parameter");
  } catch (const DegenerateParameterError& e) {
    CHECK(e.factor() == 2);
  }
  CHECK_THROWS_AS(ChiQuery(0, APComplex(1, p), 0), DomainError);
  CHECK_THROWS_AS(ChiQuery(1, APComplex(1, p), -1), DomainError);
}

TEST_CASE("hilbert series") {
  const Precision p(128);
  const auto series = hilbert_series(2, mpq_class(-1, 2), 4);
  std::vector<mpq_class> expected{1, mpq_class(6, 16), mpq_class(60, 256), mpq_class(700, 4096),
                                  mpq_class(8820, 65536)};
  for (auto& q : expected) q.canonicalize();
  CHECK(series == expected);

  const APComplex N = cplx(0.37, -1.25, p);
  const auto proj = hilbert_series(1, N, 2);
  REQUIRE(proj.size() == 3);
  CHECK(proj[0] == APComplex(1, p));
  CHECK(close(proj[1], N + 1, -125));
  CHECK(close(proj[2], (N + 1) * (N + 2) / 2, -124));

  CHECK(hilbert_series(2, mpq_class(3), 1) == std::vector<mpq_class>{1, 10});

  const auto approx = hilbert_series(2, rational(-1, 2, p), 4);
  for (std::size_t n = 0; n < expected.size(); ++n) CHECK(close(approx[n], APComplex(expected[n], p), -124));
}

TEST_CASE("integer consistency with exact Littlewood products and hook-content dimensions") {
  const Precision p(128);
  for (int N = 1; N <= 10; ++N) {
    for (int k = 1; k <= 4; ++k) {
      for (int n = 0; n <= 6; ++n) {
        const mpq_class oracle = littlewood_integer(k, static_cast<unsigned long>(N), n);
        CHECK(oracle == rectangle_dimension(k, N, n));
        CHECK(chi_grassmannian(k, mpq_class(N), n) == oracle);
        CHECK(close(chi_grassmannian(ChiQuery(k, APComplex(N, p), n)), APComplex(oracle, p), -120));
      }
    }
  }
}

TEST_CASE("polynomiality in N via Lagrange reconstruction") {
  const Precision p(192);
  rrh::testing::Rng rng(5);
  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 4; ++n) {
      const int degree = k * n;
      std::vector<mpq_class> nodes;
      std::vector<mpq_class> values;
      for (int N = 1; N <= degree + 1; ++N) {
        nodes.emplace_back(N);
        values.push_back(chi_grassmannian(k, mpq_class(N), n));
      }
      for (int trial = 0; trial < 5; ++trial) {
        const APComplex N = cplx(rng.uniform(-6, 6), rng.uniform(-4, 4), p);
        INFO("k=" << k << " n=" << n);
        const APComplex oracle = lagrange_at(nodes, values, N.with_precision(Precision(400))).with_precision(p);
        CHECK(close(chi_grassmannian(ChiQuery(k, N, n)), oracle, -150));
      }
    }
  }
}

TEST_CASE("gamma-quotient form agrees off the poles") {
  const Precision p(160);
  rrh::testing::Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const APComplex N = cplx(rng.uniform(-6, 6), rng.uniform(-2, 2), p);
    const int n = rng.integer(0, 9);
    const APComplex via_gamma =
        exp(log_gamma(N + (n + 1), p) - log_gamma(APComplex(n + 1, p), p) - log_gamma(N + 1, p));
    CHECK(close(chi_projective(N, n), via_gamma, -140));
  }
}

TEST_CASE("poincare series") {
  const Precision p(128);
  const APComplex quarter = rational(1, 4, p);

  const auto r1 = poincare_check(APComplex(1, p), quarter, poincare_terms_for(APComplex(1, p), quarter, p), p);
  CHECK(r1.passed);
  CHECK(close(r1.rhs, rational(16, 9, p), -124));

  // (3/4)^{-1/2} by direct summation of the binomial series at doubled precision
  const Precision hi(256);
  APComplex coeff(1, hi);
  APComplex direct(1, hi);
  APComplex power(1, hi);
  const APComplex N = rational(-1, 2, hi);
  for (int n = 1; n < 400; ++n) {
    coeff *= N + n;
    coeff /= n;
    power *= rational(1, 4, hi);
    direct += coeff * power;
  }
  const auto r2 = poincare_check(rational(-1, 2, p), quarter, 80, p);
  CHECK(r2.passed);
  CHECK(close(r2.rhs, direct.with_precision(p), -124));
  CHECK(close(r2.rhs, APComplex(Real(1, p) / sqrt(Real(mpq_class(3, 4), p))), -124));

  const auto r3 = poincare_check(APComplex(0, p), quarter, 100, p);
  CHECK(r3.passed);
  CHECK(close(r3.rhs, rational(4, 3, p), -124));

  // too few terms fails against the tail-bound tolerance only when the bound is exceeded
  const auto short_sum = poincare_check(rational(7, 3, p), quarter, 3, p);
  CHECK(short_sum.passed);
  CHECK(short_sum.abs_err > 1e-4);
  CHECK_THROWS_AS(poincare_check(APComplex(1, p), rational(1, 2, p), 10, p), DomainError);
}
