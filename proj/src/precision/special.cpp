#include "rrh/precision/special.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>

#include "rrh/precision/error.hpp"

namespace rrh {

namespace {

// Double-precision log Gamma built from individual principal logs. Only used
// to pick the branch (multiple of 2 pi i) of the high-precision result.
std::complex<double> log_gamma_estimate(std::complex<double> z) {
  std::complex<double> shift_sum{0.0, 0.0};
  while (z.real() < 15.0) {
    shift_sum += std::log(std::complex<double>(z.real(), z.imag() == 0.0 ? 0.0 : z.imag()));
    z += 1.0;
  }
  const std::complex<double> inv = 1.0 / z;
  const std::complex<double> inv2 = inv * inv;
  const std::complex<double> series =
      inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 * (1.0 / 1680.0))));
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series - shift_sum;
}

// Adds the multiple of 2 pi i that brings Im(value) closest to `target_im`.
APComplex fix_branch(APComplex value, double target_im) {
  const Precision p = value.precision();
  const Real two_pi = const_pi(p) * 2;
  const double turns = std::round((target_im - value.im().to_double()) / two_pi.to_double());
  if (turns != 0.0) {
    value = APComplex(value.re(), value.im() + two_pi * static_cast<long>(turns));
  }
  return value;
}

bool is_nonpositive_integer(const APComplex& z) {
  return z.im().is_zero() && z.re().is_integer() && z.re().sign() <= 0;
}

APComplex stirling(const APComplex& z, Precision w) {
  // (z - 1/2) log z - z + log(2 pi)/2 + sum_k B_2k / (2k (2k-1) z^(2k-1))
  const APComplex logz = log(z);
  APComplex sum = (z - APComplex(mpq_class(1, 2), w)) * logz - z;
  sum += APComplex(log(const_pi(w) * 2) / 2);
  const APComplex inv = APComplex(1, w) / z;
  const APComplex inv2 = inv * inv;
  APComplex power = inv;
  const Real tiny = ldexp(Real(1, w), -w.bits());
  Real previous(w);
  for (std::size_t k = 1;; ++k) {
    const mpq_class coeff = bernoulli(2 * k) / mpq_class(static_cast<long>(2 * k * (2 * k - 1)));
    const APComplex term = power * Real(coeff, w);
    const Real size = abs(term);
    if (k > 2 && size > previous) {
      throw DomainError("log_gamma: Stirling series diverged before reaching precision");
    }
    sum += term;
    if (size <= tiny * abs(sum)) break;
    previous = size;
    power *= inv2;
  }
  return sum;
}

APComplex log_gamma_right(const APComplex& z, Precision w) {
  const long bits = w.bits();
  const double radius = std::max(20.0, static_cast<double>(bits) / 6.0);
  const std::complex<double> zd = z.to_std();
  long shift = 0;
  while (std::abs(zd + static_cast<double>(shift)) < radius) ++shift;
  if (shift == 0) return stirling(z, w);

  APComplex product(1, w);
  double arg_sum = 0.0;
  for (long k = 0; k < shift; ++k) {
    const APComplex factor = z + k;
    product *= factor;
    arg_sum += std::arg(zd + static_cast<double>(k));
  }
  const APComplex log_product = fix_branch(log(product), arg_sum);
  return stirling(z + shift, w) - log_product;
}

struct BernoulliCache {
  std::mutex mutex;
  std::vector<mpq_class> values{mpq_class(1)};
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace

mpq_class bernoulli(std::size_t n) {
  auto& cache = bernoulli_cache();
  std::lock_guard lock(cache.mutex);
  auto& b = cache.values;
  // sum_{k=0}^{m} C(m+1, k) B_k = 0
  while (b.size() <= n) {
    const std::size_t m = b.size();
    mpq_class s = 0;
    mpz_class binom = 1;  // C(m+1, k)
    for (std::size_t k = 0; k < m; ++k) {
      s += binom * b[k];
      binom = binom * static_cast<unsigned long>(m + 1 - k) / static_cast<unsigned long>(k + 1);
    }
    mpq_class next = -s / mpq_class(mpz_class(static_cast<unsigned long>(m + 1)));
    next.canonicalize();
    b.push_back(next);
  }
  return b[n];
}

APComplex log_gamma(const APComplex& z, Precision prec) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("log_gamma: non-positive integer argument", z.re().to_long());
  }
  const Precision w = prec.guarded();
  const APComplex zw = z.with_precision(w);
  APComplex result(w);
  if (zw.re() < Real(mpq_class(1, 2), w)) {
    // log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z), up to 2 pi i
    const Real pi = const_pi(w);
    const APComplex reflected = APComplex(log(pi)) - log(sin(zw * pi)) - log_gamma_right(1 - zw, w);
    result = fix_branch(reflected, log_gamma_estimate(z.to_std()).imag());
  } else {
    result = log_gamma_right(zw, w);
  }
  return result.with_precision(prec);
}

APComplex gamma(const APComplex& z, Precision prec) {
  return exp(log_gamma(z, prec.guarded())).with_precision(prec);
}

std::vector<Real> zeta_values(int m_max, Precision prec) {
  if (m_max < 2) throw DomainError("zeta_values: m_max must be at least 2");
  const Precision w = prec.guarded();
  const long cutoff = std::max<long>(10, w.bits() / 4);
  const auto count = static_cast<std::size_t>(m_max - 1);

  // Head: sum_{n < cutoff} n^-s for every s at once.
  std::vector<Real> head(count, Real(w));
  for (long n = 1; n < cutoff; ++n) {
    const Real inv = Real(1, w) / n;
    Real power = inv * inv;
    for (std::size_t i = 0; i < count; ++i) {
      head[i] += power;
      power *= inv;
    }
  }

  std::vector<Real> out;
  out.reserve(count);
  const Real big_n(cutoff, w);
  const Real tiny = ldexp(Real(1, w), -w.bits());
  for (std::size_t i = 0; i < count; ++i) {
    const long s = static_cast<long>(i) + 2;
    // N^{1-s}/(s-1) + N^{-s}/2 + sum_k B_2k/(2k)! (s)_{2k-1} N^{-s-2k+1}
    const Real n_pow = pow(big_n, -s);  // N^{-s}
    Real sum = head[i] + n_pow * cutoff / (s - 1) + n_pow / 2;
    Real rising(s, w);                // (s)_{2k-1}
    Real n_factor = n_pow / cutoff;   // N^{-s-2k+1}
    mpz_class factorial = 2;          // (2k)!
    const Real inv_n2 = Real(1, w) / (big_n * big_n);
    for (long k = 1;; ++k) {
      const Real term = Real(bernoulli(static_cast<std::size_t>(2 * k)) / mpq_class(factorial), w) * rising * n_factor;
      sum += term;
      if (abs(term) <= tiny * sum) break;
      if (k > 4 * cutoff) throw DomainError("zeta_values: Euler-Maclaurin tail did not converge");
      rising *= (s + 2 * k - 1) * (s + 2 * k);
      n_factor *= inv_n2;
      factorial *= (2 * k + 1) * (2 * k + 2);
    }
    out.push_back(sum.with_precision(prec));
  }
  return out;
}

Real euler_gamma(Precision prec) {
  // Brent-McMillan: gamma = U/V - log n with
  //   B_k = B_{k-1} n^2 / k^2,  A_k = (A_{k-1} n^2 / k + B_k) / k,
  //   A_0 = -log n, B_0 = 1; error O(exp(-4n)).
  const Precision w = prec + (Precision::kGuard + 16);
  const long n = static_cast<long>(std::ceil(static_cast<double>(w.bits()) * std::numbers::ln2 / 4.0)) + 1;
  const long n2 = n * n;
  Real a = -log(Real(n, w));
  Real b(1, w);
  Real u = a;
  Real v = b;
  const Real tiny = ldexp(Real(1, w), -w.bits());
  for (long k = 1;; ++k) {
    b *= n2;
    b /= k * k;
    a *= n2;
    a /= k;
    a += b;
    a /= k;
    u += a;
    v += b;
    if (k > n && abs(a) <= tiny * abs(u) && b <= tiny * v) break;
  }
  return (u / v).with_precision(prec);
}

EpsJet log_gamma_one_plus_eps(std::size_t order, Precision prec) {
  EpsJet jet(order, prec);
  if (order < 2) return jet;
  jet[1] = APComplex(-euler_gamma(prec));
  if (order > 2) {
    const auto zetas = zeta_values(static_cast<int>(order) - 1, prec);
    for (std::size_t m = 2; m < order; ++m) {
      Real c = zetas[m - 2] / static_cast<long>(m);
      if (m % 2 == 1) c = -c;
      jet[m] = APComplex(c);
    }
  }
  return jet;
}

EpsJet gamma_power_jet(const APComplex& p, std::size_t order, Precision prec) {
  if (order < 1) throw DomainError("gamma_power_jet: order must be at least 1");
  const Precision w = prec.guarded();
  const EpsJet scaled = jet_scale(log_gamma_one_plus_eps(order, w), p.with_precision(w));
  const EpsJet powered = jet_exp(scaled);
  std::vector<APComplex> coeffs;
  coeffs.reserve(order);
  for (const auto& c : powered.coeffs()) coeffs.push_back(c.with_precision(prec));
  return EpsJet(std::move(coeffs));
}

}  // namespace rrh
