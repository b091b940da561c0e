#include "rrh/chi/chi.hpp"

#include <limits>
#include <string>

#include "rrh/precision/error.hpp"

namespace rrh::chi {

ChiQuery::ChiQuery(int k, APComplex N, int n) : k_(k), N_(std::move(N)), n_(n) {
  if (k_ < 1) throw DomainError("ChiQuery: k must be at least 1, got " + std::to_string(k_));
  if (n_ < 0) throw DomainError("ChiQuery: n must be non-negative, got " + std::to_string(n_));
}

APComplex chi_projective(const APComplex& N, int n) {
  if (n < 0) throw DomainError("chi_projective: n must be non-negative");
  APComplex value(1, N.precision());
  for (int j = 1; j <= n; ++j) {
    value *= N + j;
    value /= j;
  }
  return value;
}

mpq_class chi_projective(const mpq_class& N, int n) {
  if (n < 0) throw DomainError("chi_projective: n must be non-negative");
  mpq_class value = 1;
  for (int j = 1; j <= n; ++j) {
    value *= N + j;
    value /= j;
  }
  value.canonicalize();
  return value;
}

APComplex chi_grassmannian(const ChiQuery& q) {
  APComplex numerator(1, q.N().precision());
  APComplex denominator(1, q.N().precision());
  for (int i = 0; i < q.k(); ++i) {
    const APComplex bottom = chi_projective(q.N(), i);
    if (bottom.is_zero()) {
      throw DegenerateParameterError(
          "chi_grassmannian: denominator factor binom(N+" + std::to_string(i) + ", " + std::to_string(i) +
              ") vanishes",
          i);
    }
    numerator *= chi_projective(q.N(), q.n() + i);
    denominator *= bottom;
  }
  return numerator / denominator;
}

mpq_class chi_grassmannian(int k, const mpq_class& N, int n) {
  if (k < 1 || n < 0) throw DomainError("chi_grassmannian: need k >= 1 and n >= 0");
  mpq_class value = 1;
  for (int i = 0; i < k; ++i) {
    const mpq_class bottom = chi_projective(N, i);
    if (bottom == 0) {
      throw DegenerateParameterError(
          "chi_grassmannian: denominator factor binom(N+" + std::to_string(i) + ", " + std::to_string(i) +
              ") vanishes",
          i);
    }
    value *= chi_projective(N, n + i) / bottom;
  }
  value.canonicalize();
  return value;
}

std::vector<APComplex> hilbert_series(int k, const APComplex& N, int n_max) {
  if (n_max < 0) throw DomainError("hilbert_series: n_max must be non-negative");
  std::vector<APComplex> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out.push_back(chi_grassmannian(ChiQuery(k, N, n)));
  return out;
}

std::vector<mpq_class> hilbert_series(int k, const mpq_class& N, int n_max) {
  if (n_max < 0) throw DomainError("hilbert_series: n_max must be non-negative");
  std::vector<mpq_class> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(chi_grassmannian(k, N, n));
  return out;
}

Real poincare_tail_bound(const APComplex& N, const APComplex& y, int n_max) {
  const Precision p = min(N.precision(), y.precision());
  const Real absN = abs(N);
  const Real absy = abs(y);
  const Real ratio = (Real(1, p) + absN / (n_max + 2)) * absy;
  if (ratio >= 1) return Real::from_double(std::numeric_limits<double>::infinity(), p);
  // majorant term b_{n_max+1} |y|^{n_max+1}
  Real term(1, p);
  for (int j = 1; j <= n_max + 1; ++j) term *= (Real(1, p) + absN / j) * absy;
  return term / (1 - ratio);
}

int poincare_terms_for(const APComplex& N, const APComplex& y, Precision prec) {
  const Real target = ldexp(Real(1, prec), -prec.bits());
  for (int n_max = 0; n_max < 100000; ++n_max) {
    if (poincare_tail_bound(N, y, n_max) < target) return n_max;
  }
  throw DomainError("poincare_terms_for: series converges too slowly");
}

VerificationReport poincare_check(const APComplex& N, const APComplex& y, int n_max, Precision prec) {
  if (abs(y) >= Real(mpq_class(1, 2), prec)) throw DomainError("poincare_check: requires |y| < 1/2");
  const Precision w = prec.guarded();
  const APComplex Nw = N.with_precision(w);
  const APComplex yw = y.with_precision(w);
  APComplex coeff(1, w);
  APComplex power(1, w);
  APComplex partial(1, w);
  for (int n = 1; n <= n_max; ++n) {
    coeff *= Nw + n;
    coeff /= n;
    power *= yw;
    partial += coeff * power;
  }
  const APComplex closed = exp(-(Nw + 1) * log(1 - yw));
  const Real bound = poincare_tail_bound(Nw, yw, n_max);
  const double slack = std::ldexp(1.0, static_cast<int>(-prec.bits() + 8));
  return make_report("poincare N=" + N.re().to_string(12) + (N.is_real() ? "" : "+" + N.im().to_string(12) + "i") +
                         " n_max=" + std::to_string(n_max),
                     "partial-sum vs (1-y)^-(N+1), tolerance = tail bound", partial.with_precision(prec),
                     closed.with_precision(prec), bound.to_double() + slack, prec);
}

}  // namespace rrh::chi
