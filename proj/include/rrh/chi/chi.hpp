#pragma once

#include <vector>

#include "rrh/precision/complex.hpp"
#include "rrh/report.hpp"

/// Interpolated Euler characteristics chi(O(n)) on P^N and G(k, N+k), viewed
/// as polynomials in the (complex) parameter N.
namespace rrh::chi {

/// (k, N, n): rank k >= 1, interpolated codimension N, twist n >= 0.
class ChiQuery {
 public:
  ChiQuery(int k, APComplex N, int n);

  int k() const { return k_; }
  const APComplex& N() const { return N_; }
  int n() const { return n_; }

 private:
  int k_;
  APComplex N_;
  int n_;
};

/// binom(N+n, n) = (N+1)(N+2)...(N+n)/n!, a degree-n polynomial in N.
APComplex chi_projective(const APComplex& N, int n);
mpq_class chi_projective(const mpq_class& N, int n);

/// prod_{i<k} binom(N+n+i, n+i) / binom(N+i, i).
/// Throws DegenerateParameterError when a denominator binom(N+i, i) vanishes.
APComplex chi_grassmannian(const ChiQuery& q);
mpq_class chi_grassmannian(int k, const mpq_class& N, int n);

/// [chi_grassmannian(k, N, n)] for n = 0..n_max.
std::vector<APComplex> hilbert_series(int k, const APComplex& N, int n_max);
std::vector<mpq_class> hilbert_series(int k, const mpq_class& N, int n_max);

/// Bound on |sum_{n > n_max} binom(N+n, n) y^n| from the real majorant
/// prod (1 + |N|/j) |y|^n; +inf when the majorant ratio is not below 1.
Real poincare_tail_bound(const APComplex& N, const APComplex& y, int n_max);

/// Smallest n_max whose tail bound is below 2^-bits.
int poincare_terms_for(const APComplex& N, const APComplex& y, Precision prec);

/// Compares sum_{n <= n_max} chi_projective(N, n) y^n against
/// (1 - y)^-(N+1) (principal branch); tolerance is the analytic tail bound
/// plus rounding slack. Requires |y| < 1/2.
VerificationReport poincare_check(const APComplex& N, const APComplex& y, int n_max, Precision prec);

}  // namespace rrh::chi
