#pragma once

#include <vector>

#include "rrh/chi/chi.hpp"
#include "rrh/integral/quadrature.hpp"
#include "rrh/report.hpp"

/// Integral representations of the interpolated Euler characteristics,
/// checked by quadrature against the closed forms.
namespace rrh::integral {

/// Parameters of S(alpha, beta, gamma, k) =
///   int_[0,1]^k prod s_i^(alpha-1) (1-s_i)^(beta-1) |Delta(s)|^(2 gamma) ds.
struct SelbergParams {
  SelbergParams(APComplex alpha, APComplex beta, APComplex gamma, int k);

  APComplex alpha;
  APComplex beta;
  APComplex gamma;
  int k;
};

/// Gamma(alpha) Gamma(beta) / Gamma(alpha + beta). PoleError at poles.
APComplex beta_closed(const APComplex& alpha, const APComplex& beta, Precision prec);

/// int_0^1 s^(alpha-1) (1-s)^(beta-1) ds by tanh-sinh; needs Re alpha > 0
/// and Re beta > 0 (DomainError otherwise).
QuadratureResult beta_quadrature(const APComplex& alpha, const APComplex& beta, Precision prec);

/// The analytic continuation of the beta integral to Re alpha <= 0 (Re beta
/// > 0): tanh-sinh on [1/2, 1] plus the termwise integrated binomial series
/// of (1-s)^(beta-1) on [0, 1/2]. Agrees with beta_quadrature when both apply.
QuadratureResult beta_continued(const APComplex& alpha, const APComplex& beta, Precision prec);

/// (sin pi(N+1) / pi) * int_0^1 s^(n+N) (1-s)^(-N-1) ds, which equals
/// chi_projective(N, n). Requires Re N < 0, N not an integer, n >= 0.
/// When Re(n+N+1) <= 0 the integral is taken in its continued sense.
APComplex prop1_integral(const APComplex& N, int n, Precision prec);

/// Product of gamma values, exponentiated once from a log-gamma sum.
/// PoleError naming the offending factor when any argument is a pole.
APComplex selberg_closed_form(const SelbergParams& p, Precision prec);

/// Tensor Gauss-Jacobi quadrature of the Selberg integral. Requires Re alpha
/// > 0, Re beta > 0, gamma in {1, 2, 3} and 1 <= k <= 4.
QuadratureResult selberg_quadrature(const SelbergParams& p, Precision prec);

/// Compares chi_grassmannian(q) with the Selberg representation
///   (-1)^(k(k-1)/2) / k! * (sin pi(N+1) / pi)^k * S(n+N+1, -N-k+1, 1, k).
/// The first row uses the closed form (or, at integer N, exact integer
/// arithmetic); a second row uses selberg_quadrature when it applies.
std::vector<VerificationReport> prop2_check(const chi::ChiQuery& q, Precision prec, double tolerance);

}  // namespace rrh::integral
