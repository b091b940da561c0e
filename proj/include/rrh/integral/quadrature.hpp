#pragma once

#include <functional>
#include <vector>

#include "rrh/precision/complex.hpp"

namespace rrh::integral {

struct QuadratureResult {
  APComplex value;
  /// Conservative absolute error estimate.
  double error_estimate = 0.0;
  int levels = 0;
  long evaluations = 0;
};

/// A point of [a, b] together with its distances to both endpoints, each
/// computed without cancellation so endpoint singularities stay resolvable.
struct QuadratureNode {
  Real x;
  Real from_left;
  Real from_right;
};

using Integrand = std::function<APComplex(const QuadratureNode&)>;

/// Tanh-sinh (double exponential) quadrature of f over [a, b].
///
/// Levels halve the step until successive estimates agree to 2^-prec
/// relative, or `max_level` is reached (the estimate then reports the last
/// difference). Works at prec + guard bits internally.
QuadratureResult tanh_sinh(const Integrand& f, const Real& a, const Real& b, Precision prec, int max_level = 12);

/// n-point Gaussian rule on [0, 1] for the weight s^(alpha-1) (1-s)^(beta-1).
struct GaussRule {
  std::vector<APComplex> nodes;
  std::vector<APComplex> weights;
};

/// Nodes are the zeros of the monic shifted Jacobi polynomial p_n (found by
/// Aberth iteration in double precision, then Newton-polished); weights are
/// Christoffel numbers mu0 / sum_j p_j(x)^2 / h_j. Complex parameters are
/// allowed (the rule is then exact for the complex bilinear moment
/// functional). The total mass mu0 is supplied by the caller.
GaussRule gauss_jacobi(const APComplex& alpha, const APComplex& beta, int n, const APComplex& mu0, Precision prec);

}  // namespace rrh::integral
