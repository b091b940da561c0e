#pragma once

#include <cstddef>
#include <vector>

#include "rrh/precision/complex.hpp"
#include "rrh/precision/jet.hpp"

namespace rrh {

/// Exact Bernoulli number B_n (B_1 = -1/2). Thread safe; cached.
mpq_class bernoulli(std::size_t n);

/// Principal branch of log Gamma(z): analytic in the plane slit along the
/// negative real axis, with the value on the axis taken as the limit from
/// above. Throws PoleError at non-positive integers.
///
/// Evaluated by the Stirling series after upward recurrence to
/// |z| >= max(20, prec/6); the reflection formula handles Re z < 1/2.
APComplex log_gamma(const APComplex& z, Precision prec);

/// Gamma(z) = exp(log_gamma(z)).
APComplex gamma(const APComplex& z, Precision prec);

/// zeta(2), ..., zeta(m_max) by Euler-Maclaurin summation; element i holds
/// zeta(i + 2).
std::vector<Real> zeta_values(int m_max, Precision prec);

/// Euler-Mascheroni constant (Brent-McMillan).
Real euler_gamma(Precision prec);

/// Jet of log Gamma(1 + e) = -gamma e + sum_{m>=2} (-1)^m zeta(m) e^m / m.
EpsJet log_gamma_one_plus_eps(std::size_t order, Precision prec);

/// Jet of Gamma(1 + e)^p, constant term exactly 1.
EpsJet gamma_power_jet(const APComplex& p, std::size_t order, Precision prec);

}  // namespace rrh
