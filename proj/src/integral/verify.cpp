#include "rrh/integral/verify.hpp"

#include <algorithm>
#include <string>

#include "rrh/precision/error.hpp"
#include "rrh/precision/special.hpp"

namespace rrh::integral {

namespace {

bool is_integer(const APComplex& z) { return z.is_real() && z.re().is_integer(); }

std::string describe(const APComplex& z) {
  if (z.is_real()) return z.re().to_string(12);
  return z.re().to_string(12) + (z.im().sign() < 0 ? "-" : "+") + abs(z.im()).to_string(12) + "i";
}

// s^(a-1) (1-s)^(b-1) from cancellation-free logs of s and 1-s.
APComplex beta_density(const APComplex& am1, const APComplex& bm1, const Real& s, const Real& one_minus_s) {
  return exp(am1 * log(s) + bm1 * log(one_minus_s));
}

APComplex log_gamma_factor(const APComplex& z, Precision w, const std::string& name) {
  try {
    return log_gamma(z, w);
  } catch (const PoleError& e) {
    throw PoleError("selberg_closed_form: " + name + " is at a pole", e.pole());
  }
}

}  // namespace

SelbergParams::SelbergParams(APComplex alpha_, APComplex beta_, APComplex gamma_, int k_)
    : alpha(std::move(alpha_)), beta(std::move(beta_)), gamma(std::move(gamma_)), k(k_) {
  if (k < 1) throw DomainError("SelbergParams: k must be at least 1");
}

APComplex beta_closed(const APComplex& alpha, const APComplex& beta, Precision prec) {
  const Precision w = prec.guarded();
  const APComplex a = alpha.with_precision(w);
  const APComplex b = beta.with_precision(w);
  return exp(log_gamma(a, w) + log_gamma(b, w) - log_gamma(a + b, w)).with_precision(prec);
}

QuadratureResult beta_quadrature(const APComplex& alpha, const APComplex& beta, Precision prec) {
  if (alpha.re() <= 0 || beta.re() <= 0) throw DomainError("beta_quadrature: needs Re alpha > 0 and Re beta > 0");
  const Precision w = prec.guarded();
  const APComplex am1 = alpha.with_precision(w) - 1;
  const APComplex bm1 = beta.with_precision(w) - 1;
  auto f = [&](const QuadratureNode& node) { return beta_density(am1, bm1, node.from_left, node.from_right); };
  return tanh_sinh(f, Real(w), Real(1, w), prec);
}

QuadratureResult beta_continued(const APComplex& alpha, const APComplex& beta, Precision prec) {
  if (beta.re() <= 0) throw DomainError("beta_continued: needs Re beta > 0");
  if (is_integer(alpha) && alpha.re() <= 0) {
    throw PoleError("beta_continued: alpha is a non-positive integer", alpha.re().to_long());
  }
  const Precision w = prec.guarded();
  const APComplex a = alpha.with_precision(w);
  const APComplex am1 = a - 1;
  const APComplex bm1 = beta.with_precision(w) - 1;
  const Real half(mpq_class(1, 2), w);

  auto f = [&](const QuadratureNode& node) { return beta_density(am1, bm1, node.x, node.from_right); };
  QuadratureResult upper = tanh_sinh(f, half, Real(1, w), prec);

  // int_0^{1/2} s^(a-1) sum_j (1-b)_j / j! s^j ds, termwise
  const APComplex one_minus_b = -bm1;
  APComplex coeff(1, w);
  APComplex power = exp(a * log(half));  // 2^-a
  APComplex lower(w);
  const Real tiny = ldexp(Real(1, w), -w.bits());
  const long floor_terms = static_cast<long>(abs(a).to_double() + abs(one_minus_b).to_double()) + 4;
  for (long j = 0;; ++j) {
    const APComplex term = coeff * power / (a + j);
    lower += term;
    if (j > floor_terms && abs(term) <= tiny * abs(lower)) break;
    if (j > 64 * w.bits()) throw DomainError("beta_continued: series did not converge");
    coeff *= one_minus_b + j;
    coeff /= j + 1;
    power *= half;
  }
  upper.value = (upper.value.with_precision(w) + lower).with_precision(prec);
  return upper;
}

APComplex prop1_integral(const APComplex& N, int n, Precision prec) {
  if (n < 0) throw DomainError("prop1_integral: n must be non-negative");
  if (N.re() >= 0) throw DomainError("prop1_integral: needs Re N < 0");
  if (is_integer(N)) throw DomainError("prop1_integral: N must not be an integer");
  const Precision w = prec.guarded();
  const APComplex Nw = N.with_precision(w);
  const APComplex alpha = Nw + (n + 1);
  const APComplex beta = -Nw;
  const QuadratureResult integral =
      alpha.re() > 0 ? beta_quadrature(alpha, beta, w) : beta_continued(alpha, beta, w);
  const Real pi = const_pi(w);
  const APComplex prefactor = sin((Nw + 1) * pi) / pi;
  return (prefactor * integral.value).with_precision(prec);
}

APComplex selberg_closed_form(const SelbergParams& p, Precision prec) {
  const Precision w = prec.guarded();
  const APComplex a = p.alpha.with_precision(w);
  const APComplex b = p.beta.with_precision(w);
  const APComplex g = p.gamma.with_precision(w);
  const APComplex lg_one_plus_g = log_gamma_factor(g + 1, w, "Gamma(1 + gamma)");
  APComplex total(w);
  for (int i = 0; i < p.k; ++i) {
    const std::string idx = std::to_string(i);
    const APComplex ig = g * i;
    total += log_gamma_factor(a + ig, w, "Gamma(alpha + " + idx + " gamma)");
    total += log_gamma_factor(b + ig, w, "Gamma(beta + " + idx + " gamma)");
    total += log_gamma_factor(g * (i + 1) + 1, w, "Gamma(1 + " + std::to_string(i + 1) + " gamma)");
    total -= log_gamma_factor(a + b + g * (p.k + i - 1), w,
                              "Gamma(alpha + beta + " + std::to_string(p.k + i - 1) + " gamma)");
    total -= lg_one_plus_g;
  }
  return exp(total).with_precision(prec);
}

QuadratureResult selberg_quadrature(const SelbergParams& p, Precision prec) {
  if (p.k > 4) throw DomainError("selberg_quadrature: k is capped at 4");
  if (!is_integer(p.gamma) || p.gamma.re() < 1 || p.gamma.re() > 3) {
    throw DomainError("selberg_quadrature: gamma must be 1, 2 or 3");
  }
  if (p.alpha.re() <= 0 || p.beta.re() <= 0) {
    throw DomainError("selberg_quadrature: needs Re alpha > 0 and Re beta > 0");
  }
  const Precision w = prec.guarded();
  const int k = p.k;
  const long g = p.gamma.re().to_long();
  const int nodes = static_cast<int>(k * (k - 1) * g / 2 + 8);

  const QuadratureResult mass = beta_quadrature(p.alpha, p.beta, w);
  const GaussRule rule = gauss_jacobi(p.alpha, p.beta, nodes, mass.value, w);

  // The integrand is symmetric and Delta^2 vanishes on repeated nodes, so
  // summing strictly increasing index tuples and scaling by k! is exact.
  APComplex sum(w);
  Real magnitude(w);
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    APComplex term(1, w);
    for (int i = 0; i < k; ++i) {
      const auto xi = static_cast<std::size_t>(idx[static_cast<std::size_t>(i)]);
      term *= rule.weights[xi];
      for (int j = i + 1; j < k; ++j) {
        const auto xj = static_cast<std::size_t>(idx[static_cast<std::size_t>(j)]);
        term *= pow(rule.nodes[xi] - rule.nodes[xj], 2 * g);
      }
    }
    sum += term;
    magnitude += abs(term);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == nodes - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i) - 1] + 1;
  }
  long factorial = 1;
  for (int i = 2; i <= k; ++i) factorial *= i;
  sum *= factorial;
  magnitude *= factorial;

  // Each term carries k Christoffel weights, each proportional to mu0.
  const double mass_rel = mass.error_estimate / std::max(abs(mass.value).to_double(), 1e-300);
  const double rounding = (magnitude * ldexp(Real(1, w), -prec.bits() + 8)).to_double();
  const double err = k * mass_rel * abs(sum).to_double() + rounding;
  return {sum.with_precision(prec), err, mass.levels, mass.evaluations};
}

std::vector<VerificationReport> prop2_check(const chi::ChiQuery& q, Precision prec, double tolerance) {
  const Precision w = prec.guarded();
  const int k = q.k();
  const int n = q.n();
  const APComplex N = q.N().with_precision(w);
  const std::string label =
      "prop2 k=" + std::to_string(k) + " N=" + describe(q.N()) + " n=" + std::to_string(n);
  const APComplex lhs = chi::chi_grassmannian(chi::ChiQuery(k, N, n)).with_precision(prec);

  std::vector<VerificationReport> rows;
  if (is_integer(N)) {
    const mpq_class exact = chi::chi_grassmannian(k, to_rational(N.re()), n);
    rows.push_back(make_report(label, "integer-littlewood", lhs, APComplex(exact, prec), tolerance, prec));
    return rows;
  }

  const APComplex alpha = N + (n + 1);
  const APComplex beta = -N - (k - 1);
  const Real pi = const_pi(w);
  APComplex prefactor = pow(sin((N + 1) * pi) / pi, k);
  long factorial = 1;
  for (int i = 2; i <= k; ++i) factorial *= i;
  prefactor /= factorial;
  if ((k * (k - 1) / 2) % 2 != 0) prefactor = -prefactor;

  const SelbergParams params(alpha, beta, APComplex(1, w), k);
  const APComplex closed = prefactor * selberg_closed_form(params, w);
  rows.push_back(make_report(label, "selberg-closed-form", lhs, closed.with_precision(prec), tolerance, prec));

  if (alpha.re() > 0 && beta.re() > 0 && k <= 4) {
    const QuadratureResult quad = selberg_quadrature(params, w);
    rows.push_back(make_report(label, "selberg-gauss-jacobi", lhs, (prefactor * quad.value).with_precision(prec),
                               tolerance, prec));
  }
  return rows;
}

}  // namespace rrh::integral
