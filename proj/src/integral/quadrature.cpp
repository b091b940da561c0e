#include "rrh/integral/quadrature.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "rrh/precision/error.hpp"

namespace rrh::integral {

namespace {

constexpr double kTCap = 12.0;

struct UnitNode {
  Real left;    // distance to 0 of the unit-interval abscissa
  Real right;   // distance to 1
  Real weight;  // dy/dt
};

// y(t) = 1/(1 + exp(-2u)), u = (pi/2) sinh t.
UnitNode unit_node(const Real& t, const Real& half_pi) {
  const Real u = half_pi * sinh(abs(t));
  const Real e = exp(-(u * 2));
  const Real denom = 1 + e;
  Real near = e / denom;
  Real far = 1 / denom;
  Real weight = half_pi * cosh(t) * e * 2 / (denom * denom);
  if (t.sign() >= 0) return {std::move(far), std::move(near), std::move(weight)};
  return {std::move(near), std::move(far), std::move(weight)};
}

}  // namespace

QuadratureResult tanh_sinh(const Integrand& f, const Real& a, const Real& b, Precision prec, int max_level) {
  const Precision w = prec.guarded();
  const Real aw(a, w);
  const Real bw(b, w);
  const Real width = bw - aw;
  const Real half_pi = const_pi(w) / 2;
  const Real tiny = ldexp(Real(1, w), -w.bits());

  long evaluations = 0;
  auto eval = [&](const Real& t) {
    UnitNode node = unit_node(t, half_pi);
    Real from_left = width * node.left;
    Real from_right = width * node.right;
    Real x = t.sign() >= 0 ? bw - from_right : aw + from_left;
    ++evaluations;
    APComplex fx = f(QuadratureNode{std::move(x), std::move(from_left), std::move(from_right)});
    return fx * node.weight;
  };

  // Walks t = start, start + stride, ... in one direction until three
  // consecutive terms are negligible against `scale`.
  auto walk = [&](const Real& start, const Real& stride, const Real& scale) {
    APComplex sum(w);
    int quiet = 0;
    for (Real t = start; abs(t) <= kTCap; t += stride) {
      const APComplex term = eval(t);
      sum += term;
      const Real size = abs(term);
      const Real ref = max(scale, abs(sum));
      if (size <= tiny * ref) {
        if (++quiet >= 3) break;
      } else {
        quiet = 0;
      }
    }
    return sum;
  };

  // level 0: h = 1, t in Z
  Real h(1, w);
  APComplex raw = eval(Real(w));
  {
    const Real zero_scale = abs(raw);
    raw += walk(Real(1, w), Real(1, w), zero_scale);
    raw += walk(Real(-1, w), Real(-1, w), zero_scale);
  }
  APComplex estimate = raw * h;
  Real last_diff = abs(estimate);
  const Real goal = ldexp(Real(1, w), -prec.bits());
  int level = 0;
  for (level = 1; level <= max_level; ++level) {
    h /= 2;
    const Real scale = abs(raw);
    APComplex fresh = walk(h, h * 2, scale);
    fresh += walk(-h, -(h * 2), scale);
    raw += fresh;
    APComplex next = raw * h;
    last_diff = abs(next - estimate);
    estimate = std::move(next);
    if (level >= 3 && last_diff <= goal * abs(estimate)) break;
  }
  estimate *= width;
  const double err = (last_diff * abs(width)).to_double();
  return {estimate.with_precision(prec), err, std::min(level, max_level), evaluations};
}

namespace {

struct Recurrence {
  std::vector<APComplex> diag;  // A_j, j = 0..n-1
  std::vector<APComplex> off;   // B_j, j = 1..n-1 stored at index j (index 0 unused)
};

Recurrence shifted_jacobi(const APComplex& alpha, const APComplex& beta, int n, Precision w) {
  // Monic Jacobi recurrence on [-1, 1] for (1-x)^a (1+x)^b with a = beta-1,
  // b = alpha-1, mapped to s = (1+x)/2.
  const APComplex a = beta.with_precision(w) - 1;
  const APComplex b = alpha.with_precision(w) - 1;
  const APComplex ab = a + b;
  Recurrence r;
  r.diag.reserve(static_cast<std::size_t>(n));
  r.off.reserve(static_cast<std::size_t>(n));
  const APComplex b2a2 = b * b - a * a;
  for (int j = 0; j < n; ++j) {
    APComplex aj = j == 0 ? (b - a) / (ab + 2) : b2a2 / ((ab + 2 * j) * (ab + (2 * j + 2)));
    r.diag.push_back((aj + 1) / 2);
    if (j == 0) {
      r.off.emplace_back(w);
    } else if (j == 1) {
      const APComplex s = ab + 2;
      r.off.push_back(APComplex(4, w) * (a + 1) * (b + 1) / (s * s * (ab + 3)) / 4);
    } else {
      const APComplex s = ab + 2 * j;
      const APComplex num = APComplex(4L * j, w) * (a + j) * (b + j) * (ab + j);
      r.off.push_back(num / (s * s * (s + 1) * (s - 1)) / 4);
    }
  }
  return r;
}

// p_n(x) and p_n'(x) by the three-term recurrence.
template <typename T, typename Coeff>
std::pair<T, T> evaluate(const std::vector<Coeff>& diag, const std::vector<Coeff>& off, const T& x, const T& one,
                         const T& zero) {
  T p_prev = zero;
  T p = one;
  T d_prev = zero;
  T d = zero;
  for (std::size_t j = 0; j < diag.size(); ++j) {
    T p_next = (x - diag[j]) * p;
    T d_next = p + (x - diag[j]) * d;
    if (j > 0) {
      p_next -= off[j] * p_prev;
      d_next -= off[j] * d_prev;
    }
    p_prev = std::move(p);
    p = std::move(p_next);
    d_prev = std::move(d);
    d = std::move(d_next);
  }
  return {p, d};
}

std::vector<std::complex<double>> aberth_roots(const Recurrence& r) {
  const std::size_t n = r.diag.size();
  std::vector<std::complex<double>> diag(n);
  std::vector<std::complex<double>> off(n);
  for (std::size_t j = 0; j < n; ++j) {
    diag[j] = r.diag[j].to_std();
    off[j] = r.off[j].to_std();
  }
  std::vector<std::complex<double>> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = std::numbers::pi * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    z[i] = {0.5 - 0.5 * std::cos(theta), 1e-3 * std::sin(3.0 * theta + 0.4)};
  }
  const std::complex<double> one(1.0, 0.0);
  const std::complex<double> zero(0.0, 0.0);
  for (int iter = 0; iter < 500; ++iter) {
    double biggest = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto [p, dp] = evaluate(diag, off, z[i], one, zero);
      if (p == zero) continue;
      const std::complex<double> ratio = p / dp;
      std::complex<double> repulsion = zero;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) repulsion += one / (z[i] - z[j]);
      }
      const std::complex<double> step = ratio / (one - ratio * repulsion);
      z[i] -= step;
      biggest = std::max(biggest, std::abs(step));
    }
    if (biggest < 1e-15) break;
  }
  return z;
}

}  // namespace

GaussRule gauss_jacobi(const APComplex& alpha, const APComplex& beta, int n, const APComplex& mu0, Precision prec) {
  if (n < 1) throw DomainError("gauss_jacobi: need at least one node");
  const Precision w = prec.guarded();
  const Recurrence r = shifted_jacobi(alpha, beta, n, w);
  const auto guesses = aberth_roots(r);

  const APComplex one(1, w);
  const APComplex zero(w);
  const Real tiny = ldexp(Real(1, w), -w.bits() + 4);
  GaussRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(n));
  rule.weights.reserve(static_cast<std::size_t>(n));
  for (const auto& guess : guesses) {
    APComplex x = APComplex::from_std(guess, w);
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = evaluate(r.diag, r.off, x, one, zero);
      if (p.is_zero()) break;
      const APComplex step = p / dp;
      x -= step;
      if (abs(step) <= tiny * abs(x)) break;
    }
    rule.nodes.push_back(x);
  }

  // lambda_i = 1 / sum_j p_j(x_i)^2 / h_j, h_0 = mu0, h_j = h_{j-1} B_j
  std::vector<APComplex> h;
  h.reserve(static_cast<std::size_t>(n));
  h.push_back(mu0.with_precision(w));
  for (int j = 1; j < n; ++j) h.push_back(h.back() * r.off[static_cast<std::size_t>(j)]);
  for (const auto& x : rule.nodes) {
    APComplex p_prev = zero;
    APComplex p = one;
    APComplex sum = one / h[0];
    for (int j = 0; j + 1 < n; ++j) {
      APComplex p_next = (x - r.diag[static_cast<std::size_t>(j)]) * p;
      if (j > 0) p_next -= r.off[static_cast<std::size_t>(j)] * p_prev;
      p_prev = std::move(p);
      p = std::move(p_next);
      sum += p * p / h[static_cast<std::size_t>(j) + 1];
    }
    rule.weights.push_back(one / sum);
  }
  for (auto& x : rule.nodes) x = x.with_precision(prec);
  for (auto& wt : rule.weights) wt = wt.with_precision(prec);
  return rule;
}

}  // namespace rrh::integral
