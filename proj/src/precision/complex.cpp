#include "rrh/precision/complex.hpp"

#include "rrh/precision/error.hpp"

namespace rrh {

APComplex& APComplex::operator+=(const APComplex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

APComplex& APComplex::operator-=(const APComplex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

APComplex& APComplex::operator*=(const APComplex& rhs) { return *this = *this * rhs; }
APComplex& APComplex::operator/=(const APComplex& rhs) { return *this = *this / rhs; }

APComplex& APComplex::operator*=(const Real& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

APComplex& APComplex::operator/=(const Real& rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

APComplex& APComplex::operator*=(long rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

APComplex& APComplex::operator/=(long rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

APComplex operator*(const APComplex& a, const APComplex& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) {
    return {a.re_ * b.re_, Real(min(a.precision(), b.precision()))};
  }
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

APComplex operator/(const APComplex& a, const APComplex& b) {
  if (b.is_zero()) throw DomainError("complex division by zero");
  if (b.im_.is_zero()) {
    return {a.re_ / b.re_, a.im_ / b.re_};
  }
  // Smith's algorithm keeps intermediate magnitudes bounded.
  if (abs(b.re_) >= abs(b.im_)) {
    const Real r = b.im_ / b.re_;
    const Real d = b.re_ + r * b.im_;
    return {(a.re_ + a.im_ * r) / d, (a.im_ - a.re_ * r) / d};
  }
  const Real r = b.re_ / b.im_;
  const Real d = b.im_ + r * b.re_;
  return {(a.re_ * r + a.im_) / d, (a.im_ * r - a.re_) / d};
}

APComplex conj(const APComplex& z) { return {z.re(), -z.im()}; }

Real norm(const APComplex& z) { return z.re() * z.re() + z.im() * z.im(); }

Real abs(const APComplex& z) {
  Real r(z.precision());
  mpfr_hypot(r.get(), z.re().get(), z.im().get(), MPFR_RNDN);
  return r;
}

Real arg(const APComplex& z) { return atan2(z.im(), z.re()); }

APComplex exp(const APComplex& z) {
  const Real m = exp(z.re());
  if (z.im().is_zero()) return {m, Real(z.precision())};
  Real s(z.precision());
  Real c(z.precision());
  mpfr_sin_cos(s.get(), c.get(), z.im().get(), MPFR_RNDN);
  return {m * c, m * s};
}

APComplex log(const APComplex& z) {
  if (z.is_zero()) throw DomainError("log(0)");
  if (z.im().is_zero()) {
    if (z.re().sign() > 0) return {log(z.re()), Real(z.precision())};
    return {log(-z.re()), const_pi(z.precision())};
  }
  return {log(abs(z)), arg(z)};
}

APComplex sqrt(const APComplex& z) {
  if (z.is_zero()) return z;
  const Real r = abs(z);
  Real a = sqrt((r + abs(z.re())) / 2);
  if (z.re().sign() >= 0) return {a, z.im() / (a * 2)};
  Real b = z.im().sign() < 0 ? -a : a;
  return {abs(z.im()) / (a * 2), b};
}

APComplex pow(const APComplex& z, const APComplex& w) {
  if (z.is_zero()) {
    if (w.re().sign() > 0) return APComplex(min(z.precision(), w.precision()));
    throw DomainError("pow(0, w) with Re w <= 0");
  }
  return exp(w * log(z));
}

APComplex pow(const APComplex& z, long n) {
  APComplex result(1, z.precision());
  APComplex base = z;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1UL : static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  if (n < 0) return APComplex(1, z.precision()) / result;
  return result;
}

APComplex sin(const APComplex& z) {
  // sin(x + iy) = sin x cosh y + i cos x sinh y
  Real s(z.precision());
  Real c(z.precision());
  mpfr_sin_cos(s.get(), c.get(), z.re().get(), MPFR_RNDN);
  if (z.im().is_zero()) return {s, Real(z.precision())};
  return {s * cosh(z.im()), c * sinh(z.im())};
}

APComplex cos(const APComplex& z) {
  Real s(z.precision());
  Real c(z.precision());
  mpfr_sin_cos(s.get(), c.get(), z.re().get(), MPFR_RNDN);
  if (z.im().is_zero()) return {c, Real(z.precision())};
  return {c * cosh(z.im()), -(s * sinh(z.im()))};
}

APComplex i_pi(Precision p) { return {Real(p), const_pi(p)}; }

Real relative_distance(const APComplex& a, const APComplex& b) {
  const Real scale = abs(b);
  const Real d = abs(a - b);
  return scale.is_zero() ? d : d / scale;
}

}  // namespace rrh
