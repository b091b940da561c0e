#pragma once

#include <complex>
#include <string>

#include "rrh/precision/real.hpp"

namespace rrh {

/// Arbitrary-precision complex number with Cartesian parts.
class APComplex {
 public:
  explicit APComplex(Precision p) : re_(p), im_(p) {}
  APComplex(long re, Precision p) : re_(re, p), im_(p) {}
  APComplex(const mpq_class& re, Precision p) : re_(re, p), im_(p) {}
  explicit APComplex(Real re) : re_(std::move(re)), im_(re_.precision()) {}
  APComplex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  APComplex(const APComplex& other, Precision p) : re_(other.re_, p), im_(other.im_, p) {}

  static APComplex from_std(std::complex<double> z, Precision p) {
    return {Real::from_double(z.real(), p), Real::from_double(z.imag(), p)};
  }

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }

  Precision precision() const { return min(re_.precision(), im_.precision()); }
  APComplex with_precision(Precision p) const { return APComplex(*this, p); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  std::complex<double> to_std() const { return {re_.to_double(), im_.to_double()}; }

  APComplex operator-() const { return {-re_, -im_}; }
  APComplex& operator+=(const APComplex& rhs);
  APComplex& operator-=(const APComplex& rhs);
  APComplex& operator*=(const APComplex& rhs);
  APComplex& operator/=(const APComplex& rhs);
  APComplex& operator*=(const Real& rhs);
  APComplex& operator/=(const Real& rhs);
  APComplex& operator*=(long rhs);
  APComplex& operator/=(long rhs);

  friend APComplex operator+(APComplex a, const APComplex& b) { return a += b; }
  friend APComplex operator-(APComplex a, const APComplex& b) { return a -= b; }
  friend APComplex operator*(const APComplex& a, const APComplex& b);
  friend APComplex operator/(const APComplex& a, const APComplex& b);
  friend APComplex operator*(APComplex a, const Real& b) { return a *= b; }
  friend APComplex operator*(const Real& b, APComplex a) { return a *= b; }
  friend APComplex operator/(APComplex a, const Real& b) { return a /= b; }
  friend APComplex operator*(APComplex a, long b) { return a *= b; }
  friend APComplex operator*(long b, APComplex a) { return a *= b; }
  friend APComplex operator/(APComplex a, long b) { return a /= b; }
  friend APComplex operator+(const APComplex& a, long b) { return {a.re_ + b, a.im_}; }
  friend APComplex operator-(const APComplex& a, long b) { return {a.re_ - b, a.im_}; }
  friend APComplex operator-(long a, const APComplex& b) { return {a - b.re_, -b.im_}; }
  friend APComplex operator+(const APComplex& a, const Real& b) { return {a.re_ + b, a.im_}; }
  friend APComplex operator-(const APComplex& a, const Real& b) { return {a.re_ - b, a.im_}; }

  friend bool operator==(const APComplex& a, const APComplex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  Real re_;
  Real im_;
};

APComplex conj(const APComplex& z);
Real norm(const APComplex& z);  // |z|^2
Real abs(const APComplex& z);
Real arg(const APComplex& z);
APComplex exp(const APComplex& z);
/// Principal logarithm, arg in (-pi, pi].
APComplex log(const APComplex& z);
APComplex sqrt(const APComplex& z);
APComplex pow(const APComplex& z, const APComplex& w);
APComplex pow(const APComplex& z, long n);
APComplex sin(const APComplex& z);
APComplex cos(const APComplex& z);

/// i * pi at the given precision.
APComplex i_pi(Precision p);

/// |a - b| / max(|b|, floor); handy for test comparisons.
Real relative_distance(const APComplex& a, const APComplex& b);

}  // namespace rrh
