#pragma once

#include <mpfr.h>

#include <climits>
#include <compare>
#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <string_view>

namespace rrh {

/// Working precision in bits.
class Precision {
 public:
  static constexpr long kMinimum = 64;
  static constexpr long kGuard = 20;

  constexpr explicit Precision(long bits) : bits_(bits) {}

  constexpr long bits() const { return bits_; }
  constexpr Precision operator+(long extra) const { return Precision(bits_ + extra); }
  constexpr auto operator<=>(const Precision&) const = default;

  /// Precision with the standard per-call guard bits added.
  constexpr Precision guarded() const { return Precision(bits_ + kGuard); }

 private:
  long bits_;
};

constexpr Precision min(Precision a, Precision b) { return a.bits() < b.bits() ? a : b; }

/// Arbitrary-precision binary floating point number (RAII over mpfr_t).
///
/// Binary operations produce a result at the smaller of the two operand
/// precisions; operations with machine integers or exact rationals keep the
/// precision of the Real operand.
class Real {
 public:
  explicit Real(Precision p);
  Real(long value, Precision p);
  Real(const mpq_class& value, Precision p);
  Real(const Real& other, Precision p);

  /// Parses a decimal literal, e.g. "-0.25" or "1e-30".
  static Real from_string(std::string_view text, Precision p);
  static Real from_double(double value, Precision p);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Precision precision() const { return Precision(mpfr_get_prec(value_)); }
  Real with_precision(Precision p) const { return Real(*this, p); }

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_integer() const { return mpfr_integer_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  long exponent() const { return is_zero() ? LONG_MIN / 2 : mpfr_get_exp(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(value_, MPFR_RNDN); }

  /// Decimal string with `digits` significant digits (0 = enough to round trip).
  std::string to_string(int digits = 0) const;

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);
  Real& operator+=(long rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator+(const Real& a, long b);
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator-(const Real& a, long b);
  friend Real operator-(long a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b);
  friend Real operator/(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return b <= a; }
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) > 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) <= 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) >= 0; }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real floor(const Real& x);
Real round(const Real& x);
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);

Real const_pi(Precision p);
Real const_log2(Precision p);

/// Exact rational value of a finite Real.
mpq_class to_rational(const Real& x);

}  // namespace rrh
