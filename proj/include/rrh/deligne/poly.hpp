#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "rrh/precision/complex.hpp"

namespace rrh::deligne {

/// Polynomial in the loop parameter t with exact rational coefficients.
/// Coefficients are stored lowest degree first with no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor): constants read naturally
  Poly(const mpq_class& c);  // NOLINT
  explicit Poly(std::vector<mpq_class> coeffs);

  /// The monomial t.
  static Poly t();

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  mpq_class coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : mpq_class(0); }

  mpq_class evaluate(const mpq_class& t) const;
  APComplex evaluate(const APComplex& t) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator-(const Poly& a) { return Poly(0) - a; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Expanded form, e.g. "t^2/2 + t/2".
  std::string expanded() const;
  /// Rational linear factors pulled out where possible, e.g. "t(t+1)/2".
  std::string factored() const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// t^n
Poly power_of_t(int n);

}  // namespace rrh::deligne
