#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "rrh/precision/complex.hpp"

namespace rrh {

/// Truncated power series c_0 + c_1 e + ... + c_{K-1} e^{K-1} in a formal
/// variable e, with e^K = 0. Dense storage; orders stay small.
class EpsJet {
 public:
  /// The zero jet of order `order`.
  EpsJet(std::size_t order, Precision p);
  explicit EpsJet(std::vector<APComplex> coeffs);

  /// Jet from exact rationals, e.g. EpsJet::from_rationals({1, -1}, p).
  static EpsJet from_rationals(std::initializer_list<mpq_class> coeffs, Precision p);
  /// c + 0 e + ... (order K).
  static EpsJet constant(const APComplex& c, std::size_t order);
  /// exp(a e), truncated at order K.
  static EpsJet exponential(const APComplex& a, std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  Precision precision() const { return precision_; }

  const APComplex& operator[](std::size_t j) const { return coeffs_[j]; }
  APComplex& operator[](std::size_t j) { return coeffs_[j]; }
  std::span<const APComplex> coeffs() const { return coeffs_; }

  EpsJet& operator+=(const EpsJet& rhs);
  EpsJet& operator-=(const EpsJet& rhs);
  EpsJet& operator*=(const APComplex& s);

  /// Multiplies by e^shift, dropping terms at or beyond the order.
  EpsJet shifted(std::size_t shift) const;

  /// max_j |c_j|
  Real max_norm() const;

  friend bool operator==(const EpsJet& a, const EpsJet& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<APComplex> coeffs_;
  Precision precision_;
};

EpsJet jet_add(const EpsJet& a, const EpsJet& b);
EpsJet jet_sub(const EpsJet& a, const EpsJet& b);
EpsJet jet_mul(const EpsJet& a, const EpsJet& b);
EpsJet jet_scale(const EpsJet& a, const APComplex& s);
/// Throws DomainError when the constant term vanishes.
EpsJet jet_inv(const EpsJet& a);
EpsJet jet_exp(const EpsJet& a);
/// Principal log of the constant term; throws DomainError when it vanishes.
EpsJet jet_log(const EpsJet& a);
/// (c_0 + ...)^p = exp(p log(...)) for complex p.
EpsJet jet_pow(const EpsJet& a, const APComplex& p);

inline EpsJet operator+(const EpsJet& a, const EpsJet& b) { return jet_add(a, b); }
inline EpsJet operator-(const EpsJet& a, const EpsJet& b) { return jet_sub(a, b); }
inline EpsJet operator*(const EpsJet& a, const EpsJet& b) { return jet_mul(a, b); }

}  // namespace rrh
