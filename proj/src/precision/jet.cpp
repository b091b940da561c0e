#include "rrh/precision/jet.hpp"

#include <algorithm>

#include "rrh/precision/error.hpp"

namespace rrh {

namespace {

void require_compatible(const EpsJet& a, const EpsJet& b, const char* op) {
  if (a.order() != b.order()) {
    throw DomainError(std::string(op) + ": jet orders differ (" + std::to_string(a.order()) + " vs " +
                      std::to_string(b.order()) + ")");
  }
}

Precision common_precision(const std::vector<APComplex>& coeffs) {
  if (coeffs.empty()) throw DomainError("EpsJet: order must be at least 1");
  Precision p = coeffs.front().precision();
  for (const auto& c : coeffs) p = min(p, c.precision());
  return p;
}

}  // namespace

EpsJet::EpsJet(std::size_t order, Precision p) : precision_(p) {
  if (order == 0) throw DomainError("EpsJet: order must be at least 1");
  coeffs_.reserve(order);
  for (std::size_t j = 0; j < order; ++j) coeffs_.emplace_back(p);
}

EpsJet::EpsJet(std::vector<APComplex> coeffs) : coeffs_(std::move(coeffs)), precision_(common_precision(coeffs_)) {}

EpsJet EpsJet::from_rationals(std::initializer_list<mpq_class> coeffs, Precision p) {
  std::vector<APComplex> c;
  c.reserve(coeffs.size());
  for (const auto& q : coeffs) c.emplace_back(q, p);
  return EpsJet(std::move(c));
}

EpsJet EpsJet::constant(const APComplex& c, std::size_t order) {
  EpsJet j(order, c.precision());
  j[0] = c;
  return j;
}

EpsJet EpsJet::exponential(const APComplex& a, std::size_t order) {
  EpsJet j(order, a.precision());
  j[0] = APComplex(1, a.precision());
  for (std::size_t k = 1; k < order; ++k) {
    j[k] = j[k - 1] * a / static_cast<long>(k);
  }
  return j;
}

EpsJet& EpsJet::operator+=(const EpsJet& rhs) {
  require_compatible(*this, rhs, "jet_add");
  for (std::size_t j = 0; j < order(); ++j) coeffs_[j] += rhs.coeffs_[j];
  precision_ = min(precision_, rhs.precision_);
  return *this;
}

EpsJet& EpsJet::operator-=(const EpsJet& rhs) {
  require_compatible(*this, rhs, "jet_sub");
  for (std::size_t j = 0; j < order(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  precision_ = min(precision_, rhs.precision_);
  return *this;
}

EpsJet& EpsJet::operator*=(const APComplex& s) {
  for (auto& c : coeffs_) c *= s;
  precision_ = min(precision_, s.precision());
  return *this;
}

EpsJet EpsJet::shifted(std::size_t shift) const {
  EpsJet out(order(), precision_);
  for (std::size_t j = shift; j < order(); ++j) out[j] = coeffs_[j - shift];
  return out;
}

Real EpsJet::max_norm() const {
  Real m(precision_);
  for (const auto& c : coeffs_) m = max(m, abs(c));
  return m;
}

EpsJet jet_add(const EpsJet& a, const EpsJet& b) {
  EpsJet r = a;
  r += b;
  return r;
}

EpsJet jet_sub(const EpsJet& a, const EpsJet& b) {
  EpsJet r = a;
  r -= b;
  return r;
}

EpsJet jet_mul(const EpsJet& a, const EpsJet& b) {
  require_compatible(a, b, "jet_mul");
  const std::size_t k = a.order();
  EpsJet r(k, min(a.precision(), b.precision()));
  for (std::size_t j = 0; j < k; ++j) {
    if (a[j].is_zero()) continue;
    for (std::size_t m = 0; m + j < k; ++m) {
      if (b[m].is_zero()) continue;
      r[j + m] += a[j] * b[m];
    }
  }
  return r;
}

EpsJet jet_scale(const EpsJet& a, const APComplex& s) {
  EpsJet r = a;
  r *= s;
  return r;
}

EpsJet jet_inv(const EpsJet& a) {
  if (a[0].is_zero()) throw DomainError("jet_inv: zero constant term");
  const std::size_t k = a.order();
  EpsJet r(k, a.precision());
  const APComplex inv0 = APComplex(1, a.precision()) / a[0];
  r[0] = inv0;
  for (std::size_t j = 1; j < k; ++j) {
    APComplex s(a.precision());
    for (std::size_t m = 1; m <= j; ++m) s += a[m] * r[j - m];
    r[j] = -(s * inv0);
  }
  return r;
}

EpsJet jet_exp(const EpsJet& a) {
  // e' = a' e  =>  j e_j = sum_{m=1}^{j} m a_m e_{j-m}
  const std::size_t k = a.order();
  EpsJet r(k, a.precision());
  r[0] = exp(a[0]);
  for (std::size_t j = 1; j < k; ++j) {
    APComplex s(a.precision());
    for (std::size_t m = 1; m <= j; ++m) s += a[m] * r[j - m] * static_cast<long>(m);
    r[j] = s / static_cast<long>(j);
  }
  return r;
}

EpsJet jet_log(const EpsJet& a) {
  // a l' = a'  =>  j a_0 l_j = j a_j - sum_{m=1}^{j-1} m l_m a_{j-m}
  if (a[0].is_zero()) throw DomainError("jet_log: zero constant term");
  const std::size_t k = a.order();
  EpsJet r(k, a.precision());
  r[0] = log(a[0]);
  for (std::size_t j = 1; j < k; ++j) {
    APComplex s = a[j] * static_cast<long>(j);
    for (std::size_t m = 1; m < j; ++m) s -= r[m] * a[j - m] * static_cast<long>(m);
    r[j] = s / (a[0] * static_cast<long>(j));
  }
  return r;
}

EpsJet jet_pow(const EpsJet& a, const APComplex& p) { return jet_exp(jet_scale(jet_log(a), p)); }

}  // namespace rrh
