#include "rrh/precision/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

#include "rrh/precision/error.hpp"

namespace rrh {

namespace {

mpfr_prec_t smaller(const Real& a, const Real& b) {
  return std::min(mpfr_get_prec(a.get()), mpfr_get_prec(b.get()));
}

template <typename Fn>
Real unary(const Real& x, Fn fn) {
  Real r(x.precision());
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real::Real(Precision p) {
  mpfr_init2(value_, p.bits());
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, Precision p) {
  mpfr_init2(value_, p.bits());
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const mpq_class& value, Precision p) {
  mpfr_init2(value_, p.bits());
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other, Precision p) {
  mpfr_init2(value_, p.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real Real::from_string(std::string_view text, Precision p) {
  Real r(p);
  std::string owned(text);
  char* end = nullptr;
  mpfr_strtofr(r.value_, owned.c_str(), &end, 10, MPFR_RNDN);
  if (end == owned.c_str() || *end != '\0') {
    throw DomainError("not a decimal number: '" + owned + "'");
  }
  return r;
}

Real Real::from_double(double value, Precision p) {
  Real r(p);
  mpfr_set_d(r.value_, value, MPFR_RNDN);
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  const size_t n = digits > 0 ? static_cast<size_t>(digits) : mpfr_get_str_ndigits(10, mpfr_get_prec(value_));
  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(mpfr_get_str(nullptr, &exp10, 10, n, value_, MPFR_RNDN),
                                             mpfr_free_str);
  std::string mant(raw.get());
  std::string out;
  if (mant.front() == '-') {
    out = "-";
    mant.erase(0, 1);
  }
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
  // value = 0.mant * 10^exp10
  const long e = static_cast<long>(exp10) - 1;
  if (e >= -6 && e < static_cast<long>(n)) {
    if (e >= 0) {
      if (static_cast<long>(mant.size()) <= e + 1) {
        out += mant + std::string(static_cast<size_t>(e + 1) - mant.size(), '0');
      } else {
        out += mant.substr(0, static_cast<size_t>(e + 1)) + "." + mant.substr(static_cast<size_t>(e + 1));
      }
    } else {
      out += "0." + std::string(static_cast<size_t>(-e - 1), '0') + mant;
    }
    return out;
  }
  out += mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  out += "e" + std::to_string(e);
  return out;
}

Real Real::operator-() const { return unary(*this, mpfr_neg); }

Real& Real::operator+=(const Real& rhs) {
  mpfr_prec_round(value_, smaller(*this, rhs), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  mpfr_prec_round(value_, smaller(*this, rhs), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  mpfr_prec_round(value_, smaller(*this, rhs), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  mpfr_prec_round(value_, smaller(*this, rhs), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r(Precision(smaller(a, b)));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(Precision(smaller(a, b)));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(Precision(smaller(a, b)));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(Precision(smaller(a, b)));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r(a.precision());
  mpfr_add_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, long b) {
  Real r(a.precision());
  mpfr_sub_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator-(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_sub(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(a.precision());
  mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, long b) {
  Real r(a.precision());
  mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator/(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_div(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }

Real floor(const Real& x) {
  Real r(x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}

Real round(const Real& x) {
  Real r(x.precision());
  mpfr_round(r.get(), x.get());
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(Precision(smaller(x, y)));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(Precision(smaller(x, y)));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real const_pi(Precision p) {
  Real r(p);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real const_log2(Precision p) {
  Real r(p);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

mpq_class to_rational(const Real& x) {
  if (!x.is_finite()) throw DomainError("to_rational: non-finite value");
  mpz_class mant;
  const mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x.get());
  mpq_class q(mant);
  if (e >= 0) {
    mpz_class scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    q *= scale;
  } else {
    mpz_class scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    q /= scale;
  }
  q.canonicalize();
  return q;
}

}  // namespace rrh
