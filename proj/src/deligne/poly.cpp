#include "rrh/deligne/poly.hpp"

#include <algorithm>
#include <utility>

namespace rrh::deligne {

namespace {

// Rational roots are searched only when both end coefficients are below this.
const mpz_class kRootSearchLimit = 1000000;

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> out;
  const mpz_class m = abs(n);
  for (mpz_class d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      if (d * d != m) out.push_back(m / d);
    }
  }
  return out;
}

mpq_class eval_integer(const std::vector<mpz_class>& a, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + mpq_class(*it);
  return acc;
}

// Divides a (lowest degree first) by q t - p, which must divide it exactly.
std::vector<mpz_class> divide_linear(const std::vector<mpz_class>& a, const mpz_class& q, const mpz_class& p) {
  const std::size_t n = a.size() - 1;
  std::vector<mpz_class> out(n);
  mpz_class carry = 0;
  for (std::size_t j = n; j-- > 0;) {
    // coefficient of t^j in the quotient: (a_{j+1} + p * out_{j+1}) / q
    const mpz_class top = a[j + 1] + carry;
    out[j] = top / q;
    carry = p * out[j];
  }
  return out;
}

std::string term_string(const mpq_class& c, int j) {
  std::string s;
  const mpz_class num = abs(c.get_num());
  const mpz_class& den = c.get_den();
  if (j == 0 || num != 1) s += num.get_str();
  if (j >= 1) s += "t";
  if (j >= 2) s += "^" + std::to_string(j);
  if (den != 1) s += "/" + den.get_str();
  return s;
}

std::string linear_string(const mpz_class& q, const mpz_class& p) {
  std::string s = q == 1 ? "t" : q.get_str() + "t";
  if (p > 0) s += "-" + p.get_str();
  if (p < 0) s += "+" + mpz_class(-p).get_str();
  return s;
}

std::string with_power(std::string base, int m, bool wrap) {
  if (wrap) base = "(" + base + ")";
  if (m > 1) base += "^" + std::to_string(m);
  return base;
}

}  // namespace

Poly::Poly(long c) : coeffs_{mpq_class(c)} { trim(); }

Poly::Poly(const mpq_class& c) : coeffs_{c} { trim(); }

Poly::Poly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly Poly::t() { return Poly(std::vector<mpq_class>{0, 1}); }

Poly power_of_t(int n) {
  std::vector<mpq_class> c(static_cast<std::size_t>(n) + 1, 0);
  c.back() = 1;
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class Poly::evaluate(const mpq_class& t) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

APComplex Poly::evaluate(const APComplex& t) const {
  const Precision p = t.precision();
  APComplex acc(p);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + APComplex(*it, p);
  return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpq_class> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::string Poly::expanded() const {
  if (is_zero()) return "0";
  std::string s;
  for (int j = degree(); j >= 0; --j) {
    const mpq_class& c = coeffs_[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    s += term_string(c, j);
  }
  return s;
}

std::string Poly::factored() const {
  if (degree() <= 0) return expanded();

  // P = content * Q with Q primitive in Z[t] and positive leading coefficient
  mpz_class lcm_den = 1;
  for (const auto& c : coeffs_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> q;
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    q.push_back(c.get_num() * (lcm_den / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.back().get_mpz_t());
  }
  if (q.back() < 0) g = -g;
  for (auto& a : q) a /= g;
  mpq_class content(g, lcm_den);
  content.canonicalize();

  int zero_roots = 0;
  while (q.front() == 0) {
    q.erase(q.begin());
    ++zero_roots;
  }

  // linear factors (b t - a) with multiplicity
  std::vector<std::pair<mpq_class, int>> roots;
  if (q.size() > 1 && abs(q.front()) <= kRootSearchLimit && abs(q.back()) <= kRootSearchLimit) {
    std::vector<mpq_class> candidates;
    for (const auto& a : divisors(q.front())) {
      for (const auto& b : divisors(q.back())) {
        mpq_class r(a, b);
        r.canonicalize();
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    }
    std::sort(candidates.begin(), candidates.end(), [](const mpq_class& x, const mpq_class& y) { return x > y; });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      int mult = 0;
      while (q.size() > 1 && eval_integer(q, r) == 0) {
        q = divide_linear(q, r.get_den(), r.get_num());
        ++mult;
      }
      if (mult > 0) roots.emplace_back(r, mult);
    }
  }

  const mpz_class num = abs(content.get_num());
  const mpz_class& den = content.get_den();
  const bool has_rest = q.size() > 1;
  // a lone factor with unit content needs no parentheses
  const std::size_t factor_count = (zero_roots > 0 ? 1 : 0) + roots.size() + (has_rest ? 1 : 0);
  const bool bare = factor_count == 1 && content == 1;

  std::string s = content < 0 ? "-" : "";
  if (num != 1) s += num.get_str();
  if (zero_roots > 0) s += with_power("t", zero_roots, false);
  for (const auto& [r, mult] : roots) {
    s += with_power(linear_string(r.get_den(), r.get_num()), mult, !bare || mult > 1);
  }
  if (has_rest) {
    const std::string rest = Poly(std::vector<mpq_class>(q.begin(), q.end())).expanded();
    s += bare ? rest : "(" + rest + ")";
  }
  if (den != 1) s += "/" + den.get_str();
  return s;
}

}  // namespace rrh::deligne
