#include "rrh/flat/sections.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "rrh/precision/error.hpp"
#include "rrh/precision/special.hpp"

namespace rrh::flat {

namespace {

constexpr long kMaxGuardBits = 1L << 20;
constexpr long kMaxTerms = 1L << 22;
constexpr int kQuietTerms = 8;

APComplex branch_log(const APComplex& z, Branch branch) {
  APComplex l = log(z);
  if (branch == Branch::Minus && z.is_real() && z.re() < 0) l = conj(l);
  return l;
}

// (m + e)^-p = m^-p sum_j binom(-p, j) (e/m)^j
EpsJet shifted_power(const APComplex& p, long m, std::size_t K, Precision w) {
  EpsJet out(K, w);
  out[0] = exp(-(p * log(Real(m, w))));
  for (std::size_t j = 1; j < K; ++j) {
    out[j] = out[j - 1] * (-p - static_cast<long>(j - 1)) / (static_cast<long>(j) * m);
  }
  return out;
}

// Calls visit(l, Q_l) for Q_l = z^l prod_{m<=l} (m+e)^-p until the terms
// become negligible; returns the number of terms.
template <typename Visit>
long sum_series(const APComplex& p, const APComplex& z, std::size_t K, Precision w, Visit&& visit) {
  EpsJet q = EpsJet::constant(APComplex(1, w), K);
  Real largest = q.max_norm();
  const Real tiny = ldexp(Real(1, w), -w.bits());
  int quiet = 0;
  for (long l = 0; l < kMaxTerms; ++l) {
    if (l > 0) {
      q = jet_mul(q, shifted_power(p, l, K, w));
      q *= z;
    }
    visit(l, q);
    const Real size = q.max_norm();
    if (size > largest) largest = size;
    if (size <= tiny * largest) {
      if (++quiet >= kQuietTerms) return l + 1;
    } else {
      quiet = 0;
    }
  }
  throw DomainError("psi_jet: series did not settle");
}

// The ratios are normalized by the (1,0) entry, which is therefore exactly
// 1 (and its transpose -1) rather than x/x after rounding.
std::optional<long> normalizing_pair(std::size_t i, std::size_t j) {
  if (i == 1 && j == 0) return 1;
  if (i == 0 && j == 1) return -1;
  return std::nullopt;
}

void check_series_domain(const APComplex& N, const APComplex& z) {
  if (z.is_zero()) throw DomainError("psi_jet: z must be non-zero");
  const Real rp = N.re() + 2;
  if (rp < 0) throw DomainError("psi_jet: the series diverges for Re(N+2) < 0");
  if (rp.is_zero() && abs(z) >= 1) throw DomainError("psi_jet: the series needs |z| < 1 when Re(N+2) = 0");
}

EpsJet rounded(const EpsJet& j, Precision p) {
  std::vector<APComplex> coeffs;
  coeffs.reserve(j.order());
  for (const auto& c : j.coeffs()) coeffs.push_back(c.with_precision(p));
  return EpsJet(std::move(coeffs));
}

}  // namespace

GammaCoeffs gamma_class_coeffs(const APComplex& N, std::size_t K, Precision prec) {
  if (K < 2) throw DomainError("gamma_class_coeffs: K must be at least 2");
  const Precision w = prec.guarded();
  const EpsJet d = gamma_power_jet(N.with_precision(w) + 2, K, w);
  const EpsJet c = jet_mul(d, EpsJet::exponential(i_pi(w) * 2, K));
  return {rounded(d, prec), rounded(c, prec)};
}

long series_guard_bits(const APComplex& N, const APComplex& z) {
  const double rp = N.re().to_double() + 2.0;
  if (rp <= 0.0) return 64;
  const double growth = 3.0 * rp * std::pow(abs(z).to_double(), 1.0 / rp) / std::numbers::ln2;
  if (!(growth < static_cast<double>(kMaxGuardBits))) throw DomainError("psi_jet: |z| is too large for this N");
  return static_cast<long>(std::ceil(growth)) + 64;
}

FrobeniusData psi_jet(const APComplex& N, const APComplex& z, std::size_t K, Precision prec, Branch branch,
                      Normalization norm) {
  if (K < 1) throw DomainError("psi_jet: K must be at least 1");
  check_series_domain(N, z);
  const Precision w = prec + series_guard_bits(N, z);
  const APComplex zw = z.with_precision(w);
  const APComplex p = N.with_precision(w) + 2;
  const APComplex inv_z = APComplex(1, w) / zw;

  EpsJet sum(K, w);
  EpsJet sum_prime(K, w);
  const long terms = sum_series(p, zw, K, w, [&](long l, const EpsJet& q) {
    sum += q;
    // d/dz z^(l+e) = (l+e) z^(l+e) / z
    EpsJet dq = q;
    dq *= APComplex(l, w);
    dq += q.shifted(1);
    dq *= inv_z;
    sum_prime += dq;
  });

  EpsJet z_eps = EpsJet::exponential(branch_log(zw, branch), K);
  if (norm == Normalization::One) z_eps = jet_mul(z_eps, EpsJet::exponential(i_pi(w) * 2, K));
  return {N, z, K, rounded(jet_mul(z_eps, sum), prec), rounded(jet_mul(z_eps, sum_prime), prec), prec.bits(), terms};
}

APComplex wronskian_ratio(const FrobeniusData& data, std::size_t i, std::size_t j) {
  if (i >= data.K || j >= data.K || data.K < 2) throw DomainError("wronskian_ratio: indices must be below K");
  const auto& f = data.psi;
  const auto& df = data.psi_prime;
  const APComplex a = f[1] * df[0];
  const APComplex b = f[0] * df[1];
  const APComplex denom = a - b;
  const Real floor = ldexp(abs(a) + abs(b), -data.precision_bits + 16);
  if (abs(denom) <= floor) throw DegeneratePointError("wronskian_ratio: the (1,0) Wronskian vanishes at this z");
  if (const auto unit = normalizing_pair(i, j)) return APComplex(*unit, denom.precision());
  return (f[i] * df[j] - f[j] * df[i]) / denom;
}

APComplex wronskian_ratio(const APComplex& N, const APComplex& z, std::size_t i, std::size_t j, std::size_t K,
                          Precision prec, Branch branch) {
  return wronskian_ratio(psi_jet(N, z, K, prec, branch), i, j);
}

APComplex gamma_rhs(const GammaCoeffs& g, std::size_t i, std::size_t j) {
  const std::size_t K = g.d.order();
  if (i >= K || j >= K) throw DomainError("gamma_rhs: indices must be below K");
  const APComplex denom = g.c[1] * g.d[0] - g.c[0] * g.d[1];
  if (const auto unit = normalizing_pair(i, j)) return APComplex(*unit, denom.precision());
  return (g.c[i] * g.d[j] - g.c[j] * g.d[i]) / denom;
}

APComplex gamma_rhs(const APComplex& N, std::size_t i, std::size_t j, std::size_t K, Precision prec) {
  return gamma_rhs(gamma_class_coeffs(N, K, prec), i, j);
}

ClaimReport claim_report(const APComplex& N, const std::vector<APComplex>& z_list,
                         std::pair<std::size_t, std::size_t> box, std::size_t K, Precision prec, Branch branch) {
  if (z_list.empty()) throw DomainError("claim_report: empty z list");
  for (const auto& z : z_list) {
    if (!z.is_real() || z.re() >= 0) throw DomainError("claim_report: every z must be a negative real");
  }
  // the trend is read along the list, i.e. in growing |z|
  for (std::size_t k = 1; k < z_list.size(); ++k) {
    if (!(z_list[k].re() < z_list[k - 1].re())) throw DomainError("claim_report: z list must be strictly decreasing");
  }
  if (K < 2) throw DomainError("claim_report: K must be at least 2");

  ClaimReport report{N, z_list, K, box, {}, {}};
  if (!N.is_real() || N.re() <= 2) report.warnings.emplace_back("the claim is stated for real N > 2");

  const GammaCoeffs g = gamma_class_coeffs(N, K, prec);
  std::vector<FrobeniusData> data;
  data.reserve(z_list.size());
  for (const auto& z : z_list) data.push_back(psi_jet(N, z, K, prec, branch));

  const double slack = std::ldexp(1.0, static_cast<int>(-prec.bits() + 16));
  const std::size_t i_end = std::min(box.first, K);
  for (std::size_t i = 1; i < i_end; ++i) {
    for (std::size_t j = 0; j < std::min(i, box.second); ++j) {
      ClaimRow row{i, j, {}, true, 0.0};
      const APComplex rhs = gamma_rhs(g, i, j);
      double previous = std::numeric_limits<double>::infinity();
      for (std::size_t s = 0; s < data.size(); ++s) {
        const std::string label =
            "(" + std::to_string(i) + "," + std::to_string(j) + ") z=" + z_list[s].re().to_string(12);
        VerificationReport entry =
            make_report(label, "wronskian-vs-gamma-class", wronskian_ratio(data[s], i, j), rhs, 0.0, prec);
        entry.tolerance = previous + slack;
        entry.passed = entry.abs_err <= entry.tolerance;
        row.non_increasing = row.non_increasing && entry.passed;
        previous = entry.abs_err;
        row.entries.push_back(std::move(entry));
      }
      row.final_discrepancy = previous;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

Real integer_ode_residual(long N, const APComplex& z, std::size_t K, Precision prec, Branch branch) {
  if (N < 1) throw DomainError("integer_ode_residual: N must be a positive integer");
  if (static_cast<std::size_t>(N) + 3 > K) throw DomainError("integer_ode_residual: needs N <= K - 3");
  const APComplex Nc(N, prec);
  check_series_domain(Nc, z);
  const Precision w = prec + series_guard_bits(Nc, z);
  const long p = N + 2;
  const APComplex zw = z.with_precision(w);

  // sum Q_l (l+e)^p and sum Q_l
  EpsJet applied(K, w);
  EpsJet plain(K, w);
  sum_series(APComplex(p, w), zw, K, w, [&](long l, const EpsJet& q) {
    plain += q;
    EpsJet lifted(K, w);
    mpz_class binom = 1;
    mpz_class lpow;
    for (long j = 0; j <= p && static_cast<std::size_t>(j) < K; ++j) {
      mpz_pow_ui(lpow.get_mpz_t(), mpz_class(l).get_mpz_t(), static_cast<unsigned long>(p - j));
      lifted[static_cast<std::size_t>(j)] = APComplex(mpq_class(binom * lpow), w);
      binom = binom * (p - j) / (j + 1);
    }
    applied += jet_mul(lifted, q);
  });

  const EpsJet z_eps = EpsJet::exponential(branch_log(zw, branch), K);
  const EpsJet inv_gamma = gamma_power_jet(APComplex(-p, w), K, w);
  const EpsJet scale = jet_mul(inv_gamma, z_eps);
  const EpsJet lhs = jet_mul(scale, applied);
  EpsJet zf = jet_mul(scale, plain);
  zf *= zw;
  const EpsJet boundary = scale.shifted(static_cast<std::size_t>(p));
  const EpsJet residual = lhs - zf - boundary;
  return residual.max_norm() / max(Real(1, w), lhs.max_norm());
}

}  // namespace rrh::flat
