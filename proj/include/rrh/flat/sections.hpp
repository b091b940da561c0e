#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rrh/precision/jet.hpp"
#include "rrh/report.hpp"

/// Frobenius-type solutions of the interpolated quantum differential
/// equation D^(N+2) - z, expanded in the exponent shift e, and the gamma-class
/// comparison of their Wronskians.
namespace rrh::flat {

/// Branch of Log z on the negative real axis: arg = +pi or arg = -pi.
/// Off the axis both are the principal logarithm.
enum class Branch { Plus, Minus };

/// Which gamma class multiplies the series: Gamma(1+e)^(N+2) (Zero), or the
/// same times exp(2 pi i e) (One).
enum class Normalization { Zero, One };

struct FrobeniusData {
  APComplex N;
  APComplex z;
  std::size_t K;
  /// Psi(e, z) = sum_k Psi_k(z) e^k
  EpsJet psi;
  /// d Psi / dz, term by term.
  EpsJet psi_prime;
  long precision_bits;
  /// Number of series terms summed.
  long terms;
};

struct GammaCoeffs {
  /// Gamma(1+e)^(N+2)
  EpsJet d;
  /// Gamma(1+e)^(N+2) exp(2 pi i e)
  EpsJet c;
};

GammaCoeffs gamma_class_coeffs(const APComplex& N, std::size_t K, Precision prec);

/// Extra working bits for the series at (N, z); see psi_jet.
long series_guard_bits(const APComplex& N, const APComplex& z);

/// Psi(e, z) = z^e sum_l z^l prod_{m<=l} (m+e)^-(N+2), i.e.
/// Gamma(1+e)^(N+2) sum_l z^(l+e) / Gamma(1+l+e)^(N+2), as an order-K jet.
///
/// Terms are accumulated at prec + series_guard_bits and summation stops
/// after 8 consecutive terms below 2^-(prec+guard) of the largest term.
/// DomainError for z = 0, for Re(N+2) < 0, and for Re(N+2) = 0 with |z| >= 1.
FrobeniusData psi_jet(const APComplex& N, const APComplex& z, std::size_t K, Precision prec,
                      Branch branch = Branch::Plus, Normalization norm = Normalization::Zero);

/// (Psi_i Psi'_j - Psi_j Psi'_i) / (Psi_1 Psi'_0 - Psi_0 Psi'_1).
/// DegeneratePointError when the denominator vanishes at working precision.
APComplex wronskian_ratio(const FrobeniusData& data, std::size_t i, std::size_t j);
APComplex wronskian_ratio(const APComplex& N, const APComplex& z, std::size_t i, std::size_t j, std::size_t K,
                          Precision prec, Branch branch = Branch::Plus);

/// (c_i d_j - c_j d_i) / (c_1 d_0 - c_0 d_1).
APComplex gamma_rhs(const GammaCoeffs& g, std::size_t i, std::size_t j);
APComplex gamma_rhs(const APComplex& N, std::size_t i, std::size_t j, std::size_t K, Precision prec);

/// One (i, j) pair followed along the z list.
struct ClaimRow {
  std::size_t i;
  std::size_t j;
  /// One entry per z: lhs = Wronskian ratio, rhs = gamma-class ratio,
  /// abs_err = discrepancy. tolerance holds the previous discrepancy (plus
  /// rounding slack), so `passed` marks a step that did not increase it.
  std::vector<VerificationReport> entries;
  bool non_increasing = true;
  double final_discrepancy = 0.0;
};

struct ClaimReport {
  APComplex N;
  std::vector<APComplex> z_list;
  std::size_t K;
  std::pair<std::size_t, std::size_t> box;
  std::vector<ClaimRow> rows;
  std::vector<std::string> warnings;
};

/// Rows for every pair j < i with i < box.first and j < box.second (both
/// below K). z_list must be strictly decreasing negative reals. Records
/// trends only.
ClaimReport claim_report(const APComplex& N, const std::vector<APComplex>& z_list,
                         std::pair<std::size_t, std::size_t> box, std::size_t K, Precision prec,
                         Branch branch = Branch::Plus);

/// For integer N >= 1 with N <= K - 3, the max-norm of
///   D^(N+2) F - z F - e^(N+2) z^e / Gamma(1+e)^(N+2),
/// where F = Psi / Gamma(1+e)^(N+2) and D = z d/dz acts term-wise, divided
/// by max(1, |D^(N+2) F|).
Real integer_ode_residual(long N, const APComplex& z, std::size_t K, Precision prec, Branch branch = Branch::Plus);

}  // namespace rrh::flat
