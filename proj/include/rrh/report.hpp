#pragma once

#include <string>

#include "rrh/precision/complex.hpp"

namespace rrh {

/// Outcome of comparing two independently computed values.
struct VerificationReport {
  std::string label;   // row identifier, e.g. "prop1 N=-1/2 n=2"
  std::string method;  // how rhs was obtained
  APComplex lhs;
  APComplex rhs;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  long precision_bits = 0;
  bool passed = false;
};

/// Fills the error fields. A report passes when rel_err <= tolerance, or when
/// |rhs| < 1 and abs_err <= tolerance.
VerificationReport make_report(std::string label, std::string method, APComplex lhs, APComplex rhs,
                               double tolerance, Precision prec);

}  // namespace rrh
