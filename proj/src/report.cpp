#include "rrh/report.hpp"

#include <limits>

namespace rrh {

VerificationReport make_report(std::string label, std::string method, APComplex lhs, APComplex rhs,
                               double tolerance, Precision prec) {
  const Real diff = abs(lhs - rhs);
  const Real scale = abs(rhs);
  VerificationReport r{std::move(label), std::move(method), std::move(lhs), std::move(rhs)};
  r.abs_err = diff.to_double();
  if (scale.is_zero()) {
    r.rel_err = diff.is_zero() ? 0.0 : std::numeric_limits<double>::infinity();
  } else {
    r.rel_err = (diff / scale).to_double();
  }
  r.tolerance = tolerance;
  r.precision_bits = prec.bits();
  r.passed = r.rel_err <= tolerance || (scale < 1 && r.abs_err <= tolerance);
  return r;
}

}  // namespace rrh
