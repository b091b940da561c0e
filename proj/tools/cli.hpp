#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rrh/precision/complex.hpp"

namespace rrh::cli {

/// A command-line number. `exact` is set for integers and p/q literals with no
/// imaginary part; decimals are rounded at the run precision.
struct Number {
  APComplex value;
  std::optional<mpq_class> exact;
};

/// Accepts "3", "-1/2", "0.25", "1e-3", "2i", "-1/2+3/4i", "1.5-2i".
/// Throws DomainError on anything else.
Number parse_number(std::string_view text, Precision prec);

/// Runs one invocation. `args` excludes the program name. Returns the exit
/// code: 0 pass, 1 verification failure, 2 usage or domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rrh::cli
