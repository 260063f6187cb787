#pragma once

#include <string>
#include <string_view>

#include "apolar/polynomial.hpp"

namespace apolar {

// Canonical text form: terms largest-first in the diagonal order, exact
// fraction coefficients, unit coefficients omitted, e.g.
//   "a_{1,1}*a_{2,2} - a_{1,2}*a_{2,1}"   "-1/24*a_{1,1}^3 + 2"   "0"
std::string format_polynomial(const Polynomial& p);
std::string format_monomial(const Monomial& m, const VariableGrid& grid, Ring ring);

// Inverse of format_polynomial. Also accepts non-canonical term order,
// repeated monomials, and skew cells written below the diagonal (x_{2,1}
// reads as -x_{1,2}). Throws UsageError on malformed input.
Polynomial parse_polynomial(std::string_view text, Ring ring, const VariableGrid& grid);

} // namespace apolar
