#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bocalc/polynomial.hpp"

namespace bocalc::parse {

// Polynomial expressions: integers, rationals a/b, variables, + − * ^ and
// parentheses, e.g. "2*x1^2 - (x2 + 1/3)*x1". Exponents are nonnegative
// integers. With an empty name list, variables are x1, x2, ... and the
// variable count is the largest index used (at least min_vars).
Polynomial<Rat> polynomial(std::string_view s, const std::vector<std::string>& names = {}, std::size_t min_vars = 0);
// As above, rejecting non-integer coefficients.
IntPoly int_polynomial(std::string_view s, const std::vector<std::string>& names = {}, std::size_t min_vars = 0);

// "2,1,1" → {2,1,1}; empty string → {}.
std::vector<int> int_list(std::string_view s);

}  // namespace bocalc::parse
