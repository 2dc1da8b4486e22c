#pragma once

#include "nphk/polynomial.hpp"

#include <string_view>

namespace nphk {

// Grammar: sums and differences of products of rational literals, x, y and
// parenthesised subexpressions, each optionally raised to a nonnegative
// integer power. Juxtaposition multiplies ("3x^2y"). Throws ParseError.
BivariatePolynomial parse_polynomial(std::string_view text);

}  // namespace nphk
