#pragma once

// Text form of rational functions: variables x1..xN, integer literals,
// + - * / and ^ with an integer (possibly negative) exponent, parentheses.
// Whitespace is insignificant.

#include <cstddef>
#include <string_view>

#include "clusterbench/exact_algebra.hpp"

namespace clusterbench {

/// Parses `text` as an element of Q(x1..x_nvars). Throws ParseError on
/// malformed input or a variable index above nvars, DomainError on division
/// by zero.
RationalFunction parse_expression(std::string_view text, std::size_t nvars);

/// Largest variable index mentioned in `text` (0 when none).
std::size_t highest_variable(std::string_view text);

}  // namespace clusterbench
