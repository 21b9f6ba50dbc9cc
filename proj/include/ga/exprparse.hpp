#pragma once

#include "ga/golden.hpp"

#include <string>

namespace ga {

/// Exact evaluator for golden-field expressions: integers, fractions and
/// the constants tau, sigma, sqrt5 combined with + - * / and parentheses.
/// Examples: "tau/2", "-1/2", "(1-sqrt5)/2", "tau*tau - tau".
/// Throws std::invalid_argument on malformed input, std::domain_error on
/// division by zero.
GoldenNumber parse_golden_expr(const std::string& text);

}  // namespace ga
