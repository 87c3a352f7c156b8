#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "primform/poly.hpp"

namespace primform {

/// Parses sums of terms like "x^2*y + 3/4*y^3 - z". A variable is a letter
/// followed by optional digits; "*" between factors is optional. Throws
/// ParseError on malformed input or an undeclared variable.
Poly parse_poly(std::string_view text, const std::vector<std::string>& variables);

/// Variable names occurring in `text`, sorted.
std::vector<std::string> detect_variables(std::string_view text);

/// Comma-separated monomials, e.g. "1, z, x*y".
std::vector<Monomial> parse_monomial_list(std::string_view text, const std::vector<std::string>& variables);

/// Comma-separated rationals, e.g. "1/3, 1/7".
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace primform
