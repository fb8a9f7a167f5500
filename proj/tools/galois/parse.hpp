#pragma once

#include <string>
#include <string_view>

#include "galois/poly.hpp"

namespace galois::cli {

/// Parses either a polynomial expression in one variable ("x^5 - 5x + 12",
/// "3/2y^2 - 1") or a bracketed coefficient list written highest degree
/// first ("[1,0,0,0,-5,12]"). Whitespace-insensitive; implicit coefficient 1
/// and implicit multiplication are accepted. Degrees above 5 are rejected.
/// Throws Error with kind parse_error or degree_out_of_range; parse errors
/// carry the offending position.
RatPoly parse_poly(std::string_view text);

/// Inverse of parse_poly for display purposes (delegates to to_string).
std::string render(const RatPoly& p);

}  // namespace galois::cli
