#pragma once

#include <cstddef>
#include <string_view>

#include "chordlab/poly.hpp"

namespace chordlab {

/// Parses a polynomial expression.
///
/// Accepted syntax is a superset of the rendering of `MVPoly::to_string`:
/// integers and `p/q` coefficients, identifiers (`[A-Za-z_][A-Za-z0-9_]*`),
/// explicit `*`, `^` with a natural exponent, `+`, `-`, unary minus,
/// parentheses, and division by a nonzero constant. Errors report `line`
/// and the 1-based column within `text`.
MVPoly parse_poly(std::string_view text, std::size_t line = 1);

} // namespace chordlab
