#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "chordlab/poly.hpp"

namespace chordlab {

/// Coefficients gamma_j of p = sum_j gamma_j (xy)^j (x+y)^(d-2j), where p is
/// homogeneous of degree d in (x, y) and symmetric under x <-> y. The
/// gamma_j are polynomials in the remaining variables; zero entries are
/// omitted and j increases along the list.
///
/// Throws NotHomogeneous or NotSymmetric when the peeling leaves a remainder.
std::vector<std::pair<unsigned, MVPoly>> gamma_expand(const MVPoly& p, const std::string& x, const std::string& y);

/// Inverse of gamma_expand for a given total degree d.
MVPoly gamma_reassemble(const std::vector<std::pair<unsigned, MVPoly>>& gammas, const std::string& x,
                        const std::string& y, unsigned degree);

using ESymKey = std::array<unsigned, 3>;

/// Coefficients c_{ijk} of p = sum c_{ijk} e1^i e2^j e3^k in the elementary
/// symmetric polynomials of `vars`. `p` may only involve those three
/// variables. Entries are sorted by (i, j, k). Throws NotSymmetric.
std::vector<std::pair<ESymKey, BigRat>> esym_expand(const MVPoly& p, const std::array<std::string, 3>& vars);

/// e1, e2, e3 of the given three variables.
std::array<MVPoly, 3> elementary_symmetric(const std::array<std::string, 3>& vars);

/// sum c_{ijk} e1^i e2^j e3^k with e_r replaced by the given polynomials.
MVPoly esym_reassemble(const std::vector<std::pair<ESymKey, BigRat>>& coeffs, const std::array<MVPoly, 3>& basis);

} // namespace chordlab
