#pragma once

#include <string>

#include "chordlab/poly.hpp"
#include "chordlab/rational.hpp"

namespace chordlab {

/// q (q + c) (q + 2c) ... (q + (n-1)c) as a polynomial in `var`.
MVPoly rising_factorial(const BigRat& step, unsigned n, const std::string& var = "q");

/// Signless Stirling numbers of the first kind c(n, k).
BigInt stirling1_unsigned(unsigned n, unsigned k);
/// Stirling numbers of the second kind S(n, k).
BigInt stirling2(unsigned n, unsigned k);

BigInt catalan(unsigned n);
/// N(n, k) = (1/n) C(n, k-1) C(n, k); zero outside 1 <= k <= n.
BigInt narayana(unsigned n, unsigned k);
/// (2n-1)!! with (-1)!! = 1.
BigInt double_factorial_odd(unsigned n);
/// n! * sum_{i=0}^{n} (-1)^i / i!.
BigInt derangement_count(unsigned n);

} // namespace chordlab
