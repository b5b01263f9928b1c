#include "chordlab/sequences.hpp"

#include <vector>

namespace chordlab {

MVPoly rising_factorial(const BigRat& step, unsigned n, const std::string& var) {
    MVPoly r(1);
    const MVPoly q = MVPoly::variable(var);
    for (unsigned i = 0; i < n; ++i) {
        r *= q + MVPoly(step * BigRat(static_cast<long>(i)));
    }
    return r;
}

namespace {

// Triangle rows 0..n of the recurrence T(m,k) = T(m-1,k-1) + w(m,k) T(m-1,k).
template <typename Weight>
BigInt triangle(unsigned n, unsigned k, Weight weight) {
    if (k > n) {
        return 0;
    }
    std::vector<BigInt> row(n + 1, 0);
    row[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        for (unsigned j = m; j >= 1; --j) {
            row[j] = row[j - 1] + weight(m, j) * row[j];
        }
        row[0] = 0;
    }
    return row[k];
}

} // namespace

BigInt stirling1_unsigned(unsigned n, unsigned k) {
    return triangle(n, k, [](unsigned m, unsigned) { return BigInt(m - 1); });
}

BigInt stirling2(unsigned n, unsigned k) {
    return triangle(n, k, [](unsigned, unsigned j) { return BigInt(j); });
}

BigInt catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

BigInt narayana(unsigned n, unsigned k) {
    if (n == 0 || k < 1 || k > n) {
        return 0;
    }
    return binomial(n, k - 1) * binomial(n, k) / n;
}

BigInt double_factorial_odd(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 1; i <= n; ++i) {
        r *= 2 * i - 1;
    }
    return r;
}

BigInt derangement_count(unsigned n) {
    BigRat acc = 0;
    BigRat sign = 1;
    for (unsigned i = 0; i <= n; ++i) {
        acc += sign / BigRat(factorial(i));
        sign = -sign;
    }
    acc *= BigRat(factorial(n));
    return acc.numerator();
}

} // namespace chordlab
