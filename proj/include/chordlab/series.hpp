#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "chordlab/rational.hpp"

namespace chordlab {

/// Power series in z truncated after z^order, exact rational coefficients.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
    TruncatedSeries(std::size_t order, std::vector<BigRat> coeffs);

    /// exp(c z) truncated at `order`.
    static TruncatedSeries exp_linear(const BigRat& c, std::size_t order);
    static TruncatedSeries constant(const BigRat& c, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const BigRat& operator[](std::size_t k) const { return coeffs_.at(k); }
    BigRat& operator[](std::size_t k) { return coeffs_.at(k); }
    const std::vector<BigRat>& coeffs() const noexcept { return coeffs_; }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const BigRat& c);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const BigRat& c) { return a *= c; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    std::string to_string() const;

  private:
    std::vector<BigRat> coeffs_;
};

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// Requires a nonzero constant term.
TruncatedSeries series_inverse(const TruncatedSeries& s);
/// Requires constant term 0.
TruncatedSeries series_exp(const TruncatedSeries& s);
/// Requires constant term 1.
TruncatedSeries series_log(const TruncatedSeries& s);
/// exp(r log s); requires constant term 1.
TruncatedSeries series_pow(const TruncatedSeries& s, const BigRat& r);

/// Coefficient k multiplied by k!, i.e. the EGF sequence.
std::vector<BigRat> egf_sequence(const TruncatedSeries& s);

} // namespace chordlab
