#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chordlab {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class BigRat {
  public:
    BigRat() = default;
    BigRat(long v) : value_(v) {}                   // NOLINT(google-explicit-constructor)
    BigRat(int v) : value_(static_cast<long>(v)) {} // NOLINT(google-explicit-constructor)
    BigRat(const BigInt& v) : value_(v) {}          // NOLINT(google-explicit-constructor)
    BigRat(const BigInt& num, const BigInt& den);
    explicit BigRat(const mpq_class& v) : value_(v) { value_.canonicalize(); }

    /// Parses `p` or `p/q` with optional leading sign.
    static BigRat parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    const mpq_class& raw() const noexcept { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    BigRat abs() const { return BigRat(::abs(value_)); }

    std::string to_string() const;

    BigRat& operator+=(const BigRat& o) { value_ += o.value_; return *this; }
    BigRat& operator-=(const BigRat& o) { value_ -= o.value_; return *this; }
    BigRat& operator*=(const BigRat& o) { value_ *= o.value_; return *this; }
    BigRat& operator/=(const BigRat& o);

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }
    BigRat operator-() const { return BigRat(mpq_class(-value_)); }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    BigRat pow(unsigned k) const;

  private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRat& r);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

} // namespace chordlab
