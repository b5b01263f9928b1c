#include "chordlab/rational.hpp"

#include <cctype>
#include <ostream>

#include "chordlab/errors.hpp"

namespace chordlab {

BigRat::BigRat(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw Error("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

BigRat BigRat::parse(std::string_view text) {
    std::size_t pos = 0;
    auto digits = [&](std::string& out) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            out.push_back(text[pos++]);
        }
        return pos > start;
    };
    std::string num;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        if (text[pos] == '-') {
            num.push_back('-');
        }
        ++pos;
    }
    if (!digits(num)) {
        throw ParseError("expected integer in '" + std::string(text) + "'", 1, pos + 1);
    }
    std::string den = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den.clear();
        if (!digits(den)) {
            throw ParseError("expected denominator in '" + std::string(text) + "'", 1, pos + 1);
        }
    }
    if (pos != text.size()) {
        throw ParseError("trailing characters in '" + std::string(text) + "'", 1, pos + 1);
    }
    return BigRat(BigInt(num), BigInt(den));
}

BigRat& BigRat::operator/=(const BigRat& o) {
    if (o.is_zero()) {
        throw Error("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::string BigRat::to_string() const {
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRat BigRat::pow(unsigned k) const {
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), k);
    return BigRat(num, den);
}

std::ostream& operator<<(std::ostream& os, const BigRat& r) { return os << r.to_string(); }

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace chordlab
