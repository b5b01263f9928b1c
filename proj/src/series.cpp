#include "chordlab/series.hpp"

#include <algorithm>

#include "chordlab/errors.hpp"

namespace chordlab {

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::exp_linear(const BigRat& c, std::size_t order) {
    TruncatedSeries s(order);
    BigRat term = 1;
    for (std::size_t k = 0; k <= order; ++k) {
        s.coeffs_[k] = term;
        term *= c / BigRat(static_cast<long>(k + 1));
    }
    return s;
}

TruncatedSeries TruncatedSeries::constant(const BigRat& c, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) {
        throw Error("series orders differ: " + std::to_string(a.order()) + " vs " + std::to_string(b.order()));
    }
}

} // namespace

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require_same_order(*this, o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    require_same_order(*this, o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= o.coeffs_[k];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigRat& c) {
    for (auto& v : coeffs_) {
        v *= c;
    }
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }

std::string TruncatedSeries::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k > 0) {
            out += ", ";
        }
        out += coeffs_[k].to_string();
    }
    return "[" + out + "]";
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    const std::size_t n = a.order();
    TruncatedSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

TruncatedSeries series_inverse(const TruncatedSeries& s) {
    if (s[0].is_zero()) {
        throw BadConstantTerm("series inverse requires a nonzero constant term");
    }
    const std::size_t n = s.order();
    TruncatedSeries r(n);
    const BigRat inv0 = BigRat(1) / s[0];
    r[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        BigRat acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            acc += s[i] * r[k - i];
        }
        r[k] = -acc * inv0;
    }
    return r;
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
    if (!s[0].is_zero()) {
        throw BadConstantTerm("series_exp requires constant term 0");
    }
    const std::size_t n = s.order();
    TruncatedSeries f(n);
    f[0] = 1;
    // n f_n = sum_{k=1}^{n} k g_k f_{n-k}
    for (std::size_t m = 1; m <= n; ++m) {
        BigRat acc = 0;
        for (std::size_t k = 1; k <= m; ++k) {
            acc += BigRat(static_cast<long>(k)) * s[k] * f[m - k];
        }
        f[m] = acc / BigRat(static_cast<long>(m));
    }
    return f;
}

TruncatedSeries series_log(const TruncatedSeries& s) {
    if (!s[0].is_one()) {
        throw BadConstantTerm("series_log requires constant term 1");
    }
    const std::size_t n = s.order();
    TruncatedSeries g(n);
    // m g_m = m f_m - sum_{k=1}^{m-1} k g_k f_{m-k}
    for (std::size_t m = 1; m <= n; ++m) {
        BigRat acc = BigRat(static_cast<long>(m)) * s[m];
        for (std::size_t k = 1; k < m; ++k) {
            acc -= BigRat(static_cast<long>(k)) * g[k] * s[m - k];
        }
        g[m] = acc / BigRat(static_cast<long>(m));
    }
    return g;
}

TruncatedSeries series_pow(const TruncatedSeries& s, const BigRat& r) {
    if (!s[0].is_one()) {
        throw BadConstantTerm("series_pow requires constant term 1");
    }
    return series_exp(series_log(s) * r);
}

std::vector<BigRat> egf_sequence(const TruncatedSeries& s) {
    std::vector<BigRat> out;
    out.reserve(s.order() + 1);
    for (std::size_t k = 0; k <= s.order(); ++k) {
        out.push_back(s[k] * BigRat(factorial(static_cast<unsigned>(k))));
    }
    return out;
}

} // namespace chordlab
