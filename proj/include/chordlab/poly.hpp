#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chordlab/rational.hpp"

namespace chordlab {

/// Product of named variables with positive exponents, kept sorted by name.
class Monomial {
  public:
    using Factor = std::pair<std::string, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(std::vector<Factor> factors);
    static Monomial variable(std::string name, std::uint32_t exponent = 1);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }
    std::uint32_t degree() const noexcept;
    std::uint32_t exponent(std::string_view var) const noexcept;

    /// Returns a copy with `var` raised to `exponent` (0 removes it).
    Monomial with_exponent(std::string_view var, std::uint32_t exponent) const;

    bool divides(const Monomial& other) const noexcept;
    Monomial operator*(const Monomial& other) const;
    /// Exact quotient; caller guarantees `divisor.divides(*this)`.
    Monomial operator/(const Monomial& divisor) const;

    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

  private:
    std::vector<Factor> factors_;
};

/// Graded lexicographic comparison over sorted variable names.
/// Returns a positive value when `a` is greater, negative when smaller.
int compare_graded_lex(const Monomial& a, const Monomial& b) noexcept;

struct GradedLexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        return compare_graded_lex(a, b) > 0;
    }
};

class MVPoly;
using Bindings = std::map<std::string, MVPoly, std::less<>>;
using Point = std::map<std::string, BigRat, std::less<>>;

/// Exact multivariate polynomial with rational coefficients.
///
/// Terms iterate in graded-lex descending order, which is also the
/// rendering order of `to_string`.
class MVPoly {
  public:
    using Terms = std::map<Monomial, BigRat, GradedLexDescending>;

    MVPoly() = default;
    MVPoly(const BigRat& c);  // NOLINT(google-explicit-constructor)
    MVPoly(long c) : MVPoly(BigRat(c)) {} // NOLINT(google-explicit-constructor)
    MVPoly(int c) : MVPoly(BigRat(c)) {}  // NOLINT(google-explicit-constructor)
    MVPoly(const Monomial& m, const BigRat& c = 1);

    static MVPoly variable(std::string name);
    /// Parses the text format (see poly_text.hpp).
    static MVPoly parse(std::string_view text);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    std::size_t size() const noexcept { return terms_.size(); }
    BigRat coefficient(const Monomial& m) const;
    BigRat constant_term() const { return coefficient(Monomial{}); }
    std::set<std::string> variables() const;
    std::uint32_t total_degree() const noexcept;
    std::uint32_t degree_in(std::string_view var) const noexcept;

    /// Adds `c * m`, dropping the term if the coefficient cancels.
    void add_term(const Monomial& m, const BigRat& c);

    MVPoly& operator+=(const MVPoly& o);
    MVPoly& operator-=(const MVPoly& o);
    MVPoly& operator*=(const MVPoly& o);
    MVPoly& operator*=(const BigRat& c);
    friend MVPoly operator+(MVPoly a, const MVPoly& b) { return a += b; }
    friend MVPoly operator-(MVPoly a, const MVPoly& b) { return a -= b; }
    friend MVPoly operator*(const MVPoly& a, const MVPoly& b);
    friend MVPoly operator*(MVPoly a, const BigRat& c) { return a *= c; }
    friend MVPoly operator*(const BigRat& c, MVPoly a) { return a *= c; }
    MVPoly operator-() const;

    friend bool operator==(const MVPoly& a, const MVPoly& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

  private:
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const MVPoly& p);

MVPoly poly_add(const MVPoly& a, const MVPoly& b);
MVPoly poly_mul(const MVPoly& a, const MVPoly& b);
MVPoly poly_pow(const MVPoly& a, unsigned k);
MVPoly poly_partial(const MVPoly& a, std::string_view var);

/// Simultaneous substitution; unbound variables are left intact.
MVPoly poly_subst(const MVPoly& a, const Bindings& bindings);
BigRat poly_eval(const MVPoly& a, const Point& point);

/// Applies `f` to every monomial and re-collects terms.
MVPoly map_monomials(const MVPoly& a, const std::function<Monomial(const Monomial&)>& f);

/// Divides every term by `m`; throws if some term is not divisible.
MVPoly divide_by_monomial(const MVPoly& a, const Monomial& m);

/// Swaps two variables.
MVPoly swap_variables(const MVPoly& a, std::string_view u, std::string_view v);

/// Groups terms by the exponents of `vars`; values are polynomials in the
/// remaining variables.
std::map<std::vector<std::uint32_t>, MVPoly> collect(const MVPoly& a, const std::vector<std::string>& vars);

/// x^lo + x^(lo+1) + ... + x^hi (zero when lo > hi).
MVPoly power_range(const std::string& var, unsigned lo, unsigned hi);

} // namespace chordlab
