#include "chordlab/poly.hpp"

#include <algorithm>
#include <ostream>

#include "chordlab/errors.hpp"
#include "chordlab/poly_text.hpp"

namespace chordlab {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    for (auto& f : factors) {
        if (f.first.empty()) {
            throw Error("empty variable name");
        }
        if (f.second == 0) {
            continue;
        }
        if (!factors_.empty() && factors_.back().first == f.first) {
            factors_.back().second += f.second;
        } else {
            factors_.push_back(std::move(f));
        }
    }
}

Monomial Monomial::variable(std::string name, std::uint32_t exponent) {
    return Monomial({{std::move(name), exponent}});
}

std::uint32_t Monomial::degree() const noexcept {
    std::uint32_t d = 0;
    for (const auto& f : factors_) {
        d += f.second;
    }
    return d;
}

std::uint32_t Monomial::exponent(std::string_view var) const noexcept {
    for (const auto& f : factors_) {
        if (f.first == var) {
            return f.second;
        }
    }
    return 0;
}

Monomial Monomial::with_exponent(std::string_view var, std::uint32_t exponent) const {
    Monomial r;
    bool placed = false;
    for (const auto& f : factors_) {
        if (!placed && f.first >= var) {
            placed = true;
            if (exponent > 0) {
                r.factors_.emplace_back(std::string(var), exponent);
            }
            if (f.first == var) {
                continue;
            }
        }
        r.factors_.push_back(f);
    }
    if (!placed && exponent > 0) {
        r.factors_.emplace_back(std::string(var), exponent);
    }
    return r;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    auto it = other.factors_.begin();
    for (const auto& f : factors_) {
        while (it != other.factors_.end() && it->first < f.first) {
            ++it;
        }
        if (it == other.factors_.end() || it->first != f.first || it->second < f.second) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            r.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            r.factors_.push_back(*b++);
        } else {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
    Monomial r;
    auto b = divisor.factors_.begin();
    for (const auto& f : factors_) {
        if (b != divisor.factors_.end() && b->first == f.first) {
            if (f.second > b->second) {
                r.factors_.emplace_back(f.first, f.second - b->second);
            }
            ++b;
        } else {
            r.factors_.push_back(f);
        }
    }
    return r;
}

std::string Monomial::to_string() const {
    if (factors_.empty()) {
        return "1";
    }
    std::string out;
    for (const auto& [var, e] : factors_) {
        if (!out.empty()) {
            out += '*';
        }
        out += var;
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

int compare_graded_lex(const Monomial& a, const Monomial& b) noexcept {
    auto da = a.degree();
    auto db = b.degree();
    if (da != db) {
        return da > db ? 1 : -1;
    }
    auto ia = a.factors().begin();
    auto ib = b.factors().begin();
    while (ia != a.factors().end() && ib != b.factors().end()) {
        if (ia->first == ib->first) {
            if (ia->second != ib->second) {
                return ia->second > ib->second ? 1 : -1;
            }
            ++ia;
            ++ib;
        } else if (ia->first < ib->first) {
            return 1;
        } else {
            return -1;
        }
    }
    if (ia != a.factors().end()) {
        return 1;
    }
    if (ib != b.factors().end()) {
        return -1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// MVPoly

MVPoly::MVPoly(const BigRat& c) {
    if (!c.is_zero()) {
        terms_.emplace(Monomial{}, c);
    }
}

MVPoly::MVPoly(const Monomial& m, const BigRat& c) {
    if (!c.is_zero()) {
        terms_.emplace(m, c);
    }
}

MVPoly MVPoly::variable(std::string name) { return MVPoly(Monomial::variable(std::move(name))); }

MVPoly MVPoly::parse(std::string_view text) { return parse_poly(text); }

bool MVPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

BigRat MVPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigRat(0) : it->second;
}

std::set<std::string> MVPoly::variables() const {
    std::set<std::string> vars;
    for (const auto& [m, c] : terms_) {
        for (const auto& f : m.factors()) {
            vars.insert(f.first);
        }
    }
    return vars;
}

std::uint32_t MVPoly::total_degree() const noexcept {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::uint32_t MVPoly::degree_in(std::string_view var) const noexcept {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) {
        d = std::max(d, m.exponent(var));
    }
    return d;
}

void MVPoly::add_term(const Monomial& m, const BigRat& c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

MVPoly& MVPoly::operator+=(const MVPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

MVPoly& MVPoly::operator-=(const MVPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

MVPoly& MVPoly::operator*=(const MVPoly& o) {
    *this = *this * o;
    return *this;
}

MVPoly& MVPoly::operator*=(const BigRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) {
        v *= c;
    }
    return *this;
}

MVPoly operator*(const MVPoly& a, const MVPoly& b) {
    MVPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

MVPoly MVPoly::operator-() const {
    MVPoly r = *this;
    for (auto& [m, c] : r.terms_) {
        c = -c;
    }
    return r;
}

std::string MVPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            if (c.sign() < 0) {
                out += '-';
            }
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        BigRat mag = c.abs();
        if (m.is_one()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += m.to_string();
        } else {
            out += mag.to_string();
            out += '*';
            out += m.to_string();
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MVPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Free operations

MVPoly poly_add(const MVPoly& a, const MVPoly& b) { return a + b; }

MVPoly poly_mul(const MVPoly& a, const MVPoly& b) { return a * b; }

MVPoly poly_pow(const MVPoly& a, unsigned k) {
    MVPoly result(1);
    MVPoly base = a;
    while (k > 0) {
        if (k & 1U) {
            result *= base;
        }
        k >>= 1U;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

MVPoly poly_partial(const MVPoly& a, std::string_view var) {
    MVPoly r;
    for (const auto& [m, c] : a.terms()) {
        auto e = m.exponent(var);
        if (e == 0) {
            continue;
        }
        r.add_term(m.with_exponent(var, e - 1), c * BigRat(static_cast<long>(e)));
    }
    return r;
}

MVPoly poly_subst(const MVPoly& a, const Bindings& bindings) {
    // power cache per bound variable
    std::map<std::pair<std::string, std::uint32_t>, MVPoly> powers;
    auto power_of = [&](const std::string& var, const MVPoly& value, std::uint32_t e) -> const MVPoly& {
        auto key = std::make_pair(var, e);
        auto it = powers.find(key);
        if (it == powers.end()) {
            it = powers.emplace(key, poly_pow(value, e)).first;
        }
        return it->second;
    };
    MVPoly r;
    for (const auto& [m, c] : a.terms()) {
        std::vector<Monomial::Factor> kept;
        MVPoly term(c);
        for (const auto& [var, e] : m.factors()) {
            auto it = bindings.find(var);
            if (it == bindings.end()) {
                kept.emplace_back(var, e);
            } else {
                term *= power_of(var, it->second, e);
            }
        }
        if (!kept.empty()) {
            term *= MVPoly(Monomial(std::move(kept)));
        }
        r += term;
    }
    return r;
}

BigRat poly_eval(const MVPoly& a, const Point& point) {
    BigRat total = 0;
    for (const auto& [m, c] : a.terms()) {
        BigRat v = c;
        for (const auto& [var, e] : m.factors()) {
            auto it = point.find(var);
            if (it == point.end()) {
                throw UnboundVariable(var);
            }
            v *= it->second.pow(e);
        }
        total += v;
    }
    return total;
}

MVPoly map_monomials(const MVPoly& a, const std::function<Monomial(const Monomial&)>& f) {
    MVPoly r;
    for (const auto& [m, c] : a.terms()) {
        r.add_term(f(m), c);
    }
    return r;
}

MVPoly divide_by_monomial(const MVPoly& a, const Monomial& m) {
    MVPoly r;
    for (const auto& [t, c] : a.terms()) {
        if (!m.divides(t)) {
            throw Error("term " + t.to_string() + " is not divisible by " + m.to_string());
        }
        r.add_term(t / m, c);
    }
    return r;
}

MVPoly swap_variables(const MVPoly& a, std::string_view u, std::string_view v) {
    return map_monomials(a, [&](const Monomial& m) {
        auto eu = m.exponent(u);
        auto ev = m.exponent(v);
        return m.with_exponent(u, ev).with_exponent(v, eu);
    });
}

std::map<std::vector<std::uint32_t>, MVPoly> collect(const MVPoly& a, const std::vector<std::string>& vars) {
    std::map<std::vector<std::uint32_t>, MVPoly> out;
    for (const auto& [m, c] : a.terms()) {
        std::vector<std::uint32_t> key;
        key.reserve(vars.size());
        Monomial rest = m;
        for (const auto& v : vars) {
            key.push_back(m.exponent(v));
            rest = rest.with_exponent(v, 0);
        }
        out[key].add_term(rest, c);
    }
    return out;
}

MVPoly power_range(const std::string& var, unsigned lo, unsigned hi) {
    MVPoly r;
    for (unsigned e = lo; e <= hi && lo <= hi; ++e) {
        r.add_term(Monomial::variable(var, e), 1);
    }
    return r;
}

} // namespace chordlab
