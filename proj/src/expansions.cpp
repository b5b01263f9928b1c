#include "chordlab/expansions.hpp"

#include <algorithm>
#include <map>

#include "chordlab/errors.hpp"

namespace chordlab {

std::vector<std::pair<unsigned, MVPoly>> gamma_expand(const MVPoly& p, const std::string& x, const std::string& y) {
    std::vector<std::pair<unsigned, MVPoly>> out;
    if (p.is_zero()) {
        return out;
    }
    auto grouped = collect(p, {x, y});
    const unsigned d = grouped.begin()->first[0] + grouped.begin()->first[1];
    for (const auto& [key, c] : grouped) {
        if (key[0] + key[1] != d) {
            throw NotHomogeneous("polynomial is not homogeneous in (" + x + ", " + y + ")");
        }
    }

    const MVPoly x_plus_y = MVPoly::variable(x) + MVPoly::variable(y);
    const Monomial xy = Monomial::variable(x) * Monomial::variable(y);
    MVPoly cur = p;
    int deg = static_cast<int>(d);
    for (unsigned j = 0; !cur.is_zero(); ++j) {
        if (deg < 0) {
            throw NotSymmetric("gamma peeling ran past degree zero");
        }
        auto parts = collect(cur, {x, y});
        auto it = parts.find({static_cast<std::uint32_t>(deg), 0U});
        if (it != parts.end()) {
            MVPoly c = it->second;
            cur -= c * poly_pow(x_plus_y, static_cast<unsigned>(deg));
            out.emplace_back(j, std::move(c));
        }
        if (cur.is_zero()) {
            break;
        }
        for (const auto& [m, c] : cur.terms()) {
            if (m.exponent(x) == 0 || m.exponent(y) == 0) {
                throw NotSymmetric("remainder " + cur.to_string() + " is not divisible by " + xy.to_string());
            }
        }
        cur = divide_by_monomial(cur, xy);
        deg -= 2;
    }
    return out;
}

MVPoly gamma_reassemble(const std::vector<std::pair<unsigned, MVPoly>>& gammas, const std::string& x,
                        const std::string& y, unsigned degree) {
    const MVPoly x_plus_y = MVPoly::variable(x) + MVPoly::variable(y);
    const MVPoly xy = MVPoly::variable(x) * MVPoly::variable(y);
    MVPoly r;
    for (const auto& [j, g] : gammas) {
        if (2 * j > degree) {
            throw Error("gamma index exceeds half the degree");
        }
        r += g * poly_pow(xy, j) * poly_pow(x_plus_y, degree - 2 * j);
    }
    return r;
}

std::array<MVPoly, 3> elementary_symmetric(const std::array<std::string, 3>& vars) {
    MVPoly a = MVPoly::variable(vars[0]);
    MVPoly b = MVPoly::variable(vars[1]);
    MVPoly c = MVPoly::variable(vars[2]);
    return {a + b + c, a * b + b * c + c * a, a * b * c};
}

MVPoly esym_reassemble(const std::vector<std::pair<ESymKey, BigRat>>& coeffs, const std::array<MVPoly, 3>& basis) {
    MVPoly r;
    for (const auto& [key, c] : coeffs) {
        r += c * (poly_pow(basis[0], key[0]) * poly_pow(basis[1], key[1]) * poly_pow(basis[2], key[2]));
    }
    return r;
}

namespace {

struct Exponents3Order {
    // graded lex, descending; vars[0] most significant
    bool operator()(const ESymKey& a, const ESymKey& b) const {
        unsigned da = a[0] + a[1] + a[2];
        unsigned db = b[0] + b[1] + b[2];
        if (da != db) {
            return da > db;
        }
        return a > b;
    }
};

using Exp3Map = std::map<ESymKey, BigRat, Exponents3Order>;

void accumulate(Exp3Map& into, const MVPoly& p, const std::array<std::string, 3>& vars, const BigRat& scale) {
    for (const auto& [m, c] : p.terms()) {
        ESymKey key{m.exponent(vars[0]), m.exponent(vars[1]), m.exponent(vars[2])};
        auto [it, inserted] = into.try_emplace(key, c * scale);
        if (!inserted) {
            it->second += c * scale;
            if (it->second.is_zero()) {
                into.erase(it);
            }
        }
    }
}

} // namespace

std::vector<std::pair<ESymKey, BigRat>> esym_expand(const MVPoly& p, const std::array<std::string, 3>& vars) {
    for (const auto& v : p.variables()) {
        if (v != vars[0] && v != vars[1] && v != vars[2]) {
            throw NotSymmetric("variable '" + v + "' is outside the symmetric variable set");
        }
    }
    const auto e = elementary_symmetric(vars);
    Exp3Map rest;
    accumulate(rest, p, vars, 1);

    std::vector<std::pair<ESymKey, BigRat>> out;
    while (!rest.empty()) {
        const auto [lead, c] = *rest.begin();
        if (lead[0] < lead[1] || lead[1] < lead[2]) {
            throw NotSymmetric("leading monomial exponents (" + std::to_string(lead[0]) + "," +
                               std::to_string(lead[1]) + "," + std::to_string(lead[2]) + ") are not weakly decreasing");
        }
        ESymKey key{lead[0] - lead[1], lead[1] - lead[2], lead[2]};
        MVPoly product = poly_pow(e[0], key[0]) * poly_pow(e[1], key[1]) * poly_pow(e[2], key[2]);
        accumulate(rest, product, vars, -c);
        out.emplace_back(key, c);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

} // namespace chordlab
