#include "check_support.hpp"
#include "chordlab/expansions.hpp"
#include "chordlab/grammar.hpp"
#include "chordlab/matching_words.hpp"
#include "chordlab/trees.hpp"

namespace chordlab::checks {

namespace {

std::string tag(const char* stem, unsigned n) { return std::string(stem) + ":" + std::to_string(n); }

Side q_side(unsigned n) {
    return stirling_side(tag("Q", n), n, {"x", "y", "z"}, [](const StirlingPermutation& t, std::vector<unsigned>& e) {
        const auto s = stirling_stats(t);
        e = {s.asc, s.plat, s.des};
        return true;
    });
}

Side c_side(unsigned n) {
    return word_side(tag("C", n), n, {"x1", "x2", "x3", "y1", "y2"}, [](const Matching& m, std::vector<unsigned>& e) {
        const auto c = neighbor_counts(from_matching(m));
        e = {c.lne, c.lcr, c.nal, c.rrp, c.lrp};
        return true;
    });
}

std::string key_text(const CoeffKey& k) {
    return "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + ")";
}

/// First key where the two tables differ, or empty.
std::string table_diff(const CoeffTable& a, const CoeffTable& b) {
    for (const auto& [k, c] : a.entries) {
        const auto it = b.entries.find(k);
        if (it == b.entries.end() || it->second != c) {
            return key_text(k);
        }
    }
    for (const auto& [k, c] : b.entries) {
        if (!a.entries.count(k)) {
            return key_text(k);
        }
    }
    return {};
}

Part tables_agree(std::string name, const CoeffTable& census, const CoeffTable& table) {
    Part p = equal(std::move(name), census.to_poly({"x", "y", "z"}), table.to_poly({"x", "y", "z"}));
    p.object = table_diff(census, table);
    return p;
}

std::vector<Part> xi_tree(unsigned n, Context&) {
    std::vector<Part> parts{tables_agree("0-1-2-3 trees on [n+1] by (deg1,deg2,deg3)", xi_census(n), xi_table(n))};
    if (n == 1) {
        parts.push_back(equal("printed xi_1", xi_table(1).to_poly({"x", "y", "z"}), P("x")));
    } else if (n == 2) {
        parts.push_back(equal("printed xi_2", xi_table(2).to_poly({"x", "y", "z"}), P("x^2 + 2*y")));
    }
    return parts;
}

std::vector<Part> gamma_tree(unsigned n, Context&) {
    std::vector<Part> parts{tables_agree("0-1-2-3 trees on [n] by (deg2,deg1,leaves)", gamma_census(n), gamma_table(n))};
    static const char* const golden[] = {"", "z", "y*z", "y^2*z + 2*x*z^2"};
    if (n < std::size(golden)) {
        parts.push_back(equal("printed gamma_n", gamma_table(n).to_poly({"x", "y", "z"}), P(golden[n])));
    }
    return parts;
}

std::vector<Part> xi_gamma(unsigned n, Context&) {
    const CoeffTable xi = xi_table(n);
    const CoeffTable gamma = gamma_table(n + 1);
    CoeffTable mapped{"xi", n, {}};
    for (const auto& [k, c] : gamma.entries) {
        const auto [i, j, leaves] = k;
        // gamma key (a,b,c) lands on xi key (b,a,n+1-a-b-c)
        if (leaves + i + j > n + 1) {
            return {predicate("index bijection", false, "gamma key has no xi image", key_text(k))};
        }
        mapped.entries[{j, i, n + 1 - i - j - leaves}] = c;
    }
    return {tables_agree("xi_{n;i,j,k} = gamma_{n+1;j,i,n+1-i-j-k}", mapped, xi)};
}

std::vector<Part> xi_recu(unsigned n, Context&) {
    const MVPoly x = var("x");
    const MVPoly y = var("y");
    const MVPoly z = var("z");
    const MVPoly xi = xi_table(n).to_poly({"x", "y", "z"});
    const MVPoly xi_next = x * xi + MVPoly(2) * y * poly_partial(xi, "x") + (x * y + MVPoly(3) * z) * poly_partial(xi, "y") +
                           MVPoly(2) * x * z * poly_partial(xi, "z");
    const MVPoly g = gamma_table(n).to_poly({"x", "y", "z"});
    const MVPoly g_next = MVPoly(3) * z * poly_partial(g, "x") + MVPoly(2) * x * z * poly_partial(g, "y") +
                          y * z * poly_partial(g, "z");
    const MVPoly via_grammar = divide_by_monomial(d_iter(grammars::neighbor_symmetric(), var("a"), n),
                                                  Monomial::variable("a"));
    return {equal("xi_(n+1) from the differential recursion", xi_table(n + 1).to_poly({"x", "y", "z"}), xi_next),
            equal("gamma_(n+1) from the differential recursion", gamma_table(n + 1).to_poly({"x", "y", "z"}), g_next),
            equal("D^n(a) = a xi_n(w1,w2,w3)", via_grammar, xi_table(n).to_poly({"w1", "w2", "w3"}))};
}

std::vector<Part> q_recurrence(unsigned n, Context& ctx) {
    const MVPoly q = ctx.raw(q_side(n));
    const MVPoly rhs = var("x") * var("y") * var("z") *
                       (poly_partial(q, "x") + poly_partial(q, "y") + poly_partial(q, "z"));
    std::vector<Part> parts{enumerated(ctx, "Q_(n+1) = xyz (d_x + d_y + d_z) Q_n", q_side(n + 1), {}, rhs)};
    if (n == 1) {
        parts.push_back(enumerated(ctx, "Q_1 = xyz", q_side(1), {}, P("x*y*z")));
    }
    return parts;
}

std::vector<Part> q_sym(unsigned n, Context& ctx) {
    const MVPoly q = ctx.raw(q_side(n));
    const MVPoly x = var("x");
    const MVPoly y = var("y");
    const MVPoly z = var("z");
    const std::vector<std::pair<std::string, Bindings>> images{
        {"(x y)", {{"x", y}, {"y", x}}},
        {"(y z)", {{"y", z}, {"z", y}}},
        {"(x z)", {{"x", z}, {"z", x}}},
        {"(x y z)", {{"x", y}, {"y", z}, {"z", x}}},
        {"(x z y)", {{"x", z}, {"y", x}, {"z", y}}},
    };
    std::vector<Part> parts;
    for (const auto& [name, b] : images) {
        parts.push_back(enumerated(ctx, "invariant under " + name, q_side(n), {}, poly_subst(q, b)));
    }
    return parts;
}

std::vector<Part> q_grammar(unsigned n, Context& ctx) {
    const MVPoly derived = d_iter(grammars::stirling_trivariate(), var("x"), n);
    return {enumerated(ctx, "D^n(x) = Q_n(x,y,z)", q_side(n), {}, derived),
            equal("library q_poly", q_poly(n, ctx.jobs()), ctx.raw(q_side(n)))};
}

std::vector<Part> q_esym_gamma(unsigned n, Context& ctx) {
    const auto e = elementary_symmetric({"x", "y", "z"});
    const Bindings to_e{{"u", e[0]}, {"v", e[1]}, {"w", e[2]}};
    const CoeffTable gamma = gamma_table(n);
    const MVPoly from_table = poly_subst(gamma.to_poly({"u", "v", "w"}), to_e);
    const MVPoly via_h = poly_subst(d_iter(grammars::stirling_symmetric(), var("w"), n - 1), to_e);

    const auto coeffs = esym_expand(ctx.raw(q_side(n)), {"x", "y", "z"});
    CoeffTable expanded{"gamma", n, {}};
    bool integral = true;
    for (const auto& [k, c] : coeffs) {
        integral = integral && c.is_integer() && c.sign() > 0;
        expanded.entries[k] = c.numerator();
    }
    return {enumerated(ctx, "Q_n = sum gamma_{n;i,j,k} e1^i e2^j e3^k", q_side(n), {}, from_table),
            enumerated(ctx, "Q_n = D_H^(n-1)(w)", q_side(n), {}, via_h),
            predicate("e-coefficients are positive integers", integral, "non-integral or negative e-coefficient"),
            tables_agree("e-expansion of Q_n equals the gamma table", expanded, gamma)};
}

std::vector<Part> c_q_transform(unsigned n, Context& ctx) {
    const MVPoly q = ctx.raw(q_side(n));
    const MVPoly one = num(1);
    return {
        enumerated(ctx, "C_n = y2 (x1 x2 x3 y1^2 y2)^n Q_n(1/(x1 y1), 1/(x2 y1), 1/(x3 y2))", c_side(n), {},
                   q_to_neighbor(q, n)),
        enumerated(ctx, "lne/lcr/nal form", c_side(n),
                   {{"x1", var("x")}, {"x2", var("y")}, {"x3", var("z")}, {"y1", one}, {"y2", one}}, q_to_nca(q, n)),
        enumerated(ctx, "lne/lcr/lrp form", c_side(n), {{"x3", one}, {"y1", one}}, q_to_lne_lcr_lrp(q, n)),
        enumerated(ctx, "rrp/lrp form", c_side(n), {{"x1", one}, {"x2", one}, {"x3", one}}, q_to_rrp_lrp(q, n)),
    };
}

std::vector<Part> q_matchings(unsigned n, Context& ctx, bool by_lrp) {
    // Beyond any reachable exponent; flags a statistic above its bound.
    constexpr unsigned kImpossible = 255;
    const Side side = matching_side(tag(by_lrp ? "co-lrp" : "co-lne", n), n, {"x"},
                                    [n, by_lrp](const Matching& m, std::vector<unsigned>& e) {
                                        const auto s = pairwise_stats(m);
                                        const unsigned top = by_lrp ? n + 1 : n;
                                        const unsigned stat = by_lrp ? s.lrp : s.lne;
                                        e = {stat <= top ? top - stat : kImpossible};
                                        return true;
                                    });
    const MVPoly qx = poly_subst(ctx.raw(q_side(n)), {{"x", num(1)}, {"y", num(1)}, {"z", var("x")}});
    return {enumerated(ctx, by_lrp ? "x^(n+1) sum (1/x)^lrp = Q_n(x)" : "x^n sum (1/x)^lne = Q_n(x)", side, {}, qx)};
}

} // namespace

void register_stirling_checks(std::vector<CheckDef>& out) {
    out.push_back(make_check("XI-TREE", "xi table equals the 0-1-2-3 tree census on [n+1]", 1, kTreeMax, xi_tree));
    out.push_back(make_check("GAMMA-TREE", "gamma table equals the 0-1-2-3 tree census on [n]", 1, kTreeMax, gamma_tree));
    out.push_back(make_check("XI-GAMMA", "xi_{n;i,j,k} = gamma_{n+1;j,i,n+1-i-j-k}", 1, kTreeMax, xi_gamma));
    out.push_back(make_check("XI-RECU", "differential recursions for xi and gamma; D^n(a) = a xi_n(w)", 1,
                             kStirlingMax - 1, xi_recu));
    out.push_back(make_check("Q-DUMONT", "Q_(n+1) = xyz (d_x + d_y + d_z) Q_n", 1, kStirlingMax - 1, q_recurrence));
    out.push_back(make_check("Q-SYM", "Q_n(x,y,z) is invariant under permutations of x, y, z", 1, kStirlingMax, q_sym));
    out.push_back(make_check("Q-GRAMMAR", "D^n(x) = Q_n(x,y,z) for x,y,z -> xyz", 1, kStirlingMax - 1, q_grammar));
    out.push_back(make_check("Q-CHEN22", "Q_n in elementary symmetric functions with gamma coefficients", 1,
                             kStirlingMax - 1, q_esym_gamma));
    out.push_back(make_check("C-Q-TRANSFORM", "neighbor polynomials as reciprocal transforms of Q_n", 1,
                             kMatchingMax - 1, c_q_transform));
    out.push_back(make_check("Q-LNE", "left-nestings over matchings follow the second-order Eulerian triangle", 1,
                             kMatchingMax, [](unsigned n, Context& c) { return q_matchings(n, c, false); }));
    out.push_back(make_check("Q-LRP", "LR pairs over matchings follow the second-order Eulerian triangle", 1,
                             kMatchingMax, [](unsigned n, Context& c) { return q_matchings(n, c, true); }));
}

} // namespace chordlab::checks
