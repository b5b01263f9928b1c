#include <numeric>

#include "check_support.hpp"
#include "chordlab/expansions.hpp"
#include "chordlab/grammar.hpp"
#include "chordlab/sequences.hpp"
#include "chordlab/series.hpp"
#include "chordlab/trees.hpp"

namespace chordlab::checks {

namespace {

Side asc_des_side(unsigned n) {
    return perm_side("asc-des:" + std::to_string(n), n, {"x", "y"}, [](const Permutation& p, std::vector<unsigned>& e) {
        const auto s = perm_stats(p);
        e = {s.asc, s.des};
        return true;
    });
}

Side derangement_side(unsigned n) {
    return perm_side("der:" + std::to_string(n), n, {"x", "q"}, [](const Permutation& p, std::vector<unsigned>& e) {
        const auto s = perm_stats(p);
        if (s.fix != 0) {
            return false;
        }
        e = {s.exc, s.cyc};
        return true;
    });
}

Side signed_side_xpq(unsigned n) {
    return signed_side("B:" + std::to_string(n), n, {"x", "p", "q"},
                       [](const SignedPermutation& s, std::vector<unsigned>& e) {
                           const auto st = signed_stats(s);
                           e = {st.wexc, st.fix, st.cyc};
                           return true;
                       });
}

/// A_n(x,p,q) from the quadruple side.
MVPoly apq(Context& ctx, unsigned n) { return poly_subst(ctx.raw(perm_quad_side(n)), {{"y", num(1)}}); }

MVPoly pow2(unsigned n) { return rat(BigRat(2).pow(n)); }

BigRat alternating_factorial_sum(unsigned n) {
    BigRat sum(0);
    for (unsigned i = 0; i <= n; ++i) {
        sum += BigRat((i % 2 == 0) ? 1 : -1) / BigRat(factorial(i));
    }
    return sum;
}

std::vector<Part> a_equidist(unsigned n, Context& ctx) {
    return {enumerated(ctx, "exc-drop equals asc-des",
                       perm_side("exc-drop:" + std::to_string(n), n, {"x", "y"},
                                 [](const Permutation& p, std::vector<unsigned>& e) {
                                     const auto s = perm_stats(p);
                                     e = {s.exc, s.drop};
                                     return true;
                                 }),
                       {}, ctx.raw(asc_des_side(n)))};
}

std::vector<Part> a_equidist_hom(unsigned n, Context& ctx) {
    std::vector<Part> parts;
    const MVPoly axy = ctx.raw(asc_des_side(n));
    parts.push_back(enumerated(ctx, "exc form equals asc-des",
                               perm_side("exc-hom:" + std::to_string(n), n, {"x", "y"},
                                         [n](const Permutation& p, std::vector<unsigned>& e) {
                                             const auto s = perm_stats(p);
                                             e = {s.exc, n - 1 - s.exc};
                                             return true;
                                         }),
                               {}, axy));
    parts.push_back(equal("library eulerian_xy", eulerian_xy(n, ctx.jobs()), axy));
    parts.push_back(equal("symmetry", axy, swapped(axy, "x", "y")));
    const auto quad = ctx.raw(perm_quad_side(n));
    const MVPoly exc_only = poly_subst(quad, {{"y", num(1)}, {"p", num(1)}, {"q", num(1)}});
    const MVPoly drop_only = poly_subst(quad, {{"x", num(1)}, {"p", num(1)}, {"q", num(1)}});
    parts.push_back(equal("exc equidistributed with des", exc_only, poly_subst(axy, {{"x", num(1)}, {"y", var("x")}})));
    parts.push_back(equal("drop equidistributed with exc", poly_subst(drop_only, {{"y", var("x")}}), exc_only));
    parts.push_back(equal("asc equidistributed with des", poly_subst(axy, {{"y", num(1)}}),
                          poly_subst(axy, {{"x", num(1)}, {"y", var("x")}})));
    // drop = n - exc - fix, as an identity of joint distributions
    const MVPoly exc_fix = poly_subst(quad, {{"y", num(1)}, {"q", num(1)}});
    const MVPoly complemented = map_monomials(exc_fix, [n](const Monomial& m) {
        return m.with_exponent("y", n - m.exponent("x") - m.exponent("p"));
    });
    parts.push_back(
        enumerated(ctx, "drop complement", perm_quad_side(n), {{"q", num(1)}}, complemented));
    return parts;
}

std::vector<Part> a_rising(unsigned n, Context& ctx) {
    return {enumerated(ctx, "cycle distribution", perm_quad_side(n),
                       {{"x", num(1)}, {"y", num(1)}, {"p", num(1)}}, rising_factorial(1, n, "q"))};
}

TruncatedSeries a_egf_series(const BigRat& x, const BigRat& p, const BigRat& q, unsigned order) {
    const auto numer = TruncatedSeries::exp_linear(p, order) * (BigRat(1) - x);
    const auto denom = TruncatedSeries::exp_linear(x, order) - TruncatedSeries::exp_linear(1, order) * x;
    return series_pow(numer * series_inverse(denom), q);
}

std::vector<Part> a_egf(unsigned k, Context& ctx) {
    const BigRat x(1, 2);
    const BigRat p(1, 3);
    std::vector<Part> parts;
    for (const BigRat& q : {BigRat(2), BigRat(3), BigRat(1, 2)}) {
        const auto coeffs = egf_sequence(a_egf_series(x, p, q, k));
        parts.push_back(enumerated(ctx, "x=1/2 p=1/3 q=" + q.to_string(), perm_quad_side(k),
                                   {{"x", rat(x)}, {"y", num(1)}, {"p", rat(p)}, {"q", rat(q)}}, rat(coeffs[k])));
    }
    return parts;
}

std::vector<Part> a_neg(unsigned n, Context& ctx) {
    const MVPoly x = var("x");
    return {enumerated(ctx, "p=1 q=-1", perm_quad_side(n), {{"y", num(1)}, {"p", num(1)}, {"q", num(-1)}},
                       -poly_pow(x - num(1), n - 1)),
            enumerated(ctx, "p=0 q=-1", perm_quad_side(n), {{"y", num(1)}, {"p", num(0)}, {"q", num(-1)}},
                       -power_range("x", 1, n - 1))};
}

std::vector<Part> der_count(unsigned n, Context& ctx) {
    const BigRat alt = alternating_factorial_sum(n);
    const BigRat perms = BigRat(factorial(n)) * alt;
    const BigRat matchings = BigRat(factorial(n)) * BigRat(2).pow(n) * alt;
    return {enumerated(ctx, "derangements", derangement_side(n), {{"x", num(1)}, {"q", num(1)}}, rat(perms)),
            equal("derangement recurrence", rat(BigRat(derangement_count(n))), rat(perms)),
            enumerated(ctx, "fixed-block-free matchings weighted by 2^trace", m_side(n),
                       {{"x", num(1)}, {"y", num(1)}, {"s", num(0)}, {"t", num(2)}}, rat(matchings))};
}

std::vector<Part> dnk(unsigned n, Context& ctx) {
    const auto table = dnk_table(n);
    const MVPoly x = var("x");
    MVPoly by_k;
    MVPoly by_k_matching;
    const Bindings halve{{"q", var("q") * BigRat(1, 2)}};
    for (const auto& [k, poly] : table) {
        if (2 * k > n) {
            return {predicate("d_(n,k) support", false, "a cda-free derangement has more than n/2 excedances",
                              "k=" + std::to_string(k))};
        }
        const MVPoly basis = poly_pow(x, k) * poly_pow(num(1) + x, n - 2 * k);
        by_k += poly * basis;
        by_k_matching += poly_subst(poly, halve) * pow2(n) * basis;
    }
    const MVPoly dn = ctx.raw(derangement_side(n));
    return {enumerated(ctx, "d_n(x,q) expansion", derangement_side(n), {}, by_k),
            equal("library derangement_poly", derangement_poly(n), dn),
            enumerated(ctx, "matchings equal 2^n d_n(x,q/2)", m_side(n), {{"y", num(1)}, {"s", num(0)}, {"t", var("q")}},
                       poly_subst(dn, halve) * pow2(n)),
            enumerated(ctx, "matchings equal weighted expansion", m_side(n),
                       {{"y", num(1)}, {"s", num(0)}, {"t", var("q")}}, by_k_matching)};
}

std::vector<Part> b_main(unsigned n, Context& ctx) {
    const MVPoly x = var("x");
    const MVPoly p = var("p");
    const MVPoly q = var("q");
    const MVPoly half_px = (p + x) * rat(BigRat(1, 2));
    const MVPoly via_a = poly_subst(apq(ctx, n), {{"p", half_px}}) * pow2(n);
    std::vector<Part> parts;
    parts.push_back(enumerated(ctx, "B_n = 2^n A_n(x,(p+x)/2,q)", signed_side_xpq(n), {}, via_a));
    const MVPoly bn = ctx.raw(signed_side_xpq(n));
    parts.push_back(enumerated(ctx, "matching form", m_side(n), {{"y", num(1)}, {"s", half_px}, {"t", q * num(2)}}, bn));
    const MVPoly dbn = poly_subst(bn, {{"p", num(0)}, {"q", num(1)}});
    parts.push_back(
        enumerated(ctx, "type B derangements via matchings", m_side(n),
                   {{"y", num(1)}, {"s", x * rat(BigRat(1, 2))}, {"t", num(2)}}, dbn));
    parts.push_back(equal("library b_poly", b_poly(n, ctx.jobs()), bn));
    return parts;
}

std::vector<Part> b_dual(unsigned n, Context& ctx) {
    const Bindings mq{{"y", num(1)}, {"s", var("x")}, {"t", var("q")}};
    const Bindings mtilde{{"y", num(1)}, {"s", num(1)}, {"t", var("q")}};
    MVPoly conv;
    for (unsigned k = 0; k <= n; ++k) {
        conv += rat(BigRat(binomial(n, k))) * poly_subst(ctx.raw(m_side(k)), mq) *
                poly_subst(ctx.raw(m_side(n - k)), mtilde);
    }
    const MVPoly tilde_n = poly_subst(ctx.raw(m_side(n)), mtilde);
    return {enumerated(ctx, "B_n(x,1,q) convolution", signed_side_xpq(n), {{"p", num(1)}}, conv),
            enumerated(ctx, "M_n(x,q) = x^n tilde-M_n(1/x,q)", m_side(n), mq, reflect(tilde_n, "x", n))};
}

std::vector<Part> colored(unsigned n, Context& ctx) {
    const Side des = perm_side("des:" + std::to_string(n), n, {"x"}, [](const Permutation& p, std::vector<unsigned>& e) {
        e = {perm_stats(p).des};
        return true;
    });
    return {enumerated(ctx, "r=1 gives A_n(x)", des, {}, colored_eulerian(n, 1)),
            enumerated(ctx, "r=2 gives B_n(x)", signed_side_xpq(n), {{"p", num(1)}, {"q", num(1)}},
                       colored_eulerian(n, 2))};
}

std::vector<Part> invseq(unsigned n, Context& ctx) {
    std::vector<Part> parts;
    bool forward = true;
    std::string bad;
    for_each_permutation(n, {0, permutation_count(n)}, [&](std::uint64_t, const Permutation& p) {
        const auto e = to_inversion_sequence(p);
        if (forward && (!e.is_valid() || from_inversion_sequence(e) != p)) {
            forward = false;
            bad = p.to_string();
        }
    });
    parts.push_back(predicate("permutation round trip", forward, "round trip changed the permutation", bad));
    const auto seqs = enumerate_inversion_sequences(n);
    bool backward = true;
    MVPoly by_sum;
    for (const auto& e : seqs) {
        const auto p = from_inversion_sequence(e);
        if (backward && (!p.is_valid() || to_inversion_sequence(p) != e)) {
            backward = false;
        }
        const int total = std::accumulate(e.entries.begin(), e.entries.end(), 0);
        by_sum += MVPoly(Monomial({{"q", static_cast<std::uint32_t>(total)}}));
    }
    parts.push_back(predicate("sequence round trip", backward, "round trip changed an inversion sequence"));
    parts.push_back(equal("#I_n = n!", rat(BigRat(static_cast<long>(seqs.size()))), rat(BigRat(factorial(n)))));
    parts.push_back(enumerated(ctx, "inversions equal sequence sums",
                               perm_side("inv:" + std::to_string(n), n, {"q"},
                                         [](const Permutation& p, std::vector<unsigned>& e) {
                                             e = {perm_stats(p).inv};
                                             return true;
                                         }),
                               {}, by_sum));
    return parts;
}

MVPoly counts_poly(const std::map<unsigned, std::uint64_t>& counts) {
    MVPoly p;
    for (const auto& [i, c] : counts) {
        p.add_term(Monomial::variable("g", i), BigRat(static_cast<long>(c)));
    }
    return p;
}

std::vector<Part> gamma_no_double_descent(unsigned n, Context& ctx) {
    const auto gammas = gamma_expand(ctx.raw(asc_des_side(n)), "x", "y");
    MVPoly from_gamma;
    for (const auto& [j, c] : gammas) {
        from_gamma += c * MVPoly(Monomial::variable("g", j));
    }
    const Side no_dd = perm_side("nodd:" + std::to_string(n), n, {"g"}, [](const Permutation& p, std::vector<unsigned>& e) {
        const auto s = perm_stats(p);
        if (s.dd != 0) {
            return false;
        }
        e = {s.des};
        return true;
    });
    return {enumerated(ctx, "no double descents", no_dd, {}, from_gamma),
            equal("library no_double_descent_counts", counts_poly(no_double_descent_counts(n)), from_gamma),
            equal("0-1-2 increasing plane trees", counts_poly(alpha_census(n)), from_gamma)};
}

std::vector<Part> a_grammar(unsigned n, Context& ctx) {
    const MVPoly I = var("I");
    return {enumerated(ctx, "D^n(I) = I * sum", perm_quad_side(n), {},
                       divide_by_monomial(d_iter(grammars::permutation_quadruple(), I, n), Monomial::variable("I")))};
}

std::vector<Part> eulerian_grammar(unsigned n, Context& ctx) {
    const Side des = perm_side("des:" + std::to_string(n), n, {"x"}, [](const Permutation& p, std::vector<unsigned>& e) {
        e = {perm_stats(p).des};
        return true;
    });
    const MVPoly an = ctx.raw(des);
    const MVPoly homogenized = map_monomials(an, [n](const Monomial& m) {
        const auto k = m.exponent("x");
        return Monomial({{"a", k + 1}, {"b", n - k}});
    });
    const Grammar g = grammars::eulerian();
    return {equal("D^n(a)", d_iter(g, var("a"), n), homogenized), equal("D^n(b)", d_iter(g, var("b"), n), homogenized)};
}

std::vector<Part> s2_grammar(unsigned n, Context&) {
    MVPoly rhs;
    for (unsigned k = 0; k <= n; ++k) {
        rhs.add_term(Monomial({{"a", 1}, {"b", k}}), BigRat(stirling2(n, k)));
    }
    return {equal("D^n(a)", d_iter(grammars::stirling_second_kind(), var("a"), n), rhs)};
}

} // namespace

void register_permutation_checks(std::vector<CheckDef>& out) {
    out.push_back(make_check("A-EQUIDIST", "sum x^exc y^drop equals sum x^asc y^des over S_n, as printed", 1, kPermMax,
                             a_equidist,
                             "The printed form is not homogeneous once fixed points occur; A-EQUIDIST-HOM checks the "
                             "excedance form that does hold."));
    out.push_back(make_check("A-EQUIDIST-HOM",
                             "sum x^exc y^(n-1-exc) equals sum x^asc y^des; univariate equidistribution; symmetry", 1,
                             kPermMax, a_equidist_hom));
    out.push_back(make_check("A-RISING", "sum q^cyc equals q(q+1)...(q+n-1)", 1, kPermMax, a_rising));
    out.push_back(make_egf_check("A-EGF", "EGF of A_n(x,p,q) at x=1/2, p=1/3, q in {2,3,1/2}", a_egf));
    out.push_back(make_check("A-NEG", "A_n(x,1,-1) = -(x-1)^(n-1) and A_n(x,0,-1) = -(x+...+x^(n-1))", 1, kPermMax,
                             a_neg));
    out.push_back(make_check("DER-COUNT", "derangement counts and fixed-block-free matchings weighted by 2^trace", 1,
                             kMatchingMax, der_count));
    out.push_back(make_check("DNK", "d_n(x,q) expansion over cda-free derangements and its matching form", 1,
                             kMatchingMax, dnk));
    out.push_back(make_check("B-MAIN", "B_n(x,p,q) = 2^n A_n(x,(p+x)/2,q) and its matching form", 1, kSignedMax, b_main,
                             "A failure here reflects a definitional mismatch in the type B cycle statistic (cycles of "
                             "|sigma|), not necessarily a code bug."));
    out.push_back(make_check("B-DUAL", "B_n(x,1,q) as a binomial convolution of M_k(x,q) and tilde-M_k(x,q)", 0,
                             kSignedMax, b_dual));
    out.push_back(make_check("COLORED", "r-colored Eulerian polynomials at r=1 and r=2", 1, kSignedMax, colored));
    out.push_back(make_check("INVSEQ", "inversion sequence bijection and inversion counts", 0, kPermMax, invseq));
    out.push_back(make_check("FOATA-GAMMA", "gamma coefficients of A_n(x,y) count no-double-descent permutations and "
                                            "0-1-2 increasing plane trees",
                             1, kPermMax, gamma_no_double_descent));
    out.push_back(make_check("A-GRAMMAR", "D^n(I) = I sum x^exc y^drop p^fix q^cyc", 0, kPermMax, a_grammar));
    out.push_back(make_check("EULERIAN-GRAMMAR", "D^n(a) = D^n(b) = a b^n A_n(a/b) for a->ab, b->ab", 1, kPermMax,
                             eulerian_grammar));
    out.push_back(make_check("S2-GRAMMAR", "D^n(a) = a sum S(n,k) b^k for a->ab, b->b", 0, kPermMax, s2_grammar));
}

} // namespace chordlab::checks
