#include <algorithm>

#include "check_support.hpp"
#include "chordlab/expansions.hpp"
#include "chordlab/grammar.hpp"
#include "chordlab/sequences.hpp"
#include "chordlab/series.hpp"

namespace chordlab::checks {

namespace {

std::string tag(const char* stem, unsigned n) { return std::string(stem) + ":" + std::to_string(n); }

/// x^ne y^cr q^al
Side ncq_side(unsigned n) {
    return matching_side(tag("ne-cr-al", n), n, {"x", "y", "q"}, [](const Matching& m, std::vector<unsigned>& e) {
        const auto s = pairwise_stats(m);
        e = {s.ne, s.cr, s.al};
        return true;
    });
}

MVPoly pow2(unsigned n) { return MVPoly(BigRat(2).pow(n)); }
MVPoly half(const MVPoly& p) { return p * BigRat(1, 2); }

MVPoly quad_raw(Context& ctx, unsigned n) { return ctx.raw(perm_quad_side(n)); }

std::vector<Part> m_main(unsigned n, Context& ctx) {
    const MVPoly x = var("x");
    const MVPoly y = var("y");
    const MVPoly s = var("s");
    const MVPoly t = var("t");
    const MVPoly quad = quad_raw(ctx, n);
    std::vector<Part> parts;
    parts.push_back(enumerated(ctx, "sum over S_n of (2x)^exc (2y)^drop (2s)^fix (t/2)^cyc", m_side(n), {},
                               poly_subst(quad, {{"x", x * BigRat(2)}, {"y", y * BigRat(2)}, {"p", s * BigRat(2)}, {"q", half(t)}})));

    // (2y)^n A_n(x/y, s/y, t/2) with the quotient cleared term by term.
    MVPoly homogenized;
    const MVPoly apq = poly_subst(quad, {{"y", num(1)}});
    for (const auto& [m, c] : apq.terms()) {
        const unsigned a = m.exponent("x");
        const unsigned b = m.exponent("p");
        const unsigned cyc = m.exponent("q");
        if (a + b > n || cyc > n) {
            parts.push_back(predicate("exc + fix and cyc at most n", false, "statistic exceeds n", m.to_string()));
            return parts;
        }
        homogenized.add_term(Monomial({{"x", a}, {"s", b}, {"y", n - a - b}, {"t", cyc}}),
                             c * BigRat(2).pow(n - cyc));
    }
    parts.push_back(enumerated(ctx, "(2y)^n A_n(x/y,s/y,t/2)", m_side(n), {}, homogenized));

    const MVPoly p = var("p");
    const MVPoly q = var("q");
    const MVPoly target = pow2(n) * apq;
    parts.push_back(enumerated(ctx, "elblock form of 2^n A_n(x,p,q)", m_side(n),
                               {{"y", num(1)}, {"s", p}, {"t", q * BigRat(2)}}, target));
    parts.push_back(enumerated(ctx, "olblock form of 2^n A_n(x,p,q)", m_side(n),
                               {{"x", num(1)}, {"y", x}, {"s", p}, {"t", q * BigRat(2)}}, target));
    parts.push_back(equal("library m_poly", m_poly(n, ctx.jobs()), ctx.raw(m_side(n))));
    static const char* const golden[] = {"1", "s*t", "s^2*t^2 + 2*t*x*y",
                                         "s^3*t^3 + 6*s*t^2*x*y + 4*t*x^2*y + 4*t*x*y^2"};
    if (n < std::size(golden)) {
        parts.push_back(enumerated(ctx, "printed value", m_side(n), {}, P(golden[n])));
    }
    return parts;
}

std::vector<Part> m_sym(unsigned n, Context& ctx) {
    return {enumerated(ctx, "x <-> y", m_side(n), {}, swapped(ctx.raw(m_side(n)), "x", "y"))};
}

std::vector<Part> m_egf(unsigned k, Context& ctx) {
    const BigRat x(1, 2);
    const BigRat y(3);
    const BigRat s(1, 3);
    std::vector<Part> parts;
    for (const BigRat& t : {BigRat(1), BigRat(1, 2)}) {
        const auto numer = TruncatedSeries::exp_linear(s * BigRat(2), k) * (y - x);
        const auto denom = TruncatedSeries::exp_linear(x * BigRat(2), k) * y - TruncatedSeries::exp_linear(y * BigRat(2), k) * x;
        const auto series = series_pow(numer * series_inverse(denom), t / 2);
        parts.push_back(enumerated(ctx, "x=1/2 y=3 s=1/3 t=" + t.to_string(), m_side(k),
                                   {{"x", rat(x)}, {"y", rat(y)}, {"s", rat(s)}, {"t", rat(t)}},
                                   rat(egf_sequence(series)[k])));
    }
    return parts;
}

const Bindings kTraceOnly{{"x", num(1)}, {"y", num(1)}, {"s", num(1)}, {"t", var("q")}};

std::vector<Part> trace_rising(unsigned n, Context& ctx) {
    return {enumerated(ctx, "q(q+2)...(q+2n-2)", m_side(n), kTraceOnly, rising_factorial(2, n, "q"))};
}

std::vector<Part> stirling1_id(unsigned n, Context& ctx) {
    MVPoly rhs;
    for (unsigned k = 0; k <= n; ++k) {
        rhs.add_term(Monomial::variable("q", k), BigRat(stirling1_unsigned(n, k)) * BigRat(2).pow(n - k));
    }
    return {enumerated(ctx, "sum 2^(n-k) c(n,k) q^k", m_side(n), kTraceOnly, rhs)};
}

std::vector<Part> conv(unsigned n, Context& ctx) {
    const Bindings b{{"y", num(1)}, {"s", var("p")}, {"t", var("q")}};
    MVPoly sum;
    for (unsigned k = 0; k <= n; ++k) {
        sum += rat(BigRat(binomial(n, k))) * poly_subst(ctx.raw(m_side(k)), b) * poly_subst(ctx.raw(m_side(n - k)), b);
    }
    return {enumerated(ctx, "2^n A_n(x,p,q) as a convolution", perm_quad_side(n), {{"y", num(1)}},
                       sum * (BigRat(1) / BigRat(2).pow(n)))};
}

std::vector<Part> cor2(unsigned n, Context& ctx) {
    const MVPoly x = var("x");
    return {enumerated(ctx, "all matchings", m_side(n), {{"y", num(1)}, {"s", num(1)}, {"t", num(-2)}},
                       -(pow2(n) * poly_pow(x - num(1), n - 1))),
            enumerated(ctx, "fixed-block-free matchings", m_side(n), {{"y", num(1)}, {"s", num(0)}, {"t", num(-2)}},
                       -(pow2(n) * power_range("x", 1, n - 1)))};
}

std::vector<Part> m_gamma(unsigned n, Context& ctx) {
    const MVPoly raw = ctx.raw(m_side(n));
    MVPoly reassembled;
    bool nonnegative = true;
    std::string offender;
    for (const auto& [key, part] : collect(raw, {"s"})) {
        const unsigned i = key[0];
        if (i > n) {
            return {predicate("s-degree at most n", false, "s-degree exceeds n", "i=" + std::to_string(i))};
        }
        const auto gammas = gamma_expand(part, "x", "y");
        for (const auto& [j, c] : gammas) {
            const MVPoly g = poly_subst(c, {{"t", var("t") * BigRat(2)}}) * (BigRat(1) / BigRat(2).pow(n));
            for (const auto& [m, coeff] : g.terms()) {
                if (nonnegative && (coeff.sign() < 0 || !coeff.is_integer())) {
                    nonnegative = false;
                    offender = "i=" + std::to_string(i) + " j=" + std::to_string(j) + ": " + g.to_string();
                }
            }
        }
        reassembled += MVPoly(Monomial::variable("s", i)) * gamma_reassemble(gammas, "x", "y", n - i);
    }
    return {equal("s-stratified gamma reassembly", reassembled, raw),
            predicate("gamma_{n,i,j}(t) have nonnegative integer coefficients", nonnegative,
                      "coefficient outside the nonnegative integers", offender)};
}

std::vector<Part> no_even_to_odd_egf(unsigned k, Context& ctx) {
    const auto e = TruncatedSeries::exp_linear(1, k);
    const auto series = series_pow(e * series_inverse(TruncatedSeries::constant(2, k) - e), BigRat(1, 2));
    const Side side = matching_side(tag("no-even-to-odd", k), k, {}, [](const Matching& m, std::vector<unsigned>&) {
        return block_stats(m).even_to_odd == 0;
    });
    return {enumerated(ctx, "sqrt(e^z/(2-e^z))", side, {}, rat(egf_sequence(series)[k]))};
}

std::vector<Part> kz_sym(unsigned n, Context& ctx) {
    const MVPoly raw = ctx.raw(ncq_side(n));
    std::string odd;
    for_each_matching(n, {0, matching_count(n)}, [&](std::uint64_t, const Matching& m) {
        const auto s = pairwise_stats(m);
        if (odd.empty() && s.cr + s.ne + s.al != n * (n - 1) / 2) {
            odd = m.to_string();
        }
    });
    return {enumerated(ctx, "sum x^ne y^cr q^al is symmetric in x,y", ncq_side(n), {}, swapped(raw, "x", "y")),
            equal("library i_poly", i_poly(n, ctx.jobs()), raw),
            predicate("each pair of arcs is a crossing, nesting or alignment", odd.empty(),
                      "cr + ne + al differs from n(n-1)/2", odd)};
}

std::vector<Part> cr_ne_symmetry(unsigned n, Context& ctx) {
    const MVPoly joint = poly_subst(ctx.raw(ncq_side(n)), {{"q", num(1)}});
    return {enumerated(ctx, "(cr,ne) joint distribution is symmetric", ncq_side(n), {{"q", num(1)}},
                       swapped(joint, "x", "y"))};
}

unsigned short_arcs(const Matching& m) {
    return static_cast<unsigned>(
        std::count_if(m.arcs().begin(), m.arcs().end(), [](const Arc& a) { return a.closer == a.opener + 1; }));
}

std::vector<Part> count_catalan(unsigned n, Context& ctx) {
    const MVPoly c = rat(BigRat(catalan(n)));
    return {enumerated(ctx, "noncrossing", ncq_side(n), {{"x", num(1)}, {"y", num(0)}, {"q", num(1)}}, c),
            enumerated(ctx, "nonnesting", ncq_side(n), {{"x", num(0)}, {"y", num(1)}, {"q", num(1)}}, c)};
}

std::vector<Part> count_narayana(unsigned n, Context& ctx) {
    MVPoly nara;
    for (unsigned k = 1; k <= n; ++k) {
        nara.add_term(Monomial::variable("k", k), BigRat(narayana(n, k)));
    }
    const Side noncrossing = matching_side(tag("noncrossing-short", n), n, {"k"}, [](const Matching& m, std::vector<unsigned>& e) {
        if (pairwise_stats(m).cr != 0) {
            return false;
        }
        e = {short_arcs(m)};
        return true;
    });
    const Side nonnesting = matching_side(tag("nonnesting-lrp", n), n, {"k"}, [](const Matching& m, std::vector<unsigned>& e) {
        const auto s = pairwise_stats(m);
        if (s.ne != 0) {
            return false;
        }
        e = {s.lrp};
        return true;
    });
    return {enumerated(ctx, "noncrossing by blocks (i,i+1)", noncrossing, {}, nara),
            enumerated(ctx, "nonnesting by LR pairs", nonnesting, {}, nara)};
}

std::vector<Part> count_lne_fact(unsigned n, Context& ctx) {
    const Side side = matching_side(tag("lne-free", n), n, {}, [](const Matching& m, std::vector<unsigned>&) {
        return pairwise_stats(m).lne == 0;
    });
    return {enumerated(ctx, "no left-nestings", side, {}, rat(BigRat(factorial(n))))};
}

std::vector<Part> block_partition(unsigned n, Context&) {
    std::string bad;
    std::string why;
    for_each_matching(n, {0, matching_count(n)}, [&](std::uint64_t, const Matching& m) {
        if (!bad.empty()) {
            return;
        }
        const auto b = block_stats(m);
        unsigned fixed = 0;
        unsigned el = 0;
        unsigned ol = 0;
        unsigned es = 0;
        unsigned os = 0;
        for (const Arc& a : m.arcs()) {
            const auto c = classify_block(a);
            fixed += c.closer_class == CloserClass::Fixed;
            el += c.closer_class == CloserClass::EvenLarger;
            ol += c.closer_class == CloserClass::OddLarger;
            es += c.opener_class == OpenerClass::EvenSmaller;
            os += c.opener_class == OpenerClass::OddSmaller;
        }
        if (b.fixb + b.elblock + b.olblock != n) {
            why = "fixb + elblock + olblock != n";
        } else if (b.fixb + b.osblock + b.olblock != n) {
            why = "fixb + osblock + olblock != n";
        } else if (b.esblock + b.fixb + b.elblock != n) {
            why = "esblock != n - fixb - elblock";
        } else if (fixed != b.fixb || el != b.elblock || ol != b.olblock || es != b.esblock || os != b.osblock) {
            why = "counts disagree with per-arc classification";
        }
        if (!why.empty()) {
            bad = m.to_string();
        }
    });
    return {predicate("block class partitions", bad.empty(), why, bad)};
}

std::vector<Part> psi_gen(unsigned n, Context&) {
    std::vector<Matching> made;
    std::string broken;
    auto record = [&](const Matching& parent, const Matching& child, ReduceTag t) {
        const auto [back, got] = reduce_step(child);
        if (broken.empty() && (back != parent || got != t)) {
            broken = child.to_string();
        }
        made.push_back(child);
    };
    for (const Matching& m : enumerate_matchings(n)) {
        record(m, extend_psi(m), ReduceTag::Psi);
        for (const Arc& a : m.arcs()) {
            record(m, extend_psi1(m, a), ReduceTag::Psi1);
            record(m, extend_psi2(m, a), ReduceTag::Psi2);
        }
    }
    std::sort(made.begin(), made.end());
    auto all = enumerate_matchings(n + 1);
    std::sort(all.begin(), all.end());
    const auto dup = std::adjacent_find(made.begin(), made.end());
    return {predicate("reduce_step inverts each constructor", broken.empty(), "reduce_step did not recover the parent",
                      broken),
            predicate("no matching is produced twice", dup == made.end(), "duplicate",
                      dup == made.end() ? std::string() : dup->to_string()),
            predicate("every matching of order n+1 is produced", made == all, "generated set differs from M_(n+1)")};
}

std::vector<Part> right_mirror(unsigned n, Context&) {
    std::string bad;
    for_each_matching(n, {0, matching_count(n)}, [&](std::uint64_t, const Matching& m) {
        if (!bad.empty()) {
            return;
        }
        const auto s = pairwise_stats(m);
        const auto r = pairwise_stats(mirror(m));
        if (s.rne != r.lne || s.rcr != r.lcr || s.cr != r.cr || s.ne != r.ne) {
            bad = m.to_string();
        }
    });
    return {predicate("right statistics equal left statistics of the reflection", bad.empty(),
                      "rne/rcr differ from lne/lcr of the mirror", bad)};
}

std::vector<Part> m_grammar(unsigned n, Context& ctx) {
    const MVPoly derived =
        divide_by_monomial(d_iter(grammars::matching_quadruple(), var("J"), n), Monomial::variable("J"));
    return {enumerated(ctx, "D^n(J) = J M_n(a,b,s,t)", m_side(n), {{"x", var("a")}, {"y", var("b")}}, derived)};
}

} // namespace

void register_matching_checks(std::vector<CheckDef>& out) {
    out.push_back(make_check("M-MAIN", "M_n(x,y,s,t) equals (2y)^n A_n(x/y,s/y,t/2); elblock and olblock forms", 0,
                             kMatchingMax, m_main));
    out.push_back(make_check("M-SYM", "M_n(x,y,s,t) = M_n(y,x,s,t)", 1, kMatchingMax, m_sym));
    out.push_back(make_egf_check("M-EGF", "EGF of M_n(x,y,s,t) at x=1/2, y=3, s=1/3, t in {1,1/2}", m_egf));
    out.push_back(make_check("TRACE-RISING", "sum q^trace = q(q+2)...(q+2n-2)", 1, kMatchingMax, trace_rising));
    out.push_back(make_check("STIRLING1-ID", "sum q^trace = sum 2^(n-k) c(n,k) q^k", 1, kMatchingMax, stirling1_id));
    out.push_back(make_check("CONV", "2^n A_n(x,p,q) = sum C(n,k) P_k P_(n-k) over matchings", 0, kMatchingMax - 1, conv));
    out.push_back(make_check("COR2", "specializations of M_n at t=-2", 1, kMatchingMax - 1, cor2));
    out.push_back(make_check("M-GAMMA", "s-stratified gamma expansion of M_n with nonnegative gamma_{n,i,j}", 1,
                             kMatchingMax - 1, m_gamma));
    out.push_back(make_egf_check("CALLAN-EGF", "matchings without even-to-odd blocks against sqrt(e^z/(2-e^z))",
                                 no_even_to_odd_egf));
    out.push_back(make_check("KZ-SYM", "sum x^ne y^cr q^al is symmetric in x and y", 1, kMatchingMax - 1, kz_sym));
    out.push_back(make_check("KLAZAR-SYM", "(cr, ne) has a symmetric joint distribution", 1, kMatchingMax - 1,
                             cr_ne_symmetry));
    out.push_back(make_check("COUNT-CATALAN", "noncrossing and nonnesting matchings are counted by C_n", 1,
                             kMatchingMax, count_catalan));
    out.push_back(make_check("COUNT-NARAYANA",
                             "noncrossing by blocks (i,i+1) and nonnesting by LR pairs give N(n,k)", 1, kMatchingMax,
                             count_narayana));
    out.push_back(make_check("COUNT-LNE-FACT", "n! matchings have no left-nestings", 1, kMatchingMax, count_lne_fact));
    out.push_back(make_check("BLOCK-PARTITION", "closer and opener classes partition the blocks", 1, kMatchingMax,
                             block_partition));
    out.push_back(make_check("PSI-GEN", "psi, psi1, psi2 generate M_(n+1) bijectively", 0, kMatchingMax - 1, psi_gen));
    out.push_back(make_check("RIGHT-MIRROR", "right nestings and crossings mirror the left ones", 1, kMatchingMax,
                             right_mirror));
    out.push_back(make_check("M-GRAMMAR", "D^n(J) = J M_n(a,b,s,t) for the matching grammar", 0, kMatchingMax,
                             m_grammar));
}

} // namespace chordlab::checks
