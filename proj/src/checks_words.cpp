#include <algorithm>

#include "check_support.hpp"
#include "chordlab/expansions.hpp"
#include "chordlab/grammar.hpp"
#include "chordlab/matching_words.hpp"
#include "chordlab/trees.hpp"

namespace chordlab::checks {

namespace {

std::string tag(const char* stem, unsigned n) { return std::string(stem) + ":" + std::to_string(n); }

// Word-level statistics, read off from_matching(M).
Side c_side(unsigned n) {
    return word_side(tag("C", n), n, {"x1", "x2", "x3", "y1", "y2"}, [](const Matching& m, std::vector<unsigned>& e) {
        const auto c = neighbor_counts(from_matching(m));
        e = {c.lne, c.lcr, c.nal, c.rrp, c.lrp};
        return true;
    });
}

Side ncr_side(unsigned n) {
    return word_side(tag("NCR", n), n, {"x", "y", "z"}, [](const Matching& m, std::vector<unsigned>& e) {
        const auto c = neighbor_counts(from_matching(m));
        e = {c.lne, c.lcr, c.lrp - 1};
        return true;
    });
}

const Bindings kNca{{"x1", var("x")}, {"x2", var("y")}, {"x3", var("z")}, {"y1", num(1)}, {"y2", num(1)}};

MVPoly asc_des(Context& ctx, unsigned n) {
    return ctx.raw(perm_side(tag("asc-des", n), n, {"x", "y"}, [](const Permutation& p, std::vector<unsigned>& e) {
        const auto s = perm_stats(p);
        e = {s.asc, s.des};
        return true;
    }));
}

std::vector<Part> mp_bij(unsigned n, Context&) {
    std::string broken;
    std::string why;
    for_each_matching(n, {0, matching_count(n)}, [&](std::uint64_t, const Matching& m) {
        if (!broken.empty()) {
            return;
        }
        const MatchingWord w = from_matching(m);
        const auto s = pairwise_stats(m);
        const auto c = neighbor_counts(w);
        if (!w.is_valid()) {
            why = "not a matching permutation";
        } else if (to_matching(w) != m) {
            why = "to_matching does not invert from_matching";
        } else if (parse_matching_word(w.to_string()) != w) {
            why = "text form does not round-trip";
        } else if (s.lne != c.lne || s.lcr != c.lcr || s.nal != c.nal || s.lrp != c.lrp || s.rrp != c.rrp) {
            why = "neighbor statistics differ between matching and word";
        }
        if (!why.empty()) {
            broken = m.to_string();
        }
    });
    std::vector<Part> parts{predicate("bijection and statistic transfer", broken.empty(), why, broken)};
    if (n <= 5) {
        auto key = [](const MatchingWord& w) { return w.to_string(); };
        std::vector<std::string> a;
        std::vector<std::string> b;
        for (const auto& w : enumerate_matching_words(n)) {
            a.push_back(key(w));
        }
        for (const auto& w : insertion_matching_words(n)) {
            b.push_back(key(w));
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        parts.push_back(predicate("insertion generator yields the same words", a == b,
                                  "word sets differ between the two generators"));
    }
    return parts;
}

Side ncq_side(unsigned n) {
    return matching_side(tag("ne-cr-al", n), n, {"x", "y", "q"}, [](const Matching& m, std::vector<unsigned>& e) {
        const auto s = pairwise_stats(m);
        e = {s.ne, s.cr, s.al};
        return true;
    });
}

std::vector<Part> i_stats(unsigned n, Context& ctx) {
    const Side words = word_side(tag("inv-coinv-rank", n), n, {"x", "y", "q"}, [](const Matching& m, std::vector<unsigned>& e) {
        const auto s = word_stats(from_matching(m));
        e = {s.inv, s.coinv, s.rank};
        return true;
    });
    return {enumerated(ctx, "sum x^inv y^coinv q^rank equals I_n(x,y,q)", words, {}, ctx.raw(ncq_side(n)))};
}

std::vector<Part> i_stats_corrected(unsigned n, Context& ctx) {
    // Beyond any reachable exponent; marks coinv < rank without wrapping.
    constexpr unsigned kImpossible = 255;
    const Side words = word_side(tag("inv-cr-rank", n), n, {"x", "y", "q"}, [](const Matching& m, std::vector<unsigned>& e) {
        const auto s = word_stats(from_matching(m));
        e = {s.inv, s.coinv >= s.rank ? s.coinv - s.rank : kImpossible, s.rank};
        return true;
    });
    std::string bad;
    for_each_matching(n, {0, matching_count(n)}, [&](std::uint64_t, const Matching& m) {
        if (!bad.empty()) {
            return;
        }
        const auto p = pairwise_stats(m);
        const auto w = word_stats(from_matching(m));
        if (p.ne != w.inv || p.al != w.rank || p.cr + w.rank != w.coinv) {
            bad = from_matching(m).to_string();
        }
    });
    return {enumerated(ctx, "sum x^inv y^(coinv-rank) q^rank equals I_n(x,y,q)", words, {}, ctx.raw(ncq_side(n))),
            predicate("ne = inv, al = rank, cr = coinv - rank", bad.empty(), "statistic mismatch", bad)};
}

Grammar neighbor_grammar() {
    return parse_grammar("I -> I*x1*y1\n"
                         "x1 -> x1*x2*y1\n"
                         "x2 -> x1*x2*y1\n"
                         "x3 -> x1*x3*y1\n"
                         "y1 -> x3*y1*y2\n"
                         "y2 -> x2*y1*y2\n"
                         "E -> E*x3*y2\n");
}

std::vector<Part> c_grammar(unsigned n, Context& ctx) {
    const MVPoly seed = var("I") * var("y2") * var("E");
    const MVPoly derived = divide_by_monomial(d_iter(neighbor_grammar(), seed, n), Monomial({{"E", 1}, {"I", 1}}));
    return {enumerated(ctx, "D^n(I y2 E) = I E C_(n+1)", c_side(n + 1), {}, derived),
            equal("library grammar agrees with the rule file", d_iter(grammars::neighbor(), seed, n),
                  d_iter(neighbor_grammar(), seed, n))};
}

std::vector<Part> c_epos(unsigned n, Context& ctx) {
    const MVPoly x1 = var("x1");
    const MVPoly x2 = var("x2");
    const MVPoly x3 = var("x3");
    const MVPoly y1 = var("y1");
    const MVPoly y2 = var("y2");
    const MVPoly w1 = x1 * y1 + x2 * y1 + x3 * y2;
    const MVPoly w2 = x1 * x2 * y1 * y1 + x1 * x3 * y1 * y2 + x2 * x3 * y1 * y2;
    const MVPoly w3 = x1 * x2 * x3 * y1 * y1 * y2;
    const CoeffTable xi = xi_table(n);
    const MVPoly expansion = y2 * poly_subst(xi.to_poly({"a", "b", "c"}), {{"a", w1}, {"b", w2}, {"c", w3}});

    std::vector<Part> parts;
    parts.push_back(enumerated(ctx, "C_(n+1) = y2 xi_n(w1,w2,w3)", c_side(n + 1), {}, expansion));
    const MVPoly nca = poly_subst(ctx.raw(c_side(n + 1)), kNca);
    parts.push_back(enumerated(ctx, "NCA_(n+1) = NCR_(n+1)", ncr_side(n + 1), {}, nca));
    parts.push_back(equal("library nca_poly", nca_poly(n + 1, ctx.jobs()), nca));
    parts.push_back(equal("library ncr_poly", ncr_poly(n + 1, ctx.jobs()), ctx.raw(ncr_side(n + 1))));

    const auto coeffs = esym_expand(nca, {"x", "y", "z"});
    bool match = coeffs.size() == xi.entries.size();
    std::string first_bad;
    for (const auto& [key, c] : coeffs) {
        const auto it = xi.entries.find(key);
        if (c.sign() < 0 || it == xi.entries.end() || BigRat(it->second) != c) {
            match = false;
            if (first_bad.empty()) {
                first_bad = "e1^" + std::to_string(key[0]) + " e2^" + std::to_string(key[1]) + " e3^" +
                            std::to_string(key[2]) + " has coefficient " + c.to_string();
            }
        }
    }
    parts.push_back(predicate("e-expansion of NCA_(n+1) is xi_n with nonnegative coefficients", match,
                              "e-coefficients differ from the xi table", first_bad));
    return parts;
}

std::vector<Part> six_eulerian(unsigned n, Context& ctx) {
    const MVPoly a = asc_des(ctx, n);
    const MVPoly x = var("x");
    const MVPoly y = var("y");
    const MVPoly zero = num(0);
    const MVPoly one = num(1);
    std::vector<Part> parts;
    parts.push_back(enumerated(ctx, "nal=0: x^lne y^lcr", c_side(n),
                               {{"x1", x}, {"x2", y}, {"x3", zero}, {"y1", one}, {"y2", one}}, a));
    parts.push_back(enumerated(ctx, "lcr=0: x^lne y^nal", c_side(n),
                               {{"x1", x}, {"x2", zero}, {"x3", y}, {"y1", one}, {"y2", one}}, a));
    parts.push_back(enumerated(ctx, "lne=0: x^lcr y^nal", c_side(n),
                               {{"x1", zero}, {"x2", x}, {"x3", y}, {"y1", one}, {"y2", one}}, a));
    parts.push_back(enumerated(ctx, "lne=0: x^lcr y^(lrp-1)", ncr_side(n), {{"x", zero}, {"y", x}, {"z", y}}, a));
    parts.push_back(enumerated(ctx, "lcr=0: x^lne y^(lrp-1)", ncr_side(n), {{"y", zero}, {"z", y}}, a));
    parts.push_back(enumerated(ctx, "lrp=1: x^lne y^lcr", ncr_side(n), {{"z", zero}}, a));
    parts.push_back(equal("library eulerian_xy", eulerian_xy(n, ctx.jobs()), a));
    return parts;
}

std::vector<Part> nca_recu(unsigned n, Context& ctx) {
    const MVPoly x = var("x");
    const MVPoly y = var("y");
    const MVPoly z = var("z");
    std::vector<Part> parts;
    const MVPoly prev = poly_subst(ctx.raw(c_side(n)), kNca);
    const MVPoly rhs = MVPoly(BigRat(static_cast<long>(n))) * (x + y + z) * prev -
                       (x * x * poly_partial(prev, "x") + y * y * poly_partial(prev, "y") +
                        z * z * poly_partial(prev, "z"));
    parts.push_back(enumerated(ctx, "NCA_(n+1) recursion", c_side(n + 1), kNca, rhs));
    static const char* const golden[] = {
        "", "1", "x + y + z", "x^2 + 4*x*y + y^2 + 4*x*z + 4*y*z + z^2",
        "x^3 + 11*x^2*y + 11*x*y^2 + y^3 + 11*x^2*z + 36*x*y*z + 11*y^2*z + 11*x*z^2 + 11*y*z^2 + z^3"};
    if (n < std::size(golden)) {
        parts.push_back(enumerated(ctx, "printed NCA_n", c_side(n), kNca, P(golden[n])));
    }
    return parts;
}

} // namespace

void register_word_checks(std::vector<CheckDef>& out) {
    out.push_back(make_check("MP-BIJ", "matching permutations: bijection, text round trip, neighbor statistic transfer",
                             1, kMatchingMax - 1, mp_bij));
    out.push_back(make_check(
        "I-STATS", "sum x^inv y^coinv q^rank over MP_n equals I_n(x,y,q), with coinv read literally", 1,
        kMatchingMax - 1, i_stats,
        "Read literally, coinv counts every ascending unbarred pair, which includes the rank pairs; the sum then "
        "differs from I_n. I-STATS-CORRECTED checks the reading with coinv - rank."));
    out.push_back(make_check("I-STATS-CORRECTED", "sum x^inv y^(coinv-rank) q^rank equals I_n(x,y,q); per-word transfer",
                             1, kMatchingMax - 1, i_stats_corrected));
    out.push_back(make_check("C-GRAMMAR", "D_G^n(I y2 E) = I E C_(n+1) for the neighbor grammar", 0, kMatchingMax - 1,
                             c_grammar));
    out.push_back(make_check("C-EPOS", "C_(n+1) = y2 xi_n(w1,w2,w3); NCA = NCR; e-positivity of NCA", 1,
                             kMatchingMax - 2, c_epos));
    out.push_back(make_check("SIX-EULERIAN", "six restricted neighbor sums equal A_n(x,y)", 1, kMatchingMax - 1,
                             six_eulerian));
    out.push_back(make_check("NCA-RECU", "NCA_(n+1) = n(x+y+z) NCA_n - (x^2 d_x + y^2 d_y + z^2 d_z) NCA_n", 1,
                             kMatchingMax - 1, nca_recu));
}

} // namespace chordlab::checks
