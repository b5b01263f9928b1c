#include <doctest.h>

#include <set>

#include "chordlab/expansions.hpp"
#include "chordlab/matching_words.hpp"
#include "chordlab/matchings.hpp"
#include "chordlab/poly_text.hpp"
#include "chordlab/stirling.hpp"
#include "chordlab/trees.hpp"
#include "oracle.hpp"

using namespace chordlab;

namespace {

MVPoly P(const char* text) { return parse_poly(text); }

oracle::Arcs arcs_of(const Matching& m) {
    oracle::Arcs a;
    for (const auto& arc : m.arcs()) a.emplace_back(arc.opener, arc.closer);
    return a;
}

} // namespace

TEST_CASE("words and matchings correspond") {
    CHECK(from_matching(parse_matching("(1,2)(3,4)")).to_string() == "1 1' 2 2'");
    CHECK(from_matching(parse_matching("(2,3)(1,4)")).to_string() == "2 1 1' 2'");
    CHECK(parse_matching_word("2 1 1' 2'") == from_matching(parse_matching("(2,3)(1,4)")));
    CHECK_THROWS(parse_matching_word("1' 1"));
    CHECK_THROWS(parse_matching_word("1 2 2' 1'"));
    MatchingWord bad{{{1, false}, {2, false}, {2, true}, {1, true}}};
    CHECK_FALSE(bad.is_valid());
    for (unsigned n = 0; n <= 5; ++n) {
        for (const auto& m : enumerate_matchings(n)) {
            const auto w = from_matching(m);
            CHECK(w.is_valid());
            CHECK(w.to_string() == oracle::word_string(oracle::word_of(arcs_of(m))));
            CHECK(to_matching(w) == m);
        }
    }
}

TEST_CASE("both generators produce every matching word once") {
    for (unsigned n = 1; n <= 6; ++n) {
        std::set<std::string> a, b;
        for (const auto& w : enumerate_matching_words(n)) a.insert(w.to_string());
        for (const auto& w : insertion_matching_words(n)) b.insert(w.to_string());
        CHECK(a == b);
        CHECK(a.size() == matching_count(n));
    }
}

TEST_CASE("neighbor classification") {
    const auto c = neighbor_classify(parse_matching_word("2 1 1' 3 4 2' 3' 4' 5 5'"));
    CHECK(c.lne == std::vector<int>{1});
    CHECK(c.lcr == std::vector<int>{4});
    CHECK(c.nal == std::vector<int>{3, 8});
    CHECK(c.rrp == std::vector<int>{6, 7});
    CHECK(c.lrp == std::vector<int>{2, 5, 9});

    const auto d = neighbor_classify(parse_matching_word("1 1' 2 2'"));
    CHECK(d.lrp == std::vector<int>{1, 3});
    CHECK(d.nal == std::vector<int>{2});

    for (unsigned n = 1; n <= 6; ++n) {
        for (const auto& m : enumerate_matchings(n)) {
            const auto w = from_matching(m);
            const auto s = neighbor_classify(w);
            const auto r = oracle::neighbors(oracle::word_of(arcs_of(m)));
            CHECK(s.lne == r.lne);
            CHECK(s.lcr == r.lcr);
            CHECK(s.nal == r.nal);
            CHECK(s.rrp == r.rrp);
            CHECK(s.lrp == r.lrp);
            // the five sets partition [2n-1]
            std::multiset<int> all;
            for (const auto* v : {&s.lne, &s.lcr, &s.nal, &s.rrp, &s.lrp}) all.insert(v->begin(), v->end());
            std::multiset<int> expected;
            for (int i = 1; i < static_cast<int>(2 * n); ++i) expected.insert(i);
            CHECK(all == expected);
            CHECK(s.rrp.size() + s.lrp.size() == n);
            CHECK(s.lne.size() + s.lcr.size() + s.nal.size() == n - 1);
            CHECK(s.lrp.size() >= 1);
            // the word statistics agree with the matching ones
            const auto counts = neighbor_counts(w);
            const auto p = pairwise_stats(m);
            CHECK(counts.lne == p.lne);
            CHECK(counts.lcr == p.lcr);
            CHECK(counts.nal == p.nal);
            CHECK(counts.lrp == p.lrp);
            CHECK(counts.rrp == p.rrp);
        }
    }
}

TEST_CASE("inversions, co-inversions and ranks") {
    auto s = word_stats(parse_matching_word("1 1' 2 2'"));
    CHECK(s.inv == 0);
    CHECK(s.coinv == 1);
    CHECK(s.rank == 1);
    s = word_stats(parse_matching_word("2 1 1' 2'"));
    CHECK(s.inv == 1);
    CHECK(s.coinv == 0);
    CHECK(s.rank == 0);
    for (unsigned n = 1; n <= 6; ++n) {
        oracle::Table corrected;
        for (const auto& m : enumerate_matchings(n)) {
            const auto w = from_matching(m);
            const auto st = word_stats(w);
            const auto r = oracle::word_counts(oracle::word_of(arcs_of(m)));
            CHECK(st.inv == r.inv);
            CHECK(st.coinv == r.coinv);
            CHECK(st.rank == r.rank);
            // inv is the nesting count; coinv minus rank is the crossing count
            const auto p = pairwise_stats(m);
            CHECK(st.inv == p.ne);
            CHECK(st.coinv - st.rank == p.cr);
            CHECK(st.rank == p.al);
            ++corrected[{st.inv, st.coinv - st.rank, st.rank}];
        }
        CHECK(oracle::table_of(i_poly(n), {"x", "y", "q"}) == corrected);
    }
}

TEST_CASE("neighbor polynomials") {
    CHECK(c_poly(1) == P("y2"));
    CHECK(c_poly(2) == P("(x1 + x2)*y1*y2 + x3*y2^2"));
    CHECK(nca_poly(1) == P("1"));
    CHECK(nca_poly(2) == P("x + y + z"));
    CHECK(nca_poly(3) == P("x^2 + 4*x*y + y^2 + 4*x*z + 4*y*z + z^2"));
    CHECK(nca_poly(4) == P("x^3 + 11*x^2*y + 11*x*y^2 + y^3 + 11*x^2*z + 36*x*y*z + 11*y^2*z + 11*x*z^2 + "
                           "11*y*z^2 + z^3"));
    for (unsigned n = 1; n <= 6; ++n) {
        oracle::Table c_ref, nca_ref, ncr_ref;
        for (const auto& a : oracle::matchings(static_cast<int>(n))) {
            const auto r = oracle::neighbors(oracle::word_of(a));
            const auto lne = static_cast<unsigned>(r.lne.size());
            const auto lcr = static_cast<unsigned>(r.lcr.size());
            const auto nal = static_cast<unsigned>(r.nal.size());
            const auto rrp = static_cast<unsigned>(r.rrp.size());
            const auto lrp = static_cast<unsigned>(r.lrp.size());
            ++c_ref[{lne, lcr, nal, rrp, lrp}];
            ++nca_ref[{lne, lcr, nal}];
            ++ncr_ref[{lne, lcr, lrp - 1}];
        }
        CHECK(oracle::table_of(c_poly(n, 2), {"x1", "x2", "x3", "y1", "y2"}) == c_ref);
        CHECK(oracle::table_of(nca_poly(n), {"x", "y", "z"}) == nca_ref);
        CHECK(oracle::table_of(ncr_poly(n), {"x", "y", "z"}) == ncr_ref);
        // NCA is symmetric in its three variables
        const MVPoly nca = nca_poly(n);
        CHECK(swap_variables(nca, "x", "y") == nca);
        CHECK(swap_variables(nca, "y", "z") == nca);
        CHECK(poly_subst(nca, {{"z", P("0")}}) == poly_subst(nca, {{"y", P("0")}, {"z", P("y")}}));
    }
    // NCA_4 at z = 0 has gamma vector (1, 8)
    const auto g = gamma_expand(poly_subst(nca_poly(4), {{"z", P("0")}}), "x", "y");
    REQUIRE(g.size() == 2);
    CHECK(g[1].second == P("8"));
}

TEST_CASE("xi substitution reproduces the neighbor polynomial") {
    // C_{n+1} = y2 * sum xi_{n;i,j,k} w1^i w2^j w3^k with w_r the elementary
    // symmetric functions of b1 = x1 y1, b2 = x2 y1, b3 = x3 y2
    const std::array<MVPoly, 3> b{P("x1*y1"), P("x2*y1"), P("x3*y2")};
    for (unsigned n = 1; n <= 4; ++n) {
        const MVPoly xi = xi_table(n).to_poly({"w1", "w2", "w3"});
        const MVPoly c = P("y2") * poly_subst(xi, {{"w1", b[0] + b[1] + b[2]},
                                                   {"w2", b[0] * b[1] + b[0] * b[2] + b[1] * b[2]},
                                                   {"w3", b[0] * b[1] * b[2]}});
        CHECK(c == c_poly(n + 1));
    }
}

TEST_CASE("Q transforms") {
    for (unsigned n = 1; n <= 5; ++n) {
        const MVPoly q = q_poly(n);
        CHECK(q_to_nca(q, n) == nca_poly(n));
        CHECK(q_to_neighbor(q, n) == c_poly(n));
    }
    CHECK_THROWS(q_to_nca(P("x^5"), 2));
}

TEST_CASE("word CSV rows") {
    CHECK(word_csv_header() == "n,rank,word,lne,lcr,nal,rrp,lrp,inv,coinv,rank_stat");
    CHECK(word_csv_row(2, 2, parse_matching_word("2 1 1' 2'")) == "2,2,2 1 1' 2',1,0,0,1,1,1,0,0");
}
