#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "chordlab/errors.hpp"
#include "chordlab/matchings.hpp"
#include "chordlab/poly_text.hpp"
#include "chordlab/sequences.hpp"
#include "oracle.hpp"

using namespace chordlab;

namespace {

MVPoly P(const char* text) { return parse_poly(text); }

Matching M(const char* text) { return parse_matching(text); }

oracle::Arcs arcs_of(const Matching& m) {
    oracle::Arcs a;
    for (const auto& arc : m.arcs()) a.emplace_back(arc.opener, arc.closer);
    return a;
}

// Trace indices straight from the reduction rule: delete a trailing fixed
// block, otherwise contract the arcs ending at 2n-1 and 2n into one arc.
std::set<int> trace_oracle(oracle::Arcs m) {
    std::set<int> trace;
    while (!m.empty()) {
        for (auto [i, j] : m)
            if (j == i + 1 && i % 2 == 1) trace.insert(i);
        const int top = static_cast<int>(2 * m.size());
        oracle::Arcs next;
        int a = 0, b = 0;
        for (auto [i, j] : m) {
            if (j == top - 1) a = i;
            else if (j == top) b = i;
            else next.emplace_back(i, j);
        }
        if (b == top - 1) {
            // (2n-1, 2n) is itself an arc: drop it
        } else {
            next.emplace_back(std::min(a, b), std::max(a, b));
        }
        m = next;
    }
    return trace;
}

} // namespace

TEST_CASE("enumeration agrees with an independent generator") {
    CHECK(enumerate_matchings(0).size() == 1);
    CHECK(enumerate_matchings(1).front().to_string() == "(1,2)");
    const auto m2 = enumerate_matchings(2);
    REQUIRE(m2.size() == 3);
    CHECK(m2[0].to_string() == "(1,2)(3,4)");
    CHECK(m2[1].to_string() == "(1,3)(2,4)");
    CHECK(m2[2].to_string() == "(2,3)(1,4)");
    CHECK(enumerate_matchings(4).size() == 105);
    for (unsigned n = 0; n <= 6; ++n) {
        std::set<std::string> lib, ref;
        const auto all = enumerate_matchings(n);
        for (std::size_t r = 0; r < all.size(); ++r) {
            lib.insert(all[r].to_string());
            if (r % 7 == 0) CHECK(unrank_matching(n, r) == all[r]);
        }
        for (const auto& a : oracle::matchings(static_cast<int>(n))) ref.insert(oracle::arcs_string(a));
        CHECK(lib == ref);
        CHECK(all.size() == lib.size());
        CHECK(matching_count(n) == all.size());
    }
}

TEST_CASE("standard form and validation") {
    CHECK(M("(1,4)(2,3)").to_string() == "(2,3)(1,4)");
    CHECK(M(" (2, 3) (1,4) ") == M("(2,3)(1,4)"));
    CHECK_THROWS(M("(1,2)(2,3)"));
    CHECK_THROWS(M("(1,2)(4,5)"));
    CHECK(M("(2,1)") == M("(1,2)"));
    CHECK(mirror(M("(1,3)(2,4)")) == M("(1,3)(2,4)"));
    CHECK(mirror(M("(1,2)(3,6)(4,5)")) == M("(1,4)(2,3)(5,6)"));
    for (const auto& m : enumerate_matchings(5)) CHECK(mirror(mirror(m)) == m);
}

TEST_CASE("block classes") {
    auto b = block_stats(M("(1,2)(3,4)"));
    CHECK(b.fixb == 2);
    CHECK(b.elblock == 0);
    CHECK(b.olblock == 0);
    b = block_stats(M("(2,3)(1,4)"));
    CHECK(b.olblock == 1);
    CHECK(b.elblock == 1);
    CHECK(b.esblock == 1);
    CHECK(b.osblock == 1);
    CHECK(classify_block({2, 3}).closer_class == CloserClass::OddLarger);
    CHECK(classify_block({2, 3}).opener_class == OpenerClass::EvenSmaller);
    CHECK(classify_block({3, 4}).closer_class == CloserClass::Fixed);
    CHECK(classify_block({2, 3}).closer_class != CloserClass::Fixed);

    for (unsigned n = 1; n <= 6; ++n) {
        for (const auto& m : enumerate_matchings(n)) {
            const auto s = block_stats(m);
            const auto r = oracle::blocks(arcs_of(m));
            CHECK(s.fixb == r.fixb);
            CHECK(s.elblock == r.el);
            CHECK(s.olblock == r.ol);
            CHECK(s.esblock == r.es);
            CHECK(s.osblock == r.os);
            CHECK(s.even_to_odd == r.even_to_odd);
            CHECK(s.fixb + s.elblock + s.olblock == n);
            CHECK(s.fixb + s.osblock + s.olblock == n);
            CHECK(s.esblock == n - s.fixb - s.elblock);
        }
    }
}

TEST_CASE("pairwise statistics") {
    auto p = pairwise_stats(M("(2,3)(1,4)"));
    CHECK(p.ne == 1);
    CHECK(p.lne == 1);
    CHECK(p.cr == 0);
    CHECK(p.al == 0);
    CHECK(p.lrp == 1);
    p = pairwise_stats(M("(1,3)(2,4)"));
    CHECK(p.cr == 1);
    CHECK(p.lcr == 1);
    CHECK(p.ne == 0);
    CHECK(p.lrp == 1);
    CHECK(p.rrp == 1);

    for (unsigned n = 1; n <= 6; ++n) {
        for (const auto& m : enumerate_matchings(n)) {
            const auto s = pairwise_stats(m);
            const auto r = oracle::pairs(arcs_of(m));
            CHECK(s.cr == r.cr);
            CHECK(s.ne == r.ne);
            CHECK(s.al == r.al);
            CHECK(s.lne == r.lne);
            CHECK(s.lcr == r.lcr);
            CHECK(s.nal == r.nal);
            CHECK(s.rne == r.rne);
            CHECK(s.rcr == r.rcr);
            CHECK(s.lrp == r.lrp);
            CHECK(s.rrp == r.rrp);
            CHECK(s.cr + s.ne + s.al == n * (n - 1) / 2);
            CHECK(s.lrp + s.rrp == n);
            CHECK(s.lrp >= 1);
            // the mirror image swaps left and right neighbor patterns
            const auto t = pairwise_stats(mirror(m));
            CHECK(t.rne == s.lne);
            CHECK(t.rcr == s.lcr);
        }
    }
}

TEST_CASE("noncrossing matchings are counted by Catalan and Narayana numbers") {
    for (unsigned n = 1; n <= 7; ++n) {
        std::map<unsigned, long> by_short;
        long total = 0;
        for (const auto& m : enumerate_matchings(n)) {
            if (pairwise_stats(m).cr != 0) continue;
            ++total;
            unsigned k = 0;
            for (const auto& a : m.arcs()) k += a.closer == a.opener + 1;
            ++by_short[k];
        }
        CHECK(catalan(n) == total);
        for (unsigned k = 1; k <= n; ++k) CHECK(narayana(n, k) == by_short[k]);
    }
}

TEST_CASE("generation algorithm") {
    CHECK(extend_psi(M("(1,2)")) == M("(1,2)(3,4)"));
    CHECK(extend_psi1(M("(1,2)"), {1, 2}) == M("(1,3)(2,4)"));
    CHECK(extend_psi2(M("(1,2)"), {1, 2}) == M("(2,3)(1,4)"));
    CHECK_THROWS_AS(extend_psi1(M("(1,2)"), {1, 3}), ArcNotFound);
    CHECK_THROWS_AS(extend_psi2(M("(1,2)(3,4)"), {2, 3}), ArcNotFound);

    auto [m0, t0] = reduce_step(M("(1,2)(3,4)"));
    CHECK(m0 == M("(1,2)"));
    CHECK(t0 == ReduceTag::Psi);
    auto [m1, t1] = reduce_step(M("(1,3)(2,4)"));
    CHECK(m1 == M("(1,2)"));
    CHECK(t1 == ReduceTag::Psi1);
    auto [m2, t2] = reduce_step(M("(2,4)(5,7)(6,8)(3,9)(1,10)"));
    CHECK(m2 == M("(1,3)(2,4)(5,7)(6,8)"));
    CHECK(t2 == ReduceTag::Psi2);
    CHECK(tag_name(ReduceTag::Psi1) == "psi1");

    for (unsigned n = 0; n <= 6; ++n) {
        std::map<std::string, int> hits;
        for (const auto& m : enumerate_matchings(n)) {
            const Matching e = extend_psi(m);
            ++hits[e.to_string()];
            CHECK(reduce_step(e) == std::make_pair(m, ReduceTag::Psi));
            for (const auto& arc : m.arcs()) {
                const Matching a = extend_psi1(m, arc);
                const Matching b = extend_psi2(m, arc);
                ++hits[a.to_string()];
                ++hits[b.to_string()];
                CHECK(reduce_step(a) == std::make_pair(m, ReduceTag::Psi1));
                CHECK(reduce_step(b) == std::make_pair(m, ReduceTag::Psi2));
            }
        }
        CHECK(hits.size() == matching_count(n + 1));
        bool once = true;
        for (const auto& [k, c] : hits) once = once && c == 1;
        CHECK(once);
    }

    // random walks at larger orders
    std::mt19937 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        Matching m;
        for (unsigned n = 0; n < 12; ++n) {
            std::uniform_int_distribution<unsigned> pick(0, 2 * n);
            const unsigned r = pick(rng);
            const Matching next = r == 2 * n ? extend_psi(m)
                                  : r % 2 == 0 ? extend_psi1(m, m.arcs()[r / 2])
                                               : extend_psi2(m, m.arcs()[r / 2]);
            CHECK(reduce_step(next).first == m);
            m = next;
        }
    }
}

TEST_CASE("trace indices") {
    CHECK(trace_indices(M("(1,3)(2,4)(6,7)(5,8)(9,10)")) == std::set<int>{1, 5, 9});
    CHECK(trace_indices(M("(2,4)(5,7)(6,8)(3,9)(1,10)")) == std::set<int>{1, 5});
    CHECK(trace_indices(M("(1,2)(3,4)(5,6)")) == std::set<int>{1, 3, 5});
    for (unsigned n = 1; n <= 6; ++n) {
        oracle::Table dist;
        for (const auto& m : enumerate_matchings(n)) {
            const auto t = trace_indices(m);
            CHECK(t == trace_oracle(arcs_of(m)));
            CHECK(t.count(1) == 1);
            CHECK(trace_count(m) == t.size());
            ++dist[{static_cast<unsigned>(t.size())}];
        }
        CHECK(oracle::table_of(rising_factorial(BigRat(2), n), {"q"}) == dist);
        oracle::Table stirling;
        for (unsigned k = 1; k <= n; ++k) {
            stirling[{k}] = BigInt(stirling1_unsigned(n, k) * (BigInt(1) << (n - k))).get_si();
        }
        CHECK(stirling == dist);
    }
}

TEST_CASE("matching polynomials") {
    CHECK(m_poly(1) == P("s*t"));
    CHECK(m_poly(2) == P("(s*t)^2 + 2*t*x*y"));
    CHECK(m_poly(3) == P("(s*t)^3 + 6*s*t^2*x*y + 4*t*x*y*(x + y)"));
    CHECK(i_poly(2) == P("x + y + q"));
    for (unsigned n = 1; n <= 6; ++n) {
        oracle::Table m_ref, i_ref;
        for (const auto& a : oracle::matchings(static_cast<int>(n))) {
            const auto b = oracle::blocks(a);
            const auto p = oracle::pairs(a);
            ++m_ref[{b.el, b.ol, b.fixb, static_cast<unsigned>(trace_oracle(a).size())}];
            ++i_ref[{p.ne, p.cr, p.al}];
        }
        CHECK(oracle::table_of(m_poly(n, 2), {"x", "y", "s", "t"}) == m_ref);
        CHECK(oracle::table_of(i_poly(n, 3), {"x", "y", "q"}) == i_ref);
        CHECK(swap_variables(m_poly(n), "x", "y") == m_poly(n));
    }
}

TEST_CASE("matching CSV rows quote the arc list") {
    CHECK(matching_csv_header() == "n,rank,arcs,fixb,elblock,olblock,esblock,osblock,cr,ne,al,lne,lcr,nal,lrp,rrp,trace");
    CHECK(matching_csv_row(2, 2, M("(2,3)(1,4)")) == "2,2,\"(2,3)(1,4)\",0,1,1,1,1,0,1,0,1,0,0,1,1,1");
}
