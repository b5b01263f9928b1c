#include <doctest.h>

#include <set>

#include "chordlab/poly_text.hpp"
#include "chordlab/sequences.hpp"
#include "chordlab/stirling.hpp"
#include "chordlab/trees.hpp"
#include "oracle.hpp"

using namespace chordlab;

namespace {
MVPoly P(const char* text) { return parse_poly(text); }
}

TEST_CASE("Stirling permutations") {
    CHECK(enumerate_stirling(2).size() == 3);
    for (unsigned n = 1; n <= 6; ++n) {
        std::set<std::vector<int>> lib;
        for (const auto& t : enumerate_stirling(n)) {
            CHECK(t.is_valid());
            lib.insert(t.word);
            const auto s = stirling_stats(t);
            const auto r = oracle::stirling_counts(t.word);
            CHECK(s.asc == r[0]);
            CHECK(s.plat == r[1]);
            CHECK(s.des == r[2]);
        }
        const auto ref = oracle::stirling_words(static_cast<int>(n));
        CHECK(lib == std::set<std::vector<int>>(ref.begin(), ref.end()));
        CHECK(stirling_count(n) == ref.size());
        CHECK(double_factorial_odd(n) == static_cast<long>(ref.size()));
    }
    CHECK_FALSE(StirlingPermutation{{1, 2, 1, 2}}.is_valid());
}

TEST_CASE("second-order Eulerian polynomials") {
    CHECK(q_poly(1) == P("x*y*z"));
    CHECK(q_poly(2) == P("x^2*y^2*z + x^2*y*z^2 + x*y^2*z^2"));
    CHECK(poly_subst(q_poly(2), {{"x", P("1")}, {"y", P("1")}}) == P("z + 2*z^2"));
    for (unsigned n = 1; n <= 6; ++n) {
        oracle::Table ref;
        for (const auto& w : oracle::stirling_words(static_cast<int>(n))) {
            const auto c = oracle::stirling_counts(w);
            ++ref[{c[0], c[1], c[2]}];
        }
        const MVPoly q = q_poly(n, 2);
        CHECK(oracle::table_of(q, {"x", "y", "z"}) == ref);
        CHECK(swap_variables(q, "x", "z") == q);
        CHECK(swap_variables(q, "x", "y") == q);
    }
}

TEST_CASE("plane tree censuses match the recurrences") {
    CHECK(enumerate_trees(3, 2).size() == 3);
    CHECK(enumerate_trees(3, 3).front().to_string() == "1(3,2)");
    for (unsigned n = 1; n <= 7; ++n) {
        std::size_t streamed = 0;
        const auto all = enumerate_trees(n, 3);
        for_each_tree(n, 3, [&](const PlaneTree& t) {
            CHECK(t == all[streamed]);
            CHECK(t.is_valid());
            const auto d = tree_degrees(t);
            CHECK(d.leaves + d.deg1 + d.deg2 + d.deg3 == n);
            // edges = n - 1 = deg1 + 2 deg2 + 3 deg3
            CHECK(d.deg1 + 2 * d.deg2 + 3 * d.deg3 == n - 1);
            ++streamed;
        });
        CHECK(streamed == all.size());

        oracle::Coeffs xi, gamma;
        for (const auto& [k, c] : xi_census(n).entries) xi[k] = c.get_si();
        for (const auto& [k, c] : gamma_census(n).entries) gamma[k] = c.get_si();
        CHECK(xi == oracle::xi_recurrence(n));
        CHECK(gamma == oracle::gamma_recurrence(n));
        CHECK(xi_census(n) == xi_table(n));
        CHECK(gamma_census(n) == gamma_table(n));
    }
}

TEST_CASE("xi and gamma are related by an index bijection") {
    for (unsigned n = 1; n <= 7; ++n) {
        const auto xi = xi_table(n);
        const auto gamma = gamma_table(n + 1);
        CHECK(xi.entries.size() == gamma.entries.size());
        for (const auto& [key, c] : xi.entries) {
            const auto [i, j, k] = key;
            const CoeffKey g{j, i, n + 1 - i - j - k};
            REQUIRE(gamma.entries.count(g) == 1);
            CHECK(gamma.entries.at(g) == c);
        }
    }
}

TEST_CASE("coefficient table JSON") {
    CHECK(xi_table(2).to_json() ==
          R"({"family":"xi","n":2,"entries":[{"i":0,"j":1,"k":0,"c":"2"},{"i":2,"j":0,"k":0,"c":"1"}]})");
}

TEST_CASE("tree and Stirling CSV rows") {
    CHECK(tree_csv_header() == "n,rank,tree,leaves,deg1,deg2,deg3");
    CHECK(tree_csv_row(3, 0, enumerate_trees(3, 3).front()) == "3,0,\"1(3,2)\",2,0,1,0");
    CHECK(stirling_csv_header() == "n,rank,word,asc,plat,des");
    CHECK(stirling_csv_row(2, 0, StirlingPermutation{{2, 2, 1, 1}}) == "2,0,2 2 1 1,1,2,2");
}
