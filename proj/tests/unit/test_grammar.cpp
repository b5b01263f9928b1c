#include <doctest.h>

#include <random>

#include "chordlab/errors.hpp"
#include "chordlab/grammar.hpp"
#include "chordlab/matchings.hpp"
#include "chordlab/poly_text.hpp"
#include "chordlab/trees.hpp"
#include "oracle.hpp"

using namespace chordlab;

namespace {

MVPoly P(const char* text) { return parse_poly(text); }

MVPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> terms(1, 4);
    std::uniform_int_distribution<unsigned> exp(0, 2);
    std::uniform_int_distribution<int> coeff(-4, 4);
    MVPoly p;
    for (int t = terms(rng); t > 0; --t) {
        std::vector<Monomial::Factor> f;
        for (const char* v : {"a", "b", "c"}) {
            if (unsigned e = exp(rng)) f.emplace_back(v, e);
        }
        p.add_term(Monomial(f), BigRat(coeff(rng)));
    }
    return p;
}

Grammar random_grammar(std::mt19937& rng) {
    Grammar g;
    // c stays unruled so that constants are exercised too
    g.add_rule("a", random_poly(rng));
    g.add_rule("b", random_poly(rng));
    return g;
}

MVPoly from_coeffs(const oracle::Coeffs& c, const std::array<const char*, 3>& v) {
    MVPoly p;
    for (auto [key, value] : c) {
        p.add_term(Monomial({{v[0], key[0]}, {v[1], key[1]}, {v[2], key[2]}}), BigRat(value));
    }
    return p;
}

} // namespace

TEST_CASE("formal derivative is linear and obeys the Leibniz rule") {
    std::mt19937 rng(1234);
    for (int i = 0; i < 150; ++i) {
        const Grammar g = random_grammar(rng);
        const MVPoly p = random_poly(rng), q = random_poly(rng);
        CHECK(d_apply(g, p * q) == d_apply(g, p) * q + p * d_apply(g, q));
        CHECK(d_apply(g, BigRat(3) * p - q) == BigRat(3) * d_apply(g, p) - d_apply(g, q));
        CHECK(d_apply(g, MVPoly(BigRat(7))).is_zero());
        CHECK(d_apply(g, P("c^3")).is_zero());
        CHECK(d_iter(g, p, 0) == p);
        CHECK(d_iter(g, p, 2) == d_apply(g, d_apply(g, p)));
    }
}

TEST_CASE("rule files") {
    const Grammar g = parse_grammar("# comment\n\na -> a*b\n  b -> a*b   # trailing\n");
    REQUIRE(g.rule("a") != nullptr);
    CHECK(*g.rule("a") == P("a*b"));
    CHECK(g.rule("z") == nullptr);
    CHECK_THROWS_AS(parse_grammar("a -> b\na -> c\n"), DuplicateRule);
    try {
        parse_grammar("a -> b\nb -> (a\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_grammar("a b\n"), ParseError);
    CHECK(parse_grammar(g.to_string()).rules() == g.rules());
}

TEST_CASE("Stirling and Eulerian grammars") {
    const Grammar s2 = grammars::stirling_second_kind();
    CHECK(d_iter(s2, P("a"), 2) == P("a*b + a*b^2"));
    CHECK(d_iter(s2, P("a"), 4) == P("a*b + 7*a*b^2 + 6*a*b^3 + a*b^4"));

    const Grammar eu = grammars::eulerian();
    CHECK(d_iter(eu, P("a"), 2).to_string() == "a^2*b + a*b^2");
    // D^n(a) = D^n(b) = a b^n A_n(a/b): compare with descents counted directly
    for (int n = 1; n <= 6; ++n) {
        MVPoly expected;
        for (const auto& p : oracle::permutations(n)) {
            const unsigned d = oracle::des(p);
            expected += MVPoly(Monomial({{"a", d + 1}, {"b", static_cast<unsigned>(n) - d}}));
        }
        CHECK(d_iter(eu, P("a"), n) == expected);
        CHECK(d_iter(eu, P("b"), n) == expected);
    }
}

TEST_CASE("permutation quadruple grammar generates exc, drop, fix, cyc") {
    const Grammar g = grammars::permutation_quadruple();
    for (int n = 1; n <= 6; ++n) {
        oracle::Table expected;
        for (const auto& p : oracle::permutations(n)) {
            ++expected[{oracle::exc(p), oracle::drop(p), oracle::fix(p), oracle::cycles(p)}];
        }
        const MVPoly dn = divide_by_monomial(d_iter(g, P("I"), n), Monomial::variable("I"));
        CHECK(oracle::table_of(dn, {"x", "y", "p", "q"}) == expected);
    }
}

TEST_CASE("matching quadruple grammar") {
    const Grammar g = grammars::matching_quadruple();
    CHECK(d_iter(g, P("J"), 1) == P("J*s*t"));
    CHECK(d_iter(g, P("J"), 2) == P("J*s^2*t^2 + 2*J*a*b*t"));
    for (unsigned n = 1; n <= 5; ++n) {
        const MVPoly dn = divide_by_monomial(d_iter(g, P("J"), n), Monomial::variable("J"));
        CHECK(swap_variables(swap_variables(dn, "a", "x"), "b", "y") == m_poly(n));
    }
}

TEST_CASE("trivariate Stirling grammar") {
    const Grammar g = grammars::stirling_trivariate();
    CHECK(d_iter(g, P("x"), 1) == P("x*y*z"));
    CHECK(d_iter(g, P("x"), 2) == P("x^2*y^2*z + x^2*y*z^2 + x*y^2*z^2"));
    for (int n = 1; n <= 5; ++n) {
        oracle::Table expected;
        for (const auto& w : oracle::stirling_words(n)) {
            auto c = oracle::stirling_counts(w);
            ++expected[{c[0], c[1], c[2]}];
        }
        CHECK(oracle::table_of(d_iter(g, P("x"), n), {"x", "y", "z"}) == expected);
    }
}

TEST_CASE("neighbor symmetric grammar reproduces the printed iterates") {
    const Grammar g = grammars::neighbor_symmetric();
    const MVPoly a = P("a");
    CHECK(d_iter(g, a, 1) == P("a*w1"));
    CHECK(d_iter(g, a, 2) == P("a*(w1^2 + 2*w2)"));
    CHECK(d_iter(g, a, 3) == P("a*(w1^3 + 8*w1*w2 + 6*w3)"));
    CHECK(d_iter(g, a, 4) == P("a*(w1^4 + 22*w1^2*w2 + 16*w2^2 + 42*w1*w3)"));
    CHECK(d_iter(g, a, 5) == P("a*(w1^5 + 52*w1^3*w2 + 136*w1*w2^2 + 192*w1^2*w3 + 180*w2*w3)"));
    CHECK(d_iter(g, a, 6) ==
          P("a*(w1^6 + 114*w1^4*w2 + 720*w1^2*w2^2 + 272*w2^3 + 732*w1^3*w3 + 2304*w1*w2*w3 + 540*w3^2)"));
    // the coefficients are the xi numbers
    for (unsigned n = 1; n <= 7; ++n) {
        const MVPoly dn = divide_by_monomial(d_iter(g, a, n), Monomial::variable("a"));
        CHECK(dn == from_coeffs(oracle::xi_recurrence(n), {"w1", "w2", "w3"}));
    }
}

TEST_CASE("xi and gamma initial values") {
    CHECK(xi_table(1).to_poly({"x", "y", "z"}) == P("x"));
    CHECK(xi_table(2).to_poly({"x", "y", "z"}) == P("x^2 + 2*y"));
    CHECK(gamma_table(1).to_poly({"x", "y", "z"}) == P("z"));
    CHECK(gamma_table(2).to_poly({"x", "y", "z"}) == P("y*z"));
    CHECK(gamma_table(3).to_poly({"x", "y", "z"}) == P("y^2*z + 2*x*z^2"));
    for (unsigned n = 1; n <= 8; ++n) {
        CHECK(xi_table(n).to_poly({"x", "y", "z"}) == from_coeffs(oracle::xi_recurrence(n), {"x", "y", "z"}));
        CHECK(gamma_table(n).to_poly({"x", "y", "z"}) == from_coeffs(oracle::gamma_recurrence(n), {"x", "y", "z"}));
    }
}
