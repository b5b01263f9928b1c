#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chordlab/matchings.hpp"
#include "chordlab/poly.hpp"

namespace chordlab {

struct WordSymbol {
    int value = 0;
    bool barred = false;
    friend bool operator==(const WordSymbol&, const WordSymbol&) = default;
};

/// A matching permutation: 2n symbols where each r in [n] occurs once plain
/// and once barred, barred symbols increase left to right, and the plain r
/// comes before the barred r.
struct MatchingWord {
    std::vector<WordSymbol> symbols;

    unsigned order() const noexcept { return static_cast<unsigned>(symbols.size() / 2); }
    bool is_valid() const;
    /// e.g. "2 1 1' 2'"
    std::string to_string() const;
    friend bool operator==(const MatchingWord&, const MatchingWord&) = default;
};

MatchingWord parse_matching_word(std::string_view text);

MatchingWord from_matching(const Matching& m);
Matching to_matching(const MatchingWord& w);

/// Each index i in [2n-1] falls in exactly one set, decided by the pair
/// (sigma(i), sigma(i+1)). Indices are 1-based and sorted.
struct NeighborClassification {
    std::vector<int> lne;
    std::vector<int> lcr;
    std::vector<int> nal;
    std::vector<int> rrp;
    std::vector<int> lrp;
};

NeighborClassification neighbor_classify(const MatchingWord& w);

struct NeighborCounts {
    unsigned lne = 0;
    unsigned lcr = 0;
    unsigned nal = 0;
    unsigned rrp = 0;
    unsigned lrp = 0;
};

NeighborCounts neighbor_counts(const MatchingWord& w);

struct WordStats {
    unsigned inv = 0;
    unsigned coinv = 0;
    unsigned rank = 0;
};

WordStats word_stats(const MatchingWord& w);

/// MP_n in the order induced by enumerate_matchings.
std::vector<MatchingWord> enumerate_matching_words(unsigned n);
/// Independent generator: every word of MP_n is obtained from one of MP_{n-1}
/// by appending n' and inserting n into one of the 2n-1 earlier gaps.
std::vector<MatchingWord> insertion_matching_words(unsigned n);

/// C_n = sum x1^lne x2^lcr x3^nal y1^rrp y2^lrp.
MVPoly c_poly(unsigned n, unsigned jobs = 1);
/// NCA_n = sum x^lne y^lcr z^nal.
MVPoly nca_poly(unsigned n, unsigned jobs = 1);
/// NCR_n = sum x^lne y^lcr z^(lrp-1).
MVPoly ncr_poly(unsigned n, unsigned jobs = 1);
/// sum x^inv y^coinv q^rank over MP_n.
MVPoly word_i_poly(unsigned n, unsigned jobs = 1);

// Reciprocal transforms of Q_n(x,y,z) = sum x^a y^b z^c, done as exponent
// relabelings. Each throws Error if an exponent would become negative.

/// x1^(n-a) x2^(n-b) x3^(n-c) y1^(2n-a-b) y2^(n+1-c)
MVPoly q_to_neighbor(const MVPoly& q, unsigned n);
/// x^(n-a) y^(n-b) z^(n-c)
MVPoly q_to_nca(const MVPoly& q, unsigned n);
/// x1^(n-a) x2^(n-b) y2^(n+1-c)
MVPoly q_to_lne_lcr_lrp(const MVPoly& q, unsigned n);
/// y1^(2n-a-b) y2^(n+1-c)
MVPoly q_to_rrp_lrp(const MVPoly& q, unsigned n);

std::string word_csv_header();
std::string word_csv_row(unsigned n, std::uint64_t rank, const MatchingWord& w);

} // namespace chordlab
