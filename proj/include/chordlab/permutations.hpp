#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "chordlab/parallel.hpp"
#include "chordlab/poly.hpp"

namespace chordlab {

/// One-line notation pi(1) ... pi(n); `values[i-1] == pi(i)`.
struct Permutation {
    std::vector<int> values;

    std::size_t size() const noexcept { return values.size(); }
    /// 1-based access.
    int operator()(std::size_t i) const { return values[i - 1]; }
    bool is_valid() const;
    std::string to_string() const;
    friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Signed permutation window sigma(1) ... sigma(n), entries in {+-1..+-n}.
struct SignedPermutation {
    std::vector<int> values;

    std::size_t size() const noexcept { return values.size(); }
    int operator()(std::size_t i) const { return values[i - 1]; }
    bool is_valid() const;
    /// The permutation i -> |sigma(i)|.
    Permutation absolute() const;
    std::string to_string() const;
    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

/// Entries e_1 .. e_n with 0 <= e_i <= i - 1.
struct InversionSequence {
    std::vector<int> entries;

    bool is_valid() const;
    friend bool operator==(const InversionSequence&, const InversionSequence&) = default;
};

struct PermStats {
    unsigned exc = 0;
    unsigned drop = 0;
    unsigned fix = 0;
    unsigned cyc = 0;
    unsigned asc = 0;
    unsigned des = 0;
    unsigned inv = 0;
    unsigned cda = 0; ///< cycle double ascents: pi^{-1}(i) < i < pi(i)
    unsigned dd = 0;  ///< double descents with pi(0) = pi(n+1) = 0
};

struct SignedStats {
    unsigned wexc = 0;
    unsigned exc = 0;
    unsigned fix = 0;
    unsigned single = 0;
    unsigned cyc = 0; ///< cycles of |sigma|
};

PermStats perm_stats(const Permutation& p);
SignedStats signed_stats(const SignedPermutation& s);

InversionSequence to_inversion_sequence(const Permutation& p);
Permutation from_inversion_sequence(const InversionSequence& e);

// Enumeration. Orders are lexicographic in one-line notation; ranks index
// into that order so ranges can be processed independently.

std::uint64_t permutation_count(unsigned n);
Permutation unrank_permutation(unsigned n, std::uint64_t rank);
void for_each_permutation(unsigned n, RankRange range,
                          const std::function<void(std::uint64_t, const Permutation&)>& fn);
std::vector<Permutation> enumerate_permutations(unsigned n);
/// Fixed-point-free permutations in lexicographic order.
std::vector<Permutation> enumerate_derangements(unsigned n);

std::uint64_t signed_count(unsigned n);
/// Lexicographic by signed value, e.g. n=1: (-1), (1).
SignedPermutation unrank_signed(unsigned n, std::uint64_t rank);
void for_each_signed(unsigned n, RankRange range,
                     const std::function<void(std::uint64_t, const SignedPermutation&)>& fn);
std::vector<SignedPermutation> enumerate_signed(unsigned n);

std::vector<InversionSequence> enumerate_inversion_sequences(unsigned n);

// Polynomial families.

/// A_n(x,y) = sum x^asc y^des. Also tallies sum x^exc y^(n-1-exc) in the
/// same pass and throws IdentityViolation if the two disagree.
MVPoly eulerian_xy(unsigned n, unsigned jobs = 1);
/// sum x^exc y^(n-1-exc), the excedance form of A_n(x,y).
MVPoly eulerian_xy_by_excedance(unsigned n, unsigned jobs = 1);
/// sum x^exc y^drop. Not homogeneous once fixed points occur, so it is not
/// A_n(x,y) for n >= 2.
MVPoly exc_drop_poly(unsigned n, unsigned jobs = 1);
/// A_n(x) = A_n(x, 1).
MVPoly eulerian_x(unsigned n);
/// A_n(x,p,q) = sum x^exc p^fix q^cyc.
MVPoly eulerian_xpq(unsigned n, unsigned jobs = 1);
/// sum x^exc y^drop p^fix q^cyc.
MVPoly permutation_quadruple(unsigned n, unsigned jobs = 1);
/// d_n(x,q) = sum over derangements of x^exc q^cyc.
MVPoly derangement_poly(unsigned n);
/// k -> sum_{pi in D_{n,k}} q^cyc, D_{n,k} = derangements with cda = 0, exc = k.
std::map<unsigned, MVPoly> dnk_table(unsigned n);
/// i -> #{pi in S_n : dd(pi) = 0, des(pi) = i}.
std::map<unsigned, std::uint64_t> no_double_descent_counts(unsigned n);
/// B_n(x,p,q) = sum over signed permutations of x^wexc p^fix q^cyc.
MVPoly b_poly(unsigned n, unsigned jobs = 1);
/// d_n^B(x) = B_n(x, 0, 1).
MVPoly b_derangement_poly(unsigned n);
/// r^n A_n(x, (1 + (r-1)x)/r, 1).
MVPoly colored_eulerian(unsigned n, unsigned r);

// CSV emission.
std::string permutation_csv_header();
std::string permutation_csv_row(unsigned n, std::uint64_t rank, const Permutation& p);
std::string signed_csv_header();
std::string signed_csv_row(unsigned n, std::uint64_t rank, const SignedPermutation& s);

} // namespace chordlab
