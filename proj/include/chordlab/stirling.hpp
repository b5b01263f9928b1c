#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chordlab/parallel.hpp"
#include "chordlab/poly.hpp"

namespace chordlab {

/// Word over {1,1,...,n,n} in which every value between the two copies of i
/// exceeds i.
struct StirlingPermutation {
    std::vector<int> word;

    unsigned order() const noexcept { return static_cast<unsigned>(word.size() / 2); }
    bool is_valid() const;
    std::string to_string() const;
    friend bool operator==(const StirlingPermutation&, const StirlingPermutation&) = default;
};

/// Counted over i = 0..2n with zeros padded at both ends.
struct StirlingStats {
    unsigned asc = 0;
    unsigned plat = 0;
    unsigned des = 0;
};

StirlingStats stirling_stats(const StirlingPermutation& t);

/// Rank digits choose, for each k, the gap (0..2k-2) that receives "kk".
std::uint64_t stirling_count(unsigned n);
void for_each_stirling(unsigned n, RankRange range,
                       const std::function<void(std::uint64_t, const StirlingPermutation&)>& fn);
std::vector<StirlingPermutation> enumerate_stirling(unsigned n);

/// Q_n(x,y,z) = sum x^asc y^plat z^des.
MVPoly q_poly(unsigned n, unsigned jobs = 1);

std::string stirling_csv_header();
std::string stirling_csv_row(unsigned n, std::uint64_t rank, const StirlingPermutation& t);

} // namespace chordlab
