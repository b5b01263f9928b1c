#include "chordlab/stirling.hpp"

#include <algorithm>

#include "chordlab/errors.hpp"
#include "chordlab/fault_injection.hpp"
#include "chordlab/tally.hpp"

namespace chordlab {

bool StirlingPermutation::is_valid() const {
    if (word.size() % 2 != 0) {
        return false;
    }
    const auto n = static_cast<int>(order());
    std::vector<int> first(static_cast<std::size_t>(n) + 1, -1);
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t p = 0; p < word.size(); ++p) {
        const int v = word[p];
        if (v < 1 || v > n || ++seen[static_cast<std::size_t>(v)] > 2) {
            return false;
        }
        if (seen[static_cast<std::size_t>(v)] == 1) {
            first[static_cast<std::size_t>(v)] = static_cast<int>(p);
            continue;
        }
        for (auto q = static_cast<std::size_t>(first[static_cast<std::size_t>(v)]) + 1; q < p; ++q) {
            if (word[q] < v) {
                return false;
            }
        }
    }
    return true;
}

std::string StirlingPermutation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += std::to_string(word[i]);
    }
    return out;
}

StirlingStats stirling_stats(const StirlingPermutation& t) {
    StirlingStats s;
    const std::size_t len = t.word.size();
    for (std::size_t i = 0; i <= len; ++i) {
        const int a = i == 0 ? 0 : t.word[i - 1];
        const int b = i == len ? 0 : t.word[i];
        if (a < b) {
            ++s.asc;
        } else if (a == b) {
            ++s.plat;
        } else {
            ++s.des;
        }
    }
    fault::bump(fault::Fault::StirlingAsc, s.asc);
    fault::bump(fault::Fault::StirlingPlat, s.plat);
    fault::bump(fault::Fault::StirlingDes, s.des);
    return s;
}

std::uint64_t stirling_count(unsigned n) {
    if (n > 17) {
        throw Error("Stirling permutation order " + std::to_string(n) + " exceeds the supported maximum 17");
    }
    std::uint64_t c = 1;
    for (unsigned k = 1; k <= n; ++k) {
        c *= 2 * k - 1;
    }
    return c;
}

namespace {

StirlingPermutation build(const std::vector<unsigned>& digits) {
    StirlingPermutation t;
    t.word.reserve(2 * digits.size());
    for (std::size_t k = 0; k < digits.size(); ++k) {
        const int v = static_cast<int>(k + 1);
        t.word.insert(t.word.begin() + static_cast<std::ptrdiff_t>(digits[k]), {v, v});
    }
    return t;
}

} // namespace

void for_each_stirling(unsigned n, RankRange range,
                       const std::function<void(std::uint64_t, const StirlingPermutation&)>& fn) {
    range.end = std::min(range.end, stirling_count(n));
    if (range.begin >= range.end) {
        return;
    }
    // digit k has radix 2k+1; the last digit varies fastest
    std::vector<unsigned> digits(n, 0);
    std::uint64_t rest = range.begin;
    for (unsigned k = n; k-- > 0;) {
        digits[k] = static_cast<unsigned>(rest % (2 * k + 1));
        rest /= 2 * k + 1;
    }
    for (std::uint64_t r = range.begin; r < range.end; ++r) {
        fn(r, build(digits));
        for (unsigned k = n; k-- > 0;) {
            if (++digits[k] < 2 * k + 1) {
                break;
            }
            digits[k] = 0;
        }
    }
}

std::vector<StirlingPermutation> enumerate_stirling(unsigned n) {
    std::vector<StirlingPermutation> out;
    out.reserve(stirling_count(n));
    for_each_stirling(n, {0, stirling_count(n)},
                      [&](std::uint64_t, const StirlingPermutation& t) { out.push_back(t); });
    return out;
}

MVPoly q_poly(unsigned n, unsigned jobs) {
    const std::vector<std::string> vars{"x", "y", "z"};
    const auto parts = map_shards(stirling_count(n), jobs, [&](RankRange range) {
        Tally t(vars);
        for_each_stirling(n, range, [&](std::uint64_t, const StirlingPermutation& w) {
            const auto s = stirling_stats(w);
            t.add({s.asc, s.plat, s.des});
        });
        return t;
    });
    Tally total(vars);
    for (const auto& t : parts) {
        total.merge(t);
    }
    return total.to_poly();
}

std::string stirling_csv_header() { return "n,rank,word,asc,plat,des"; }

std::string stirling_csv_row(unsigned n, std::uint64_t rank, const StirlingPermutation& t) {
    const auto s = stirling_stats(t);
    return std::to_string(n) + "," + std::to_string(rank) + "," + t.to_string() + "," + std::to_string(s.asc) + "," +
           std::to_string(s.plat) + "," + std::to_string(s.des);
}

} // namespace chordlab
