#include "chordlab/permutations.hpp"

#include <algorithm>
#include <numeric>

#include "chordlab/errors.hpp"
#include "chordlab/fault_injection.hpp"
#include "chordlab/tally.hpp"

namespace chordlab {

using fault::Fault;

namespace {

std::string join_values(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += std::to_string(v[i]);
    }
    return out;
}

unsigned count_cycles(const std::vector<int>& one_line) {
    std::vector<bool> seen(one_line.size(), false);
    unsigned cycles = 0;
    for (std::size_t i = 0; i < one_line.size(); ++i) {
        if (seen[i]) {
            continue;
        }
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(one_line[j] - 1)) {
            seen[j] = true;
        }
    }
    return cycles;
}

void check_order(unsigned n, unsigned limit, const char* what) {
    if (n > limit) {
        throw Error(std::string(what) + " order " + std::to_string(n) + " exceeds the supported maximum " +
                    std::to_string(limit));
    }
}

} // namespace

bool Permutation::is_valid() const {
    std::vector<bool> seen(values.size() + 1, false);
    for (int v : values) {
        if (v < 1 || static_cast<std::size_t>(v) > values.size() || seen[static_cast<std::size_t>(v)]) {
            return false;
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

std::string Permutation::to_string() const { return join_values(values); }

bool SignedPermutation::is_valid() const { return absolute().is_valid(); }

Permutation SignedPermutation::absolute() const {
    Permutation p;
    p.values.reserve(values.size());
    for (int v : values) {
        p.values.push_back(v < 0 ? -v : v);
    }
    return p;
}

std::string SignedPermutation::to_string() const { return join_values(values); }

bool InversionSequence::is_valid() const {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 0 || entries[i] > static_cast<int>(i)) {
            return false;
        }
    }
    return true;
}

PermStats perm_stats(const Permutation& p) {
    const std::size_t n = p.size();
    PermStats s;
    std::vector<int> inverse(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        inverse[static_cast<std::size_t>(p(i))] = static_cast<int>(i);
    }
    for (std::size_t i = 1; i <= n; ++i) {
        const int v = p(i);
        const int idx = static_cast<int>(i);
        if (v > idx) {
            ++s.exc;
        } else if (v < idx) {
            ++s.drop;
        } else {
            ++s.fix;
        }
        if (i < n) {
            if (v < p(i + 1)) {
                ++s.asc;
            } else {
                ++s.des;
            }
        }
        for (std::size_t j = i + 1; j <= n; ++j) {
            if (v > p(j)) {
                ++s.inv;
            }
        }
        if (inverse[i] < idx && idx < v) {
            ++s.cda;
        }
        const int before = i == 1 ? 0 : p(i - 1);
        const int after = i == n ? 0 : p(i + 1);
        if (before > v && v > after) {
            ++s.dd;
        }
    }
    s.cyc = count_cycles(p.values);
    fault::bump(Fault::PermExc, s.exc);
    fault::bump(Fault::PermDrop, s.drop);
    fault::bump(Fault::PermFix, s.fix);
    fault::bump(Fault::PermCyc, s.cyc);
    fault::bump(Fault::PermAsc, s.asc);
    fault::bump(Fault::PermDes, s.des);
    fault::bump(Fault::PermInv, s.inv);
    fault::bump(Fault::PermCda, s.cda);
    fault::bump(Fault::PermDd, s.dd);
    return s;
}

SignedStats signed_stats(const SignedPermutation& s) {
    SignedStats r;
    const std::size_t n = s.size();
    for (std::size_t i = 1; i <= n; ++i) {
        const int v = s(i);
        const int idx = static_cast<int>(i);
        const std::size_t a = static_cast<std::size_t>(v < 0 ? -v : v);
        if (s(a) > v) {
            ++r.exc;
        }
        if (v == idx) {
            ++r.fix;
        }
        if (v == -idx) {
            ++r.single;
        }
    }
    r.cyc = count_cycles(s.absolute().values);
    fault::bump(Fault::SignedExc, r.exc);
    fault::bump(Fault::SignedFix, r.fix);
    fault::bump(Fault::SignedSingle, r.single);
    fault::bump(Fault::SignedCyc, r.cyc);
    r.wexc = r.exc + r.single;
    return r;
}

InversionSequence to_inversion_sequence(const Permutation& p) {
    InversionSequence e;
    e.entries.resize(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (p.values[j] > p.values[i]) {
                ++e.entries[i];
            }
        }
    }
    return e;
}

Permutation from_inversion_sequence(const InversionSequence& e) {
    if (!e.is_valid()) {
        throw Error("invalid inversion sequence");
    }
    const std::size_t n = e.entries.size();
    std::vector<int> remaining(n);
    std::iota(remaining.begin(), remaining.end(), 1);
    Permutation p;
    p.values.resize(n);
    // pi(i) has exactly e_i larger values among the still-unplaced values
    for (std::size_t i = n; i-- > 0;) {
        const std::size_t pick = remaining.size() - 1 - static_cast<std::size_t>(e.entries[i]);
        p.values[i] = remaining[pick];
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return p;
}

std::uint64_t permutation_count(unsigned n) {
    check_order(n, 20, "permutation");
    std::uint64_t c = 1;
    for (unsigned i = 2; i <= n; ++i) {
        c *= i;
    }
    return c;
}

Permutation unrank_permutation(unsigned n, std::uint64_t rank) {
    const std::uint64_t total = permutation_count(n);
    if (rank >= total && !(n == 0 && rank == 0)) {
        throw Error("permutation rank out of range");
    }
    std::vector<int> remaining(n);
    std::iota(remaining.begin(), remaining.end(), 1);
    Permutation p;
    p.values.reserve(n);
    std::uint64_t block = total;
    for (unsigned m = n; m >= 1; --m) {
        block /= m;
        const auto idx = static_cast<std::size_t>(rank / block);
        rank %= block;
        p.values.push_back(remaining[idx]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return p;
}

void for_each_permutation(unsigned n, RankRange range,
                          const std::function<void(std::uint64_t, const Permutation&)>& fn) {
    const std::uint64_t total = permutation_count(n);
    range.end = std::min(range.end, total);
    if (range.begin >= range.end) {
        return;
    }
    Permutation p = unrank_permutation(n, range.begin);
    for (std::uint64_t r = range.begin; r < range.end; ++r) {
        fn(r, p);
        std::next_permutation(p.values.begin(), p.values.end());
    }
}

std::vector<Permutation> enumerate_permutations(unsigned n) {
    std::vector<Permutation> out;
    out.reserve(permutation_count(n));
    for_each_permutation(n, {0, permutation_count(n)}, [&](std::uint64_t, const Permutation& p) { out.push_back(p); });
    return out;
}

std::vector<Permutation> enumerate_derangements(unsigned n) {
    std::vector<Permutation> out;
    for_each_permutation(n, {0, permutation_count(n)}, [&](std::uint64_t, const Permutation& p) {
        for (std::size_t i = 1; i <= p.size(); ++i) {
            if (p(i) == static_cast<int>(i)) {
                return;
            }
        }
        out.push_back(p);
    });
    return out;
}

std::uint64_t signed_count(unsigned n) {
    check_order(n, 16, "signed permutation");
    return permutation_count(n) << n;
}

SignedPermutation unrank_signed(unsigned n, std::uint64_t rank) {
    const std::uint64_t total = signed_count(n);
    if (rank >= total && !(n == 0 && rank == 0)) {
        throw Error("signed permutation rank out of range");
    }
    std::vector<int> remaining(n);
    std::iota(remaining.begin(), remaining.end(), 1);
    SignedPermutation s;
    s.values.reserve(n);
    std::uint64_t block = total;
    for (unsigned m = n; m >= 1; --m) {
        block /= 2ULL * m;
        auto idx = static_cast<std::size_t>(rank / block);
        rank %= block;
        // candidates ascending: -remaining[m-1], ..., -remaining[0], remaining[0], ..., remaining[m-1]
        if (idx < m) {
            const std::size_t pick = m - 1 - idx;
            s.values.push_back(-remaining[pick]);
            remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
        } else {
            const std::size_t pick = idx - m;
            s.values.push_back(remaining[pick]);
            remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
        }
    }
    return s;
}

void for_each_signed(unsigned n, RankRange range,
                     const std::function<void(std::uint64_t, const SignedPermutation&)>& fn) {
    range.end = std::min(range.end, signed_count(n));
    for (std::uint64_t r = range.begin; r < range.end; ++r) {
        fn(r, unrank_signed(n, r));
    }
}

std::vector<SignedPermutation> enumerate_signed(unsigned n) {
    std::vector<SignedPermutation> out;
    for_each_signed(n, {0, signed_count(n)}, [&](std::uint64_t, const SignedPermutation& s) { out.push_back(s); });
    return out;
}

std::vector<InversionSequence> enumerate_inversion_sequences(unsigned n) {
    std::vector<InversionSequence> out;
    InversionSequence e;
    e.entries.assign(n, 0);
    while (true) {
        out.push_back(e);
        // odometer, last position fastest
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (e.entries[i] < static_cast<int>(i)) {
                ++e.entries[i];
                break;
            }
            e.entries[i] = 0;
            if (i == 0) {
                return out;
            }
        }
        if (n == 0) {
            return out;
        }
    }
}

namespace {

template <typename Record>
Tally tally_permutations(unsigned n, unsigned jobs, std::vector<std::string> vars, Record record) {
    const auto parts = map_shards(permutation_count(n), jobs, [&](RankRange range) {
        Tally t(vars);
        for_each_permutation(n, range, [&](std::uint64_t, const Permutation& p) { record(t, p); });
        return t;
    });
    Tally total(vars);
    for (const auto& t : parts) {
        total.merge(t);
    }
    return total;
}

} // namespace

MVPoly eulerian_xy(unsigned n, unsigned jobs) {
    const auto parts = map_shards(permutation_count(n), jobs, [&](RankRange range) {
        std::pair<Tally, Tally> t{Tally({"x", "y"}), Tally({"x", "y"})};
        for_each_permutation(n, range, [&](std::uint64_t, const Permutation& p) {
            const auto s = perm_stats(p);
            t.first.add({s.asc, s.des});
            t.second.add({s.exc, n - 1 - s.exc});
        });
        return t;
    });
    Tally by_descent({"x", "y"});
    Tally by_excedance({"x", "y"});
    for (const auto& [a, b] : parts) {
        by_descent.merge(a);
        by_excedance.merge(b);
    }
    MVPoly result = by_descent.to_poly();
    MVPoly check = by_excedance.to_poly();
    if (result != check) {
        throw IdentityViolation("A_" + std::to_string(n) + ": sum x^asc y^des = " + result.to_string() +
                                " but sum x^exc y^(n-1-exc) = " + check.to_string());
    }
    return result;
}

MVPoly eulerian_xy_by_excedance(unsigned n, unsigned jobs) {
    return tally_permutations(n, jobs, {"x", "y"}, [n](Tally& t, const Permutation& p) {
               const auto s = perm_stats(p);
               t.add({s.exc, n - 1 - s.exc});
           }).to_poly();
}

MVPoly exc_drop_poly(unsigned n, unsigned jobs) {
    return tally_permutations(n, jobs, {"x", "y"}, [](Tally& t, const Permutation& p) {
               const auto s = perm_stats(p);
               t.add({s.exc, s.drop});
           }).to_poly();
}

MVPoly eulerian_x(unsigned n) {
    return tally_permutations(n, 1, {"x"}, [](Tally& t, const Permutation& p) { t.add({perm_stats(p).des}); })
        .to_poly();
}

MVPoly eulerian_xpq(unsigned n, unsigned jobs) {
    return tally_permutations(n, jobs, {"x", "p", "q"}, [](Tally& t, const Permutation& p) {
               const auto s = perm_stats(p);
               t.add({s.exc, s.fix, s.cyc});
           }).to_poly();
}

MVPoly permutation_quadruple(unsigned n, unsigned jobs) {
    return tally_permutations(n, jobs, {"x", "y", "p", "q"}, [](Tally& t, const Permutation& p) {
               const auto s = perm_stats(p);
               t.add({s.exc, s.drop, s.fix, s.cyc});
           }).to_poly();
}

MVPoly derangement_poly(unsigned n) {
    Tally t({"x", "q"});
    for (const auto& p : enumerate_derangements(n)) {
        const auto s = perm_stats(p);
        t.add({s.exc, s.cyc});
    }
    return t.to_poly();
}

std::map<unsigned, MVPoly> dnk_table(unsigned n) {
    std::map<unsigned, Tally> by_k;
    for (const auto& p : enumerate_derangements(n)) {
        const auto s = perm_stats(p);
        if (s.cda != 0) {
            continue;
        }
        by_k.try_emplace(s.exc, Tally({"q"})).first->second.add({s.cyc});
    }
    std::map<unsigned, MVPoly> out;
    for (const auto& [k, t] : by_k) {
        out.emplace(k, t.to_poly());
    }
    return out;
}

std::map<unsigned, std::uint64_t> no_double_descent_counts(unsigned n) {
    std::map<unsigned, std::uint64_t> out;
    for_each_permutation(n, {0, permutation_count(n)}, [&](std::uint64_t, const Permutation& p) {
        const auto s = perm_stats(p);
        if (s.dd == 0) {
            ++out[s.des];
        }
    });
    return out;
}

MVPoly b_poly(unsigned n, unsigned jobs) {
    const std::vector<std::string> vars{"x", "p", "q"};
    const auto parts = map_shards(signed_count(n), jobs, [&](RankRange range) {
        Tally t(vars);
        for_each_signed(n, range, [&](std::uint64_t, const SignedPermutation& s) {
            const auto st = signed_stats(s);
            t.add({st.wexc, st.fix, st.cyc});
        });
        return t;
    });
    Tally total(vars);
    for (const auto& t : parts) {
        total.merge(t);
    }
    return total.to_poly();
}

MVPoly b_derangement_poly(unsigned n) { return poly_subst(b_poly(n), {{"p", MVPoly(0)}, {"q", MVPoly(1)}}); }

MVPoly colored_eulerian(unsigned n, unsigned r) {
    if (r == 0) {
        throw Error("colored_eulerian requires r >= 1");
    }
    const BigRat rr(static_cast<long>(r));
    const MVPoly x = MVPoly::variable("x");
    const MVPoly p_value = (MVPoly(1) + MVPoly(rr - 1) * x) * (BigRat(1) / rr);
    return poly_subst(eulerian_xpq(n), {{"p", p_value}, {"q", MVPoly(1)}}) * rr.pow(n);
}

std::string permutation_csv_header() { return "n,rank,oneline,exc,drop,fix,cyc,asc,des,inv,cda,dd"; }

std::string permutation_csv_row(unsigned n, std::uint64_t rank, const Permutation& p) {
    const auto s = perm_stats(p);
    std::string out = std::to_string(n) + "," + std::to_string(rank) + "," + p.to_string();
    for (unsigned v : {s.exc, s.drop, s.fix, s.cyc, s.asc, s.des, s.inv, s.cda, s.dd}) {
        out += "," + std::to_string(v);
    }
    return out;
}

std::string signed_csv_header() { return permutation_csv_header() + ",wexc,single"; }

std::string signed_csv_row(unsigned n, std::uint64_t rank, const SignedPermutation& s) {
    const auto st = signed_stats(s);
    // word-shape statistics of the signed window read as an integer sequence
    Permutation window_as_perm = s.absolute();
    const auto abs_stats = perm_stats(window_as_perm);
    unsigned drop = 0;
    unsigned asc = 0;
    unsigned des = 0;
    unsigned inv = 0;
    unsigned dd = 0;
    const std::size_t len = s.size();
    for (std::size_t i = 1; i <= len; ++i) {
        const int v = s(i);
        const std::size_t a = static_cast<std::size_t>(v < 0 ? -v : v);
        if (s(a) < v) {
            ++drop;
        }
        if (i < len) {
            (v < s(i + 1) ? asc : des) += 1;
        }
        for (std::size_t j = i + 1; j <= len; ++j) {
            if (v > s(j)) {
                ++inv;
            }
        }
        const int before = i == 1 ? 0 : s(i - 1);
        const int after = i == len ? 0 : s(i + 1);
        if (before > v && v > after) {
            ++dd;
        }
    }
    std::string out = std::to_string(n) + "," + std::to_string(rank) + "," + s.to_string();
    for (unsigned v : {st.exc, drop, st.fix, st.cyc, asc, des, inv, abs_stats.cda, dd, st.wexc, st.single}) {
        out += "," + std::to_string(v);
    }
    return out;
}

} // namespace chordlab
