#include "check_support.hpp"

#include <set>

#include "chordlab/errors.hpp"
#include "chordlab/fault_injection.hpp"
#include "chordlab/matching_words.hpp"
#include "chordlab/tally.hpp"

namespace chordlab::checks {

namespace {

struct StopScan {};

template <typename Obj, typename ForEach>
Side make_side(std::string key, std::vector<std::string> vars, std::uint64_t total, ForEach for_each,
               std::function<bool(const Obj&, std::vector<unsigned>&)> stats,
               std::function<std::string(std::uint64_t)> describe) {
    Side s;
    s.key = std::move(key);
    s.total = total;
    const std::size_t width = vars.size();
    s.vars = std::move(vars);
    s.scan = [for_each, stats, width](RankRange range,
                                      const std::function<bool(std::uint64_t, const std::vector<unsigned>&)>& emit) {
        std::vector<unsigned> exps(width, 0);
        try {
            for_each(range, [&](std::uint64_t rank, const Obj& obj) {
                std::fill(exps.begin(), exps.end(), 0U);
                if (stats(obj, exps) && !emit(rank, exps)) {
                    throw StopScan{};
                }
            });
        } catch (const StopScan&) {
        }
    };
    s.describe = std::move(describe);
    return s;
}

Monomial monomial_of(const std::vector<std::string>& vars, const std::vector<unsigned>& exps) {
    std::vector<Monomial::Factor> f;
    f.reserve(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        f.emplace_back(vars[i], exps[i]);
    }
    return Monomial(std::move(f));
}

} // namespace

Side perm_side(std::string key, unsigned n, std::vector<std::string> vars, StatFn<Permutation> stats) {
    return make_side<Permutation>(
        std::move(key), std::move(vars), permutation_count(n),
        [n](RankRange r, const std::function<void(std::uint64_t, const Permutation&)>& fn) {
            for_each_permutation(n, r, fn);
        },
        std::move(stats), [n](std::uint64_t r) { return unrank_permutation(n, r).to_string(); });
}

Side signed_side(std::string key, unsigned n, std::vector<std::string> vars, StatFn<SignedPermutation> stats) {
    return make_side<SignedPermutation>(
        std::move(key), std::move(vars), signed_count(n),
        [n](RankRange r, const std::function<void(std::uint64_t, const SignedPermutation&)>& fn) {
            for_each_signed(n, r, fn);
        },
        std::move(stats), [n](std::uint64_t r) { return unrank_signed(n, r).to_string(); });
}

Side matching_side(std::string key, unsigned n, std::vector<std::string> vars, StatFn<Matching> stats) {
    return make_side<Matching>(
        std::move(key), std::move(vars), matching_count(n),
        [n](RankRange r, const std::function<void(std::uint64_t, const Matching&)>& fn) {
            for_each_matching(n, r, fn);
        },
        std::move(stats), [n](std::uint64_t r) { return unrank_matching(n, r).to_string(); });
}

Side word_side(std::string key, unsigned n, std::vector<std::string> vars,
               std::function<bool(const Matching&, std::vector<unsigned>&)> stats) {
    return make_side<Matching>(
        std::move(key), std::move(vars), matching_count(n),
        [n](RankRange r, const std::function<void(std::uint64_t, const Matching&)>& fn) {
            for_each_matching(n, r, fn);
        },
        std::move(stats), [n](std::uint64_t r) { return from_matching(unrank_matching(n, r)).to_string(); });
}

Side stirling_side(std::string key, unsigned n, std::vector<std::string> vars, StatFn<StirlingPermutation> stats) {
    return make_side<StirlingPermutation>(
        std::move(key), std::move(vars), stirling_count(n),
        [n](RankRange r, const std::function<void(std::uint64_t, const StirlingPermutation&)>& fn) {
            for_each_stirling(n, r, fn);
        },
        std::move(stats), [n](std::uint64_t r) {
            std::string out;
            for_each_stirling(n, {r, r + 1}, [&](std::uint64_t, const StirlingPermutation& t) { out = t.to_string(); });
            return out;
        });
}

Side m_side(unsigned n) {
    return matching_side("M:" + std::to_string(n), n, {"x", "y", "s", "t"},
                         [](const Matching& m, std::vector<unsigned>& e) {
                             const auto b = block_stats(m);
                             e = {b.elblock, b.olblock, b.fixb, trace_count(m)};
                             return true;
                         });
}

Side perm_quad_side(unsigned n) {
    return perm_side("perm-quad:" + std::to_string(n), n, {"x", "y", "p", "q"},
                     [](const Permutation& p, std::vector<unsigned>& e) {
                         const auto s = perm_stats(p);
                         e = {s.exc, s.drop, s.fix, s.cyc};
                         return true;
                     });
}

MVPoly Context::raw(const Side& side) {
    return cached("side/" + side.key, [&] {
        const auto parts = map_shards(side.total, jobs_, [&](RankRange range) {
            Tally t(side.vars);
            side.scan(range, [&](std::uint64_t, const std::vector<unsigned>& e) {
                t.add(e);
                return true;
            });
            return t;
        });
        Tally total(side.vars);
        for (const auto& t : parts) {
            total.merge(t);
        }
        return total.to_poly();
    });
}

MVPoly Context::cached(const std::string& key, const std::function<MVPoly()>& compute) {
    const std::string full = key + "#" + std::string(fault::name(fault::active()));
    {
        std::lock_guard lock(mutex_);
        const auto it = memo_.find(full);
        if (it != memo_.end()) {
            return it->second;
        }
    }
    MVPoly value = compute();
    std::lock_guard lock(mutex_);
    return memo_.emplace(full, std::move(value)).first->second;
}

Part enumerated(Context& ctx, std::string name, Side side, Bindings subst, MVPoly rhs) {
    Part p;
    p.name = std::move(name);
    p.lhs = subst.empty() ? ctx.raw(side) : poly_subst(ctx.raw(side), subst);
    p.rhs = std::move(rhs);
    p.side = std::move(side);
    p.subst = std::move(subst);
    return p;
}

Part equal(std::string name, MVPoly lhs, MVPoly rhs) {
    Part p;
    p.name = std::move(name);
    p.lhs = std::move(lhs);
    p.rhs = std::move(rhs);
    return p;
}

Part predicate(std::string name, bool holds, std::string message, std::string object) {
    Part p;
    p.name = std::move(name);
    if (!holds) {
        p.failure = std::move(message);
        p.object = std::move(object);
    }
    return p;
}

std::string locate(const Side& side, const Bindings& subst, const MVPoly& diff) {
    std::set<Monomial, GradedLexDescending> support;
    for (const auto& [m, c] : diff.terms()) {
        support.insert(m);
    }
    std::string found;
    side.scan({0, side.total}, [&](std::uint64_t rank, const std::vector<unsigned>& e) {
        MVPoly contribution;
        contribution.add_term(monomial_of(side.vars, e), BigRat(1));
        if (!subst.empty()) {
            contribution = poly_subst(contribution, subst);
        }
        for (const auto& [m, c] : contribution.terms()) {
            if (support.count(m) != 0) {
                found = side.describe(rank);
                return false;
            }
        }
        return true;
    });
    return found;
}

MVPoly reflect(const MVPoly& p, const std::string& x, unsigned d) {
    return map_monomials(p, [&](const Monomial& m) {
        const auto a = m.exponent(x);
        if (a > d) {
            throw Error("reflection of " + x + "^" + std::to_string(a) + " in degree " + std::to_string(d));
        }
        return m.with_exponent(x, d - a);
    });
}

MVPoly swapped(const MVPoly& p, const std::string& a, const std::string& b) { return swap_variables(p, a, b); }

} // namespace chordlab::checks
