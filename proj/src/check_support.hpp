#pragma once

// Shared machinery for the identity checks. Not installed.

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "chordlab/checks.hpp"
#include "chordlab/matchings.hpp"
#include "chordlab/permutations.hpp"
#include "chordlab/poly.hpp"
#include "chordlab/poly_text.hpp"
#include "chordlab/stirling.hpp"

namespace chordlab::checks {

/// An enumerated family with an exponent vector per object.
struct Side {
    std::string key; ///< memo key, e.g. "perm-quad:5"
    std::vector<std::string> vars;
    std::uint64_t total = 0;
    /// Calls emit(rank, exps) for each included object in `range`; stops early
    /// when emit returns false.
    std::function<void(RankRange, const std::function<bool(std::uint64_t, const std::vector<unsigned>&)>&)> scan;
    std::function<std::string(std::uint64_t)> describe;
};

template <typename Obj>
using StatFn = std::function<bool(const Obj&, std::vector<unsigned>&)>;

Side perm_side(std::string key, unsigned n, std::vector<std::string> vars, StatFn<Permutation> stats);
Side signed_side(std::string key, unsigned n, std::vector<std::string> vars, StatFn<SignedPermutation> stats);
Side matching_side(std::string key, unsigned n, std::vector<std::string> vars, StatFn<Matching> stats);
Side word_side(std::string key, unsigned n, std::vector<std::string> vars,
               std::function<bool(const Matching&, std::vector<unsigned>&)> stats);
Side stirling_side(std::string key, unsigned n, std::vector<std::string> vars, StatFn<StirlingPermutation> stats);

/// Standard raw families reused by many checks.
Side m_side(unsigned n);       ///< x^elblock y^olblock s^fixb t^trace
Side perm_quad_side(unsigned n); ///< x^exc y^drop p^fix q^cyc

struct Part {
    std::string name;
    MVPoly lhs;
    MVPoly rhs;
    /// When set, lhs came from this side after applying `subst`.
    std::optional<Side> side;
    Bindings subst;
    /// Predicate parts fail through this message instead of lhs != rhs.
    std::optional<std::string> failure;
    std::string object;

    bool ok() const { return !failure && lhs == rhs; }
};

class Context {
  public:
    Context(unsigned jobs, unsigned egf_order) : jobs_(jobs), egf_order_(egf_order) {}

    unsigned jobs() const noexcept { return jobs_; }
    unsigned egf_order() const noexcept { return egf_order_; }

    /// Raw generating polynomial of a side, memoized per key and active fault.
    MVPoly raw(const Side& side);
    /// Memoizes an arbitrary computation under `key` and the active fault.
    MVPoly cached(const std::string& key, const std::function<MVPoly()>& compute);

  private:
    unsigned jobs_;
    unsigned egf_order_;
    std::mutex mutex_;
    std::map<std::string, MVPoly> memo_;
};

/// Part whose lhs is the side's polynomial after `subst`.
Part enumerated(Context& ctx, std::string name, Side side, Bindings subst, MVPoly rhs);
Part equal(std::string name, MVPoly lhs, MVPoly rhs);
/// Passing part, or a failing one carrying `message` and `object`.
Part predicate(std::string name, bool holds, std::string message = {}, std::string object = {});

/// First object of the side whose substituted monomial shares a term with diff.
std::string locate(const Side& side, const Bindings& subst, const MVPoly& diff);

struct CheckDef {
    CheckInfo info;
    /// Extra text attached to every failure witness of this check.
    std::string failure_note;
    std::function<std::vector<Part>(unsigned n, Context& ctx)> at_n;
};

inline CheckDef make_check(std::string id, std::string description, unsigned min_n, unsigned default_max_n,
                           std::function<std::vector<Part>(unsigned, Context&)> at_n, std::string failure_note = {}) {
    CheckDef d;
    d.info = {std::move(id), std::move(description), min_n, default_max_n, false};
    d.failure_note = std::move(failure_note);
    d.at_n = std::move(at_n);
    return d;
}

/// Check indexed by series coefficient k = 0..egf_order.
inline CheckDef make_egf_check(std::string id, std::string description,
                               std::function<std::vector<Part>(unsigned, Context&)> at_k) {
    CheckDef d = make_check(std::move(id), std::move(description), 0, 0, std::move(at_k));
    d.info.uses_egf_order = true;
    return d;
}

void register_permutation_checks(std::vector<CheckDef>& out);
void register_matching_checks(std::vector<CheckDef>& out);
void register_word_checks(std::vector<CheckDef>& out);
void register_stirling_checks(std::vector<CheckDef>& out);

// Small helpers.
inline MVPoly var(const std::string& name) { return MVPoly::variable(name); }
inline MVPoly num(long v) { return MVPoly(BigRat(v)); }
inline MVPoly rat(const BigRat& v) { return MVPoly(v); }
inline MVPoly P(std::string_view text) { return parse_poly(text); }
/// Replaces x^a by x^(d-a) for variable x, asserting a <= d.
MVPoly reflect(const MVPoly& p, const std::string& x, unsigned d);
/// Swaps the roles of two variables.
MVPoly swapped(const MVPoly& p, const std::string& a, const std::string& b);

// Default bounds per family.
inline constexpr unsigned kPermMax = 8;
inline constexpr unsigned kSignedMax = 5;
inline constexpr unsigned kMatchingMax = 7;
inline constexpr unsigned kStirlingMax = 7;
inline constexpr unsigned kTreeMax = 7;

} // namespace chordlab::checks
