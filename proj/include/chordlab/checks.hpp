#pragma once

#include <optional>
#include <string>
#include <vector>

namespace chordlab {

enum class CheckStatus { Pass, Fail, Skip };

struct NOutcome {
    unsigned n = 0;
    CheckStatus status = CheckStatus::Pass;
};

/// Evidence for a failing check: the smallest failing n, the comparison that
/// broke, both sides, their difference, and the first enumerated object that
/// contributes to a differing monomial (empty when no object applies).
struct Witness {
    unsigned n = 0;
    std::string part;
    std::string lhs;
    std::string rhs;
    std::string diff;
    std::string object;
    std::string message;
    std::string note;
};

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    unsigned max_n = 0;
    std::vector<NOutcome> per_n;
    std::optional<Witness> witness;
    double ms = 0.0;
};

struct CheckInfo {
    std::string id;
    std::string description;
    unsigned min_n = 1;
    unsigned default_max_n = 0;
    /// EGF checks run over series coefficients and use the EGF order instead.
    bool uses_egf_order = false;
};

struct RunOptions {
    /// Empty or {"all"} selects every registered check, in registry order.
    std::vector<std::string> ids;
    std::optional<unsigned> max_n;
    unsigned egf_order = 8;
    unsigned jobs = 1;
};

std::vector<CheckInfo> check_registry();

/// Throws UnknownCheckId before running anything if a selected id is unknown.
/// A check stops at its first failing n.
std::vector<CheckResult> run_checks(const RunOptions& options);

bool all_passed(const std::vector<CheckResult>& results);
std::string_view status_name(CheckStatus s);

/// `ms` is emitted only when `timing` is set so that reports stay
/// byte-identical between runs.
std::string report_json(const std::vector<CheckResult>& results, bool timing = false);
std::string report_text(const std::vector<CheckResult>& results, bool timing = false);

} // namespace chordlab
