#include "chordlab/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "check_support.hpp"
#include "chordlab/errors.hpp"

namespace chordlab {

namespace {

using checks::CheckDef;

const std::vector<CheckDef>& definitions() {
    static const std::vector<CheckDef> defs = [] {
        std::vector<CheckDef> d;
        checks::register_permutation_checks(d);
        checks::register_matching_checks(d);
        checks::register_word_checks(d);
        checks::register_stirling_checks(d);
        return d;
    }();
    return defs;
}

std::vector<const CheckDef*> select(const std::vector<std::string>& ids) {
    const auto& defs = definitions();
    std::vector<const CheckDef*> out;
    const bool all = ids.empty() || (ids.size() == 1 && ids[0] == "all");
    if (all) {
        for (const auto& d : defs) {
            out.push_back(&d);
        }
        return out;
    }
    for (const auto& id : ids) {
        const auto it = std::find_if(defs.begin(), defs.end(), [&](const CheckDef& d) { return d.info.id == id; });
        if (it == defs.end()) {
            throw UnknownCheckId(id);
        }
        out.push_back(&*it);
    }
    return out;
}

Witness witness_for(unsigned n, const checks::Part& part, const std::string& note) {
    Witness w;
    w.n = n;
    w.part = part.name;
    w.note = note;
    if (part.failure) {
        w.message = *part.failure;
        w.object = part.object;
        return w;
    }
    const MVPoly diff = part.lhs - part.rhs;
    w.lhs = part.lhs.to_string();
    w.rhs = part.rhs.to_string();
    w.diff = diff.to_string();
    w.message = "the two sides differ";
    w.object = part.object;
    if (w.object.empty() && part.side) {
        w.object = checks::locate(*part.side, part.subst, diff);
    }
    return w;
}

CheckResult run_one(const CheckDef& def, const RunOptions& options, checks::Context& ctx) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    r.id = def.info.id;
    const unsigned lo = def.info.min_n;
    const unsigned hi = def.info.uses_egf_order ? options.egf_order : options.max_n.value_or(def.info.default_max_n);
    r.max_n = hi;
    if (hi < lo) {
        r.status = CheckStatus::Skip;
    }
    for (unsigned n = lo; n <= hi && r.status == CheckStatus::Pass; ++n) {
        std::optional<Witness> w;
        try {
            for (const auto& part : def.at_n(n, ctx)) {
                if (!part.ok()) {
                    w = witness_for(n, part, def.failure_note);
                    break;
                }
            }
        } catch (const std::exception& e) {
            w = Witness{n, "evaluation", {}, {}, {}, {}, e.what(), def.failure_note};
        }
        r.per_n.push_back({n, w ? CheckStatus::Fail : CheckStatus::Pass});
        if (w) {
            r.status = CheckStatus::Fail;
            r.witness = std::move(w);
        }
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace

std::vector<CheckInfo> check_registry() {
    std::vector<CheckInfo> out;
    for (const auto& d : definitions()) {
        out.push_back(d.info);
    }
    return out;
}

std::vector<CheckResult> run_checks(const RunOptions& options) {
    const auto selected = select(options.ids);
    checks::Context ctx(std::max(1U, options.jobs), options.egf_order);
    std::vector<CheckResult> results;
    results.reserve(selected.size());
    for (const CheckDef* def : selected) {
        results.push_back(run_one(*def, options, ctx));
    }
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::none_of(results.begin(), results.end(),
                        [](const CheckResult& r) { return r.status == CheckStatus::Fail; });
}

std::string_view status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
    }
    return "unknown";
}

std::string report_json(const std::vector<CheckResult>& results, bool timing) {
    using nlohmann::ordered_json;
    ordered_json list = ordered_json::array();
    for (const auto& r : results) {
        ordered_json j;
        j["id"] = r.id;
        j["status"] = status_name(r.status);
        j["max_n"] = r.max_n;
        ordered_json per = ordered_json::array();
        for (const auto& o : r.per_n) {
            per.push_back({{"n", o.n}, {"status", status_name(o.status)}});
        }
        j["per_n"] = std::move(per);
        if (r.witness) {
            const Witness& w = *r.witness;
            j["witness"] = {{"n", w.n},       {"part", w.part},       {"lhs", w.lhs},   {"rhs", w.rhs},
                            {"diff", w.diff}, {"object", w.object},   {"message", w.message}, {"note", w.note}};
        } else {
            j["witness"] = nullptr;
        }
        if (timing) {
            j["ms"] = std::round(r.ms * 1000.0) / 1000.0;
        } else {
            j["ms"] = nullptr;
        }
        list.push_back(std::move(j));
    }
    ordered_json root;
    root["results"] = std::move(list);
    return root.dump(2) + "\n";
}

std::string report_text(const std::vector<CheckResult>& results, bool timing) {
    std::ostringstream os;
    os << std::left << std::setw(20) << "check" << std::setw(8) << "status" << std::setw(7) << "max_n"
       << "n checked";
    if (timing) {
        os << std::right << std::setw(12) << "ms";
    }
    os << '\n';
    std::size_t passed = 0;
    std::size_t failed = 0;
    for (const auto& r : results) {
        std::string span = "-";
        if (!r.per_n.empty()) {
            span = std::to_string(r.per_n.front().n) + ".." + std::to_string(r.per_n.back().n);
        }
        os << std::left << std::setw(20) << r.id << std::setw(8) << status_name(r.status) << std::setw(7) << r.max_n
           << (timing ? std::setw(9) : std::setw(0)) << span;
        if (timing) {
            os << std::right << std::setw(12) << std::fixed << std::setprecision(1) << r.ms;
        }
        os << '\n';
        passed += r.status == CheckStatus::Pass;
        failed += r.status == CheckStatus::Fail;
        if (r.witness) {
            const Witness& w = *r.witness;
            os << "    n=" << w.n << " [" << w.part << "] " << w.message << '\n';
            if (!w.diff.empty()) {
                os << "    lhs - rhs = " << w.diff << '\n';
            }
            if (!w.object.empty()) {
                os << "    object: " << w.object << '\n';
            }
            if (!w.note.empty()) {
                os << "    note: " << w.note << '\n';
            }
        }
    }
    os << passed << " passed, " << failed << " failed, " << results.size() - passed - failed << " skipped\n";
    return os.str();
}

} // namespace chordlab
