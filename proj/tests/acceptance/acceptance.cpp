// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "chordlab/checks.hpp"
#include "chordlab/fault_injection.hpp"
#include "chordlab/grammar.hpp"
#include "chordlab/matching_words.hpp"
#include "chordlab/matchings.hpp"
#include "chordlab/permutations.hpp"
#include "chordlab/poly_text.hpp"
#include "chordlab/stirling.hpp"
#include "chordlab/trees.hpp"

using namespace chordlab;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << s << " s";
    return os.str();
}

struct Selection {
    std::string id;
    unsigned max_n;
};

/// Runs each id at its own bound; fills `failed` with "ID(n=...)" entries.
std::vector<CheckResult> run_selection(const std::vector<Selection>& picks, unsigned egf_order,
                                       std::vector<std::string>& failed) {
    std::vector<CheckResult> all;
    for (const auto& [id, max_n] : picks) {
        RunOptions o;
        o.ids = {id};
        o.max_n = max_n;
        o.egf_order = egf_order;
        auto r = run_checks(o);
        for (auto& c : r) {
            if (c.status != CheckStatus::Pass) {
                failed.push_back(c.id + (c.witness ? "(n=" + std::to_string(c.witness->n) + ")" : ""));
            }
            all.push_back(std::move(c));
        }
    }
    return all;
}

Outcome checks_pass(const std::vector<Selection>& picks, unsigned egf_order = 8, double limit_s = 0) {
    const auto start = Clock::now();
    std::vector<std::string> failed;
    run_selection(picks, egf_order, failed);
    const double took = seconds_since(start);
    Outcome o;
    o.pass = failed.empty() && (limit_s == 0 || took <= limit_s);
    std::string ids;
    for (const auto& p : picks) ids += (ids.empty() ? "" : ",") + p.id;
    o.detail = ids + " in " + fmt_seconds(took);
    for (const auto& f : failed) o.detail += "; failed " + f;
    if (limit_s != 0 && took > limit_s) o.detail += "; over the " + fmt_seconds(limit_s) + " budget";
    return o;
}

Outcome golden_values() {
    const auto start = Clock::now();
    std::vector<std::string> bad;
    auto expect = [&](const std::string& label, const MVPoly& got, const char* want) {
        if (got != parse_poly(want)) bad.push_back(label + " = " + got.to_string());
    };
    const std::array<std::string, 3> xyz{"x", "y", "z"};

    expect("M_1", m_poly(1), "s*t");
    expect("M_2", m_poly(2), "(s*t)^2 + 2*t*x*y");
    expect("M_3", m_poly(3), "(s*t)^3 + 6*s*t^2*x*y + 4*t*x*y*(x + y)");
    expect("C_1", c_poly(1), "y2");
    expect("C_2", c_poly(2), "(x1 + x2)*y1*y2 + x3*y2^2");
    expect("NCA_1", nca_poly(1), "1");
    expect("NCA_2", nca_poly(2), "x + y + z");
    expect("NCA_3", nca_poly(3), "x^2 + 4*x*y + y^2 + 4*x*z + 4*y*z + z^2");
    expect("NCA_4", nca_poly(4),
           "x^3 + 11*x^2*y + 11*x*y^2 + y^3 + 11*x^2*z + 36*x*y*z + 11*y^2*z + 11*x*z^2 + 11*y*z^2 + z^3");
    expect("dB_1", b_derangement_poly(1), "x");
    expect("dB_2", b_derangement_poly(2), "4*x + x^2");
    expect("dB_3", b_derangement_poly(3), "8*x + 20*x^2 + x^3");
    expect("xi_1", xi_table(1).to_poly(xyz), "x");
    expect("xi_2", xi_table(2).to_poly(xyz), "x^2 + 2*y");
    const char* iterates[] = {
        "a*w1",
        "a*(w1^2 + 2*w2)",
        "a*(w1^3 + 8*w1*w2 + 6*w3)",
        "a*(w1^4 + 22*w1^2*w2 + 16*w2^2 + 42*w1*w3)",
        "a*(w1^5 + 52*w1^3*w2 + 136*w1*w2^2 + 192*w1^2*w3 + 180*w2*w3)",
        "a*(w1^6 + 114*w1^4*w2 + 720*w1^2*w2^2 + 272*w2^3 + 732*w1^3*w3 + 2304*w1*w2*w3 + 540*w3^2)",
    };
    MVPoly cur = parse_poly("a");
    for (unsigned n = 1; n <= 6; ++n) {
        cur = d_apply(grammars::neighbor_symmetric(), cur);
        expect("D^" + std::to_string(n) + "(a)", cur, iterates[n - 1]);
    }
    expect("gamma_1", gamma_table(1).to_poly(xyz), "z");
    expect("gamma_2", gamma_table(2).to_poly(xyz), "y*z");
    expect("gamma_3", gamma_table(3).to_poly(xyz), "y^2*z + 2*x*z^2");
    expect("Q_1", q_poly(1), "x*y*z");

    const double took = seconds_since(start);
    Outcome o;
    o.pass = bad.empty() && took < 1.0;
    o.detail = "27 values in " + fmt_seconds(took);
    for (const auto& b : bad) o.detail += "; mismatch " + b;
    if (took >= 1.0) o.detail += "; over the 1 s budget";
    return o;
}

Outcome correspondences() {
    const std::vector<Selection> picks{
        {"MP-BIJ", 6},         {"KZ-SYM", 6},         {"KLAZAR-SYM", 6},     {"SIX-EULERIAN", 6},
        {"COUNT-LNE-FACT", 7}, {"COUNT-CATALAN", 7},  {"COUNT-NARAYANA", 7}, {"I-STATS-CORRECTED", 6},
    };
    Outcome o = checks_pass(picks);
    std::vector<std::string> failed;
    const auto literal = run_selection({{"I-STATS", 6}}, 8, failed);
    if (!failed.empty()) {
        o.pass = false;
        const auto& w = *literal.front().witness;
        o.detail += "; I-STATS as printed fails at n=" + std::to_string(w.n) + " (lhs - rhs = " + w.diff +
                    ", word " + w.object +
                    "): ascending unbarred pairs cover alignments as well as crossings, so every alignment "
                    "carries both y and q; I-STATS-CORRECTED verifies the reading with coinv - rank";
    } else {
        o.detail += ",I-STATS";
    }
    return o;
}

Outcome suite_runtime() {
    Outcome o = checks_pass({{"Q-DUMONT", 6},
                             {"Q-SYM", 6},
                             {"Q-GRAMMAR", 6},
                             {"Q-CHEN22", 6},
                             {"C-Q-TRANSFORM", 6},
                             {"Q-LNE", 6},
                             {"Q-LRP", 6},
                             {"NCA-RECU", 6}});
    RunOptions single;
    auto start = Clock::now();
    const auto a = run_checks(single);
    const double t1 = seconds_since(start);
    RunOptions sharded;
    sharded.jobs = 4;
    start = Clock::now();
    const auto b = run_checks(sharded);
    const double t4 = seconds_since(start);
    const bool same = report_json(a) == report_json(b);
    o.pass = o.pass && t1 <= 600 && t4 <= 180 && same;
    o.detail += "; full suite " + fmt_seconds(t1) + " with 1 job, " + fmt_seconds(t4) + " with 4 jobs";
    o.detail += same ? ", identical reports" : ", REPORTS DIFFER";
    return o;
}

Outcome property_suites(const std::string& unit_binary) {
    if (unit_binary.empty()) {
        return {false, "unit test binary not given (--unit-tests PATH)"};
    }
    const std::string filter = "ring axioms*,evaluation is a ring homomorphism,partial derivatives*,"
                               "formal derivative*,block classes,pairwise statistics,neighbor classification,"
                               "generation algorithm,both generators*,inversion sequences,trace indices";
    const std::string args = " --test-case=\"" + filter + "\"";
    const auto start = Clock::now();
    // doctest exits 0 when a filter matches nothing, so count the cases first
    const std::string count_cmd = "\"" + unit_binary + "\"" + args + " --count 2>&1";
    std::string listing;
    if (FILE* pipe = popen(count_cmd.c_str(), "r")) {
        char buf[256];
        while (fgets(buf, sizeof buf, pipe) != nullptr) listing += buf;
        pclose(pipe);
    }
    const std::string marker = "passing the current filters:";
    const auto pos = listing.find(marker);
    const int selected = pos == std::string::npos ? 0 : std::atoi(listing.c_str() + pos + marker.size());
    const int rc = std::system(("\"" + unit_binary + "\"" + args + " --minimal > /dev/null 2>&1").c_str());
    const bool ok = rc == 0 && selected >= 11;
    return {ok, std::to_string(selected) + " property test cases " + (ok ? "passed" : "FAILED or missing") + " in " +
                    fmt_seconds(seconds_since(start))};
}

Outcome fault_injection() {
    RunOptions o;
    o.max_n = 5;
    o.egf_order = 6;
    const auto start = Clock::now();
    const auto base = run_checks(o);
    std::vector<std::string> uncaught;
    std::size_t caught = 0;
    for (auto f : fault::all_faults()) {
        fault::ScopedFault guard(f);
        const auto r = run_checks(o);
        bool hit = false;
        for (std::size_t i = 0; i < r.size(); ++i) {
            hit = hit || (base[i].status == CheckStatus::Pass && r[i].status == CheckStatus::Fail &&
                          r[i].witness.has_value() && !r[i].witness->part.empty());
        }
        if (hit) ++caught;
        else uncaught.emplace_back(fault::name(f));
    }
    Outcome out;
    out.pass = uncaught.empty();
    out.detail = std::to_string(caught) + "/" + std::to_string(fault::all_faults().size()) +
                 " perturbed statistics caught with a witness at max_n 5, EGF order 6, in " +
                 fmt_seconds(seconds_since(start));
    for (const auto& u : uncaught) out.detail += "; not caught: " + u;
    return out;
}

} // namespace

int main(int argc, char** argv) {
    std::string unit_binary;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--unit-tests") unit_binary = argv[i + 1];
    }

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"golden polynomial values", golden_values},
        {"matching and permutation sides agree",
         [] { return checks_pass({{"M-MAIN", 7}, {"M-SYM", 7}}, 8, 120); }},
        {"trace distribution", [] { return checks_pass({{"TRACE-RISING", 7}, {"STIRLING1-ID", 7}}); }},
        {"exponential generating functions",
         [] { return checks_pass({{"A-EGF", 8}, {"M-EGF", 8}, {"CALLAN-EGF", 8}}, 8); }},
        {"convolution, derangement and signed identities",
         [] {
             return checks_pass({{"CONV", 6}, {"COR2", 6}, {"M-GAMMA", 6}, {"DER-COUNT", 6}, {"DNK", 6},
                                 {"B-MAIN", 5}, {"B-DUAL", 5}, {"COLORED", 5}});
         }},
        {"neighbor expansion and tree tables",
         [] { return checks_pass({{"C-EPOS", 5}, {"XI-TREE", 7}, {"GAMMA-TREE", 7}, {"XI-GAMMA", 7}}); }},
        {"matching permutation correspondences", correspondences},
        {"Stirling permutation identities and suite runtime", suite_runtime},
        {"property suites", [&] { return property_suites(unit_binary); }},
        {"fault injection", fault_injection},
    };

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Outcome o = criteria[i].second();
        all = all && o.pass;
        std::cout << "criterion " << std::setw(2) << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  "
                  << criteria[i].first << " (" << o.detail << ")" << std::endl;
    }
    return all ? 0 : 1;
}
