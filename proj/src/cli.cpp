#include "chordlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chordlab/checks.hpp"
#include "chordlab/errors.hpp"
#include "chordlab/grammar.hpp"
#include "chordlab/matching_words.hpp"
#include "chordlab/matchings.hpp"
#include "chordlab/permutations.hpp"
#include "chordlab/poly_text.hpp"
#include "chordlab/stirling.hpp"
#include "chordlab/trees.hpp"

namespace chordlab {

namespace {

struct UsageError : Error {
    using Error::Error;
};

/// Largest n accepted without --force, per family.
const std::map<std::string, unsigned, std::less<>> kGuard{
    {"matchings", 10}, {"mwords", 10}, {"perms", 10}, {"derangements", 10}, {"signed", 8},
    {"stirling", 10},  {"trees012", 10}, {"trees0123", 10},
};

// Family behind each polynomial name, for the same guardrails.
const std::map<std::string, std::string, std::less<>> kPolyFamily{
    {"An", "perms"},  {"Anxy", "perms"}, {"Anpq", "perms"},    {"Mn", "matchings"},  {"Bn", "signed"},
    {"dn", "perms"},  {"dBn", "signed"}, {"Cn", "mwords"},     {"NCA", "mwords"},    {"NCR", "mwords"},
    {"Qn", "stirling"}, {"In", "matchings"}, {"xi", "trees0123"}, {"gamma", "trees0123"},
};

void guard(const std::string& family, unsigned n, bool force) {
    const unsigned limit = kGuard.at(family);
    if (n > limit && !force) {
        throw UsageError("n=" + std::to_string(n) + " exceeds the " + family + " limit " + std::to_string(limit) +
                         "; pass --force to override");
    }
}

unsigned default_jobs() {
    const char* env = std::getenv("CHORDLAB_JOBS");
    if (env == nullptr || *env == '\0') {
        return 1;
    }
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024) {
        throw UsageError(std::string("CHORDLAB_JOBS must be a positive integer, got '") + env + "'");
    }
    return static_cast<unsigned>(v);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    return fields;
}

/// Streams header/rows in the requested format.
class RowSink {
  public:
    RowSink(std::string format, std::ostream& os, std::string header)
        : format_(std::move(format)), os_(os), columns_(split_csv(header)) {
        if (format_ == "csv") {
            os_ << header << '\n';
        } else if (format_ == "json") {
            os_ << "[";
        }
    }

    void row(const std::string& csv, const std::string& text) {
        if (format_ == "csv") {
            os_ << csv << '\n';
        } else if (format_ == "text") {
            os_ << text << '\n';
        } else {
            const auto fields = split_csv(csv);
            nlohmann::ordered_json j;
            for (std::size_t i = 0; i < columns_.size() && i < fields.size(); ++i) {
                const std::string& f = fields[i];
                const bool numeric = !f.empty() && f.find_first_not_of("0123456789") == std::string::npos;
                if (numeric) {
                    j[columns_[i]] = std::stoull(f);
                } else {
                    j[columns_[i]] = f;
                }
            }
            os_ << (first_ ? "\n  " : ",\n  ") << j.dump();
            first_ = false;
        }
    }

    void finish() {
        if (format_ == "json") {
            os_ << (first_ ? "]\n" : "\n]\n");
        }
    }

  private:
    std::string format_;
    std::ostream& os_;
    std::vector<std::string> columns_;
    bool first_ = true;
};

void enumerate_family(const std::string& family, unsigned n, const std::string& format, std::ostream& os) {
    if (family == "perms" || family == "derangements") {
        RowSink sink(format, os, permutation_csv_header());
        for_each_permutation(n, {0, permutation_count(n)}, [&](std::uint64_t r, const Permutation& p) {
            if (family == "perms" || perm_stats(p).fix == 0) {
                sink.row(permutation_csv_row(n, r, p), p.to_string());
            }
        });
        sink.finish();
    } else if (family == "signed") {
        RowSink sink(format, os, signed_csv_header());
        for_each_signed(n, {0, signed_count(n)}, [&](std::uint64_t r, const SignedPermutation& s) {
            sink.row(signed_csv_row(n, r, s), s.to_string());
        });
        sink.finish();
    } else if (family == "matchings") {
        RowSink sink(format, os, matching_csv_header());
        for_each_matching(n, {0, matching_count(n)}, [&](std::uint64_t r, const Matching& m) {
            sink.row(matching_csv_row(n, r, m), m.to_string());
        });
        sink.finish();
    } else if (family == "mwords") {
        RowSink sink(format, os, word_csv_header());
        for_each_matching(n, {0, matching_count(n)}, [&](std::uint64_t r, const Matching& m) {
            const MatchingWord w = from_matching(m);
            sink.row(word_csv_row(n, r, w), w.to_string());
        });
        sink.finish();
    } else if (family == "stirling") {
        RowSink sink(format, os, stirling_csv_header());
        for_each_stirling(n, {0, stirling_count(n)}, [&](std::uint64_t r, const StirlingPermutation& t) {
            sink.row(stirling_csv_row(n, r, t), t.to_string());
        });
        sink.finish();
    } else {
        RowSink sink(format, os, tree_csv_header());
        std::uint64_t rank = 0;
        for_each_tree(n, family == "trees012" ? 2 : 3, [&](const PlaneTree& t) {
            sink.row(tree_csv_row(n, rank, t), t.to_string());
            ++rank;
        });
        sink.finish();
    }
}

MVPoly family_poly(const std::string& name, unsigned n, unsigned jobs) {
    static const std::map<std::string, std::function<MVPoly(unsigned, unsigned)>, std::less<>> table{
        {"An", [](unsigned k, unsigned) { return eulerian_x(k); }},
        {"Anxy", [](unsigned k, unsigned j) { return eulerian_xy(k, j); }},
        {"Anpq", [](unsigned k, unsigned j) { return eulerian_xpq(k, j); }},
        {"Mn", [](unsigned k, unsigned j) { return m_poly(k, j); }},
        {"Bn", [](unsigned k, unsigned j) { return b_poly(k, j); }},
        {"dn", [](unsigned k, unsigned) { return derangement_poly(k); }},
        {"dBn", [](unsigned k, unsigned) { return b_derangement_poly(k); }},
        {"Cn", [](unsigned k, unsigned j) { return c_poly(k, j); }},
        {"NCA", [](unsigned k, unsigned j) { return nca_poly(k, j); }},
        {"NCR", [](unsigned k, unsigned j) { return ncr_poly(k, j); }},
        {"Qn", [](unsigned k, unsigned j) { return q_poly(k, j); }},
        {"In", [](unsigned k, unsigned j) { return i_poly(k, j); }},
        {"xi", [](unsigned k, unsigned) { return xi_table(k).to_poly({"x", "y", "z"}); }},
        {"gamma", [](unsigned k, unsigned) { return gamma_table(k).to_poly({"x", "y", "z"}); }},
    };
    return table.at(name)(n, jobs);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_ids(const std::string& text) {
    std::vector<std::string> ids;
    std::stringstream ss(text);
    std::string id;
    while (std::getline(ss, id, ',')) {
        if (!id.empty()) {
            ids.push_back(id);
        }
    }
    return ids;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact generating polynomials of matchings, permutations and Stirling permutations", "chordlab"};
    app.require_subcommand(1);

    std::string out_path;
    bool force = false;
    unsigned jobs = 0;

    std::string family;
    unsigned n = 0;
    std::string format = "csv";
    auto* enumerate = app.add_subcommand("enumerate", "List a family with its statistics");
    enumerate->add_option("--family", family, "Family to list")
        ->required()
        ->check(CLI::IsMember({"matchings", "mwords", "perms", "signed", "derangements", "stirling", "trees012",
                               "trees0123"}));
    enumerate->add_option("--n", n, "Order")->required();
    enumerate->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));

    std::string poly_name;
    std::string poly_format = "text";
    auto* poly = app.add_subcommand("poly", "Print a generating polynomial");
    poly->add_option("--name", poly_name, "Polynomial family")
        ->required()
        ->check(CLI::IsMember({"An", "Anxy", "Anpq", "Mn", "Bn", "dn", "dBn", "Cn", "NCA", "NCR", "Qn", "In", "xi",
                               "gamma"}));
    poly->add_option("--n", n, "Order")->required();
    poly->add_option("--format", poly_format, "text, or json for the xi and gamma tables")
        ->check(CLI::IsMember({"text", "json"}));

    std::string check_ids = "all";
    std::optional<unsigned> max_n;
    unsigned egf_order = 8;
    std::string report = "json";
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "Run identity checks");
    verify->add_option("--checks", check_ids, "Comma-separated check ids, or all");
    verify->add_option("--max-n", max_n, "Largest n for every selected check");
    verify->add_option("--egf-order", egf_order, "Last series coefficient for EGF checks");
    verify->add_option("--report", report, "json or text")->check(CLI::IsMember({"json", "text"}));
    verify->add_flag("--timing", timing, "Include wall times in the report");

    std::string rules_path;
    std::string seed;
    unsigned iterations = 0;
    auto* grammar = app.add_subcommand("grammar", "Iterate the formal derivative of a grammar");
    grammar->add_option("--rules", rules_path, "Rule file")->required();
    grammar->add_option("--seed", seed, "Polynomial to differentiate")->required();
    grammar->add_option("--iterations", iterations, "Number of applications")->required();

    for (auto* sub : {enumerate, poly, verify}) {
        sub->add_option("--jobs", jobs, "Worker threads (default: CHORDLAB_JOBS or 1)")->check(CLI::Range(1, 1024));
        sub->add_flag("--force", force, "Allow n beyond the built-in limits");
    }
    for (auto* sub : {enumerate, poly, verify, grammar}) {
        sub->add_option("--out", out_path, "Write output to this file");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (jobs == 0) {
            jobs = default_jobs();
        }
        std::ostringstream buffer;
        int status = kExitOk;
        if (*enumerate) {
            guard(family, n, force);
            enumerate_family(family, n, format, buffer);
        } else if (*poly) {
            guard(kPolyFamily.at(poly_name), n, force);
            if (poly_format == "json") {
                if (poly_name != "xi" && poly_name != "gamma") {
                    throw UsageError("--format json is available for xi and gamma only");
                }
                buffer << (poly_name == "xi" ? xi_table(n) : gamma_table(n)).to_json() << '\n';
            } else {
                buffer << family_poly(poly_name, n, jobs) << '\n';
            }
        } else if (*verify) {
            if (max_n && *max_n > 10 && !force) {
                throw UsageError("--max-n above 10 needs --force");
            }
            RunOptions options;
            options.ids = split_ids(check_ids);
            options.max_n = max_n;
            options.egf_order = egf_order;
            options.jobs = jobs;
            const auto results = run_checks(options);
            buffer << (report == "json" ? report_json(results, timing) : report_text(results, timing));
            status = all_passed(results) ? kExitOk : kExitCheckFailed;
        } else {
            const std::string text = read_file(rules_path);
            Grammar g;
            try {
                g = parse_grammar(text);
            } catch (const ParseError& e) {
                throw UsageError(rules_path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                                 ": " + e.message());
            } catch (const DuplicateRule& e) {
                throw UsageError(rules_path + ": " + e.what());
            }
            MVPoly start;
            try {
                start = parse_poly(seed);
            } catch (const ParseError& e) {
                throw UsageError("--seed: " + std::string(e.what()));
            }
            buffer << d_iter(g, start, iterations) << '\n';
        }

        if (out_path.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(out_path, std::ios::binary);
            if (!file || !(file << buffer.str()) || !file.flush()) {
                throw UsageError("cannot write '" + out_path + "'");
            }
        }
        return status;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace chordlab
