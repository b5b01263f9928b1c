#include "chordlab/matching_words.hpp"

#include <cctype>

#include "chordlab/errors.hpp"
#include "chordlab/fault_injection.hpp"

namespace chordlab {

using fault::Fault;

bool MatchingWord::is_valid() const {
    if (symbols.size() % 2 != 0) {
        return false;
    }
    const auto n = static_cast<int>(order());
    std::vector<int> plain_at(static_cast<std::size_t>(n) + 1, -1);
    std::vector<int> bar_at(static_cast<std::size_t>(n) + 1, -1);
    int last_bar = 0;
    for (std::size_t p = 0; p < symbols.size(); ++p) {
        const auto& s = symbols[p];
        if (s.value < 1 || s.value > n) {
            return false;
        }
        auto& slot = s.barred ? bar_at[static_cast<std::size_t>(s.value)] : plain_at[static_cast<std::size_t>(s.value)];
        if (slot != -1) {
            return false;
        }
        slot = static_cast<int>(p);
        if (s.barred) {
            if (s.value <= last_bar || plain_at[static_cast<std::size_t>(s.value)] == -1) {
                return false;
            }
            last_bar = s.value;
        }
    }
    return true;
}

std::string MatchingWord::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += std::to_string(symbols[i].value);
        if (symbols[i].barred) {
            out += '\'';
        }
    }
    return out;
}

MatchingWord parse_matching_word(std::string_view text) {
    MatchingWord w;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        if (start == i) {
            throw ParseError("expected a symbol value", 1, i + 1);
        }
        WordSymbol s{std::stoi(std::string(text.substr(start, i - start))), false};
        if (i < text.size() && text[i] == '\'') {
            s.barred = true;
            ++i;
        }
        w.symbols.push_back(s);
    }
    if (!w.is_valid()) {
        throw ParseError("not a matching permutation", 1, 1);
    }
    return w;
}

MatchingWord from_matching(const Matching& m) {
    MatchingWord w;
    w.symbols.resize(2 * m.order());
    int label = 0;
    for (const auto& a : m.arcs()) {
        ++label;
        w.symbols[static_cast<std::size_t>(a.opener - 1)] = {label, false};
        w.symbols[static_cast<std::size_t>(a.closer - 1)] = {label, true};
    }
    return w;
}

Matching to_matching(const MatchingWord& w) {
    std::vector<Arc> arcs(w.order());
    for (std::size_t p = 0; p < w.symbols.size(); ++p) {
        const auto& s = w.symbols[p];
        auto& arc = arcs[static_cast<std::size_t>(s.value - 1)];
        (s.barred ? arc.closer : arc.opener) = static_cast<int>(p + 1);
    }
    return Matching(std::move(arcs));
}

NeighborClassification neighbor_classify(const MatchingWord& w) {
    NeighborClassification c;
    for (std::size_t p = 0; p + 1 < w.symbols.size(); ++p) {
        const auto& a = w.symbols[p];
        const auto& b = w.symbols[p + 1];
        const int index = static_cast<int>(p + 1);
        if (!a.barred && !b.barred) {
            if (a.value > b.value && fault::active() != Fault::WordLneAsLcr) {
                c.lne.push_back(index);
            } else {
                c.lcr.push_back(index);
            }
        } else if (a.barred && !b.barred) {
            c.nal.push_back(index);
        } else if (a.barred) {
            c.rrp.push_back(index);
        } else {
            c.lrp.push_back(index);
        }
    }
    return c;
}

NeighborCounts neighbor_counts(const MatchingWord& w) {
    const auto c = neighbor_classify(w);
    NeighborCounts n{static_cast<unsigned>(c.lne.size()), static_cast<unsigned>(c.lcr.size()),
                     static_cast<unsigned>(c.nal.size()), static_cast<unsigned>(c.rrp.size()),
                     static_cast<unsigned>(c.lrp.size())};
    fault::bump(Fault::WordLne, n.lne);
    fault::bump(Fault::WordLcr, n.lcr);
    fault::bump(Fault::WordNal, n.nal);
    fault::bump(Fault::WordRrp, n.rrp);
    fault::bump(Fault::WordLrp, n.lrp);
    return n;
}

WordStats word_stats(const MatchingWord& w) {
    WordStats s;
    const auto& sym = w.symbols;
    for (std::size_t i = 0; i < sym.size(); ++i) {
        for (std::size_t j = i + 1; j < sym.size(); ++j) {
            if (sym[j].barred) {
                continue;
            }
            if (!sym[i].barred) {
                (sym[i].value > sym[j].value ? s.inv : s.coinv) += 1;
            } else if (sym[i].value < sym[j].value) {
                ++s.rank;
            }
        }
    }
    fault::bump(Fault::WordInv, s.inv);
    fault::bump(Fault::WordCoinv, s.coinv);
    fault::bump(Fault::WordRank, s.rank);
    return s;
}

std::vector<MatchingWord> enumerate_matching_words(unsigned n) {
    std::vector<MatchingWord> out;
    out.reserve(matching_count(n));
    for_each_matching(n, {0, matching_count(n)},
                      [&](std::uint64_t, const Matching& m) { out.push_back(from_matching(m)); });
    return out;
}

std::vector<MatchingWord> insertion_matching_words(unsigned n) {
    std::vector<MatchingWord> level{MatchingWord{}};
    for (int k = 1; k <= static_cast<int>(n); ++k) {
        std::vector<MatchingWord> next;
        for (const auto& w : level) {
            for (std::size_t gap = 0; gap <= w.symbols.size(); ++gap) {
                MatchingWord v = w;
                v.symbols.insert(v.symbols.begin() + static_cast<std::ptrdiff_t>(gap), {k, false});
                v.symbols.push_back({k, true});
                next.push_back(std::move(v));
            }
        }
        level = std::move(next);
    }
    return level;
}

namespace {

MVPoly word_sum(unsigned n, unsigned jobs, const std::vector<std::string>& vars,
                void (*stats)(const MatchingWord&, std::vector<unsigned>&)) {
    return matching_sum(n, jobs, vars,
                        [stats](const Matching& m, std::vector<unsigned>& e) { stats(from_matching(m), e); });
}

} // namespace

MVPoly c_poly(unsigned n, unsigned jobs) {
    return word_sum(n, jobs, {"x1", "x2", "x3", "y1", "y2"}, [](const MatchingWord& w, std::vector<unsigned>& e) {
        const auto c = neighbor_counts(w);
        e = {c.lne, c.lcr, c.nal, c.rrp, c.lrp};
    });
}

MVPoly nca_poly(unsigned n, unsigned jobs) {
    return word_sum(n, jobs, {"x", "y", "z"}, [](const MatchingWord& w, std::vector<unsigned>& e) {
        const auto c = neighbor_counts(w);
        e = {c.lne, c.lcr, c.nal};
    });
}

MVPoly ncr_poly(unsigned n, unsigned jobs) {
    return word_sum(n, jobs, {"x", "y", "z"}, [](const MatchingWord& w, std::vector<unsigned>& e) {
        const auto c = neighbor_counts(w);
        if (c.lrp == 0) {
            throw IdentityViolation("word " + w.to_string() + " has no LR pair");
        }
        e = {c.lne, c.lcr, c.lrp - 1};
    });
}

MVPoly word_i_poly(unsigned n, unsigned jobs) {
    return word_sum(n, jobs, {"x", "y", "q"}, [](const MatchingWord& w, std::vector<unsigned>& e) {
        const auto s = word_stats(w);
        e = {s.inv, s.coinv, s.rank};
    });
}

namespace {

std::uint32_t shifted(long base, std::uint32_t minus, const Monomial& m) {
    const long v = base - static_cast<long>(minus);
    if (v < 0) {
        throw Error("reciprocal transform produced a negative exponent on " + m.to_string());
    }
    return static_cast<std::uint32_t>(v);
}

} // namespace

MVPoly q_to_neighbor(const MVPoly& q, unsigned n) {
    const long nn = n;
    return map_monomials(q, [nn](const Monomial& m) {
        const auto a = m.exponent("x");
        const auto b = m.exponent("y");
        const auto c = m.exponent("z");
        return Monomial({{"x1", shifted(nn, a, m)},
                         {"x2", shifted(nn, b, m)},
                         {"x3", shifted(nn, c, m)},
                         {"y1", shifted(2 * nn, a + b, m)},
                         {"y2", shifted(nn + 1, c, m)}});
    });
}

MVPoly q_to_nca(const MVPoly& q, unsigned n) {
    const long nn = n;
    return map_monomials(q, [nn](const Monomial& m) {
        return Monomial({{"x", shifted(nn, m.exponent("x"), m)},
                         {"y", shifted(nn, m.exponent("y"), m)},
                         {"z", shifted(nn, m.exponent("z"), m)}});
    });
}

MVPoly q_to_lne_lcr_lrp(const MVPoly& q, unsigned n) {
    const long nn = n;
    return map_monomials(q, [nn](const Monomial& m) {
        return Monomial({{"x1", shifted(nn, m.exponent("x"), m)},
                         {"x2", shifted(nn, m.exponent("y"), m)},
                         {"y2", shifted(nn + 1, m.exponent("z"), m)}});
    });
}

MVPoly q_to_rrp_lrp(const MVPoly& q, unsigned n) {
    const long nn = n;
    return map_monomials(q, [nn](const Monomial& m) {
        return Monomial({{"y1", shifted(2 * nn, m.exponent("x") + m.exponent("y"), m)},
                         {"y2", shifted(nn + 1, m.exponent("z"), m)}});
    });
}

std::string word_csv_header() { return "n,rank,word,lne,lcr,nal,rrp,lrp,inv,coinv,rank_stat"; }

std::string word_csv_row(unsigned n, std::uint64_t rank, const MatchingWord& w) {
    const auto c = neighbor_counts(w);
    const auto s = word_stats(w);
    std::string out = std::to_string(n) + "," + std::to_string(rank) + "," + w.to_string();
    for (unsigned v : {c.lne, c.lcr, c.nal, c.rrp, c.lrp, s.inv, s.coinv, s.rank}) {
        out += "," + std::to_string(v);
    }
    return out;
}

} // namespace chordlab
