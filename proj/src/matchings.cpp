#include "chordlab/matchings.hpp"

#include <algorithm>
#include <cctype>

#include "chordlab/errors.hpp"
#include "chordlab/fault_injection.hpp"
#include "chordlab/tally.hpp"

namespace chordlab {

using fault::Fault;

namespace {

constexpr unsigned kMaxOrder = 17;

bool by_closer(const Arc& a, const Arc& b) { return a.closer < b.closer; }

} // namespace

Matching::Matching(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
    const std::size_t size = 2 * arcs_.size();
    std::vector<bool> seen(size + 1, false);
    for (auto& a : arcs_) {
        if (a.opener > a.closer) {
            std::swap(a.opener, a.closer);
        }
        for (int v : {a.opener, a.closer}) {
            if (v < 1 || static_cast<std::size_t>(v) > size || seen[static_cast<std::size_t>(v)]) {
                throw Error("not a perfect matching on [" + std::to_string(size) + "]");
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
    std::sort(arcs_.begin(), arcs_.end(), by_closer);
}

std::vector<int> Matching::partners() const {
    std::vector<int> p(2 * arcs_.size() + 1, 0);
    for (const auto& a : arcs_) {
        p[static_cast<std::size_t>(a.opener)] = a.closer;
        p[static_cast<std::size_t>(a.closer)] = a.opener;
    }
    return p;
}

bool Matching::contains(const Arc& a) const {
    const Arc key{std::min(a.opener, a.closer), std::max(a.opener, a.closer)};
    return std::find(arcs_.begin(), arcs_.end(), key) != arcs_.end();
}

std::string Matching::to_string() const {
    std::string out;
    for (const auto& a : arcs_) {
        out += "(" + std::to_string(a.opener) + "," + std::to_string(a.closer) + ")";
    }
    return out;
}

Matching parse_matching(std::string_view text) {
    std::vector<Arc> arcs;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
    };
    auto expect = [&](char c) {
        skip();
        if (i >= text.size() || text[i] != c) {
            throw ParseError(std::string("expected '") + c + "'", 1, i + 1);
        }
        ++i;
    };
    auto number = [&] {
        skip();
        const std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        if (start == i) {
            throw ParseError("expected a vertex number", 1, start + 1);
        }
        return std::stoi(std::string(text.substr(start, i - start)));
    };
    skip();
    while (i < text.size()) {
        expect('(');
        const int a = number();
        expect(',');
        const int b = number();
        expect(')');
        arcs.push_back({a, b});
        skip();
    }
    return Matching(std::move(arcs));
}

BlockClass classify_block(const Arc& a) {
    if (a.opener % 2 == 1 && a.closer == a.opener + 1) {
        return {CloserClass::Fixed, OpenerClass::Fixed};
    }
    return {a.closer % 2 == 0 ? CloserClass::EvenLarger : CloserClass::OddLarger,
            a.opener % 2 == 0 ? OpenerClass::EvenSmaller : OpenerClass::OddSmaller};
}

BlockStats block_stats(const Matching& m) {
    BlockStats s;
    for (const auto& a : m.arcs()) {
        const auto c = classify_block(a);
        switch (c.closer_class) {
        case CloserClass::Fixed: ++s.fixb; break;
        case CloserClass::EvenLarger: ++s.elblock; break;
        case CloserClass::OddLarger: ++s.olblock; break;
        }
        if (c.opener_class == OpenerClass::EvenSmaller) {
            ++s.esblock;
        } else if (c.opener_class == OpenerClass::OddSmaller) {
            ++s.osblock;
        }
        if (a.opener % 2 == 0 && a.closer % 2 == 1) {
            ++s.even_to_odd;
        }
    }
    fault::bump(Fault::BlockFixb, s.fixb);
    fault::bump(Fault::BlockElblock, s.elblock);
    fault::bump(Fault::BlockOlblock, s.olblock);
    fault::bump(Fault::BlockEsblock, s.esblock);
    fault::bump(Fault::BlockOsblock, s.osblock);
    fault::bump(Fault::BlockEvenToOdd, s.even_to_odd);
    return s;
}

PairStats pairwise_stats(const Matching& m) {
    PairStats s;
    const auto& arcs = m.arcs();
    for (std::size_t x = 0; x < arcs.size(); ++x) {
        for (std::size_t y = 0; y < arcs.size(); ++y) {
            const Arc& a = arcs[x];
            const Arc& b = arcs[y];
            if (a.opener >= b.opener) {
                continue;
            }
            // a opens first
            if (a.closer < b.opener) {
                ++s.al;
                if (a.closer + 1 == b.opener) {
                    ++s.nal;
                }
            } else if (a.closer < b.closer) {
                ++s.cr;
                if (a.opener + 1 == b.opener) {
                    ++s.lcr;
                }
                if (a.closer + 1 == b.closer) {
                    ++s.rcr;
                }
            } else {
                ++s.ne;
                if (a.opener + 1 == b.opener) {
                    ++s.lne;
                }
                if (b.closer + 1 == a.closer) {
                    ++s.rne;
                }
            }
        }
    }
    const auto partner = m.partners();
    const int size = static_cast<int>(2 * arcs.size());
    for (int i = 1; i < size; ++i) {
        const bool closer_here = partner[static_cast<std::size_t>(i)] < i;
        const bool closer_next = partner[static_cast<std::size_t>(i + 1)] < i + 1;
        if (!closer_here && closer_next) {
            ++s.lrp;
        }
        if (closer_here && closer_next) {
            ++s.rrp;
        }
    }
    fault::bump(Fault::PairCr, s.cr);
    fault::bump(Fault::PairNe, s.ne);
    fault::bump(Fault::PairAl, s.al);
    fault::bump(Fault::PairLne, s.lne);
    fault::bump(Fault::PairLcr, s.lcr);
    fault::bump(Fault::PairNal, s.nal);
    fault::bump(Fault::PairRne, s.rne);
    fault::bump(Fault::PairRcr, s.rcr);
    fault::bump(Fault::PairLrp, s.lrp);
    fault::bump(Fault::PairRrp, s.rrp);
    return s;
}

std::uint64_t matching_count(unsigned n) {
    if (n > kMaxOrder) {
        throw Error("matching order " + std::to_string(n) + " exceeds the supported maximum " +
                    std::to_string(kMaxOrder));
    }
    std::uint64_t c = 1;
    for (unsigned k = 1; k <= n; ++k) {
        c *= 2 * k - 1;
    }
    return c;
}

namespace {

/// digits[k] in [0, 2(n-k)-1): which free vertex the k-th smallest free
/// vertex is paired with.
Matching build_from_digits(unsigned n, const std::vector<unsigned>& digits) {
    std::vector<int> free(2 * n);
    for (unsigned v = 0; v < 2 * n; ++v) {
        free[v] = static_cast<int>(v + 1);
    }
    std::vector<Arc> arcs;
    arcs.reserve(n);
    for (unsigned k = 0; k < n; ++k) {
        const int a = free.front();
        const std::size_t pick = 1 + digits[k];
        const int b = free[pick];
        free.erase(free.begin() + static_cast<std::ptrdiff_t>(pick));
        free.erase(free.begin());
        arcs.push_back({a, b});
    }
    return Matching(std::move(arcs));
}

std::vector<unsigned> digits_of_rank(unsigned n, std::uint64_t rank) {
    std::vector<unsigned> digits(n, 0);
    for (unsigned k = n; k-- > 0;) {
        const unsigned radix = 2 * (n - k) - 1;
        digits[k] = static_cast<unsigned>(rank % radix);
        rank /= radix;
    }
    return digits;
}

} // namespace

Matching unrank_matching(unsigned n, std::uint64_t rank) {
    if (rank >= matching_count(n)) {
        throw Error("matching rank out of range");
    }
    return build_from_digits(n, digits_of_rank(n, rank));
}

void for_each_matching(unsigned n, RankRange range,
                       const std::function<void(std::uint64_t, const Matching&)>& fn) {
    range.end = std::min(range.end, matching_count(n));
    if (range.begin >= range.end) {
        return;
    }
    auto digits = digits_of_rank(n, range.begin);
    for (std::uint64_t r = range.begin; r < range.end; ++r) {
        fn(r, build_from_digits(n, digits));
        for (unsigned k = n; k-- > 0;) {
            if (++digits[k] < 2 * (n - k) - 1) {
                break;
            }
            digits[k] = 0;
        }
    }
}

std::vector<Matching> enumerate_matchings(unsigned n) {
    std::vector<Matching> out;
    out.reserve(matching_count(n));
    for_each_matching(n, {0, matching_count(n)}, [&](std::uint64_t, const Matching& m) { out.push_back(m); });
    return out;
}

MVPoly matching_sum(unsigned n, unsigned jobs, const std::vector<std::string>& vars,
                    const std::function<void(const Matching&, std::vector<unsigned>&)>& stats) {
    const auto parts = map_shards(matching_count(n), jobs, [&](RankRange range) {
        Tally t(vars);
        std::vector<unsigned> exps(vars.size(), 0);
        for_each_matching(n, range, [&](std::uint64_t, const Matching& m) {
            std::fill(exps.begin(), exps.end(), 0U);
            stats(m, exps);
            t.add(exps);
        });
        return t;
    });
    Tally total(vars);
    for (const auto& t : parts) {
        total.merge(t);
    }
    return total.to_poly();
}

std::string_view tag_name(ReduceTag t) {
    switch (t) {
    case ReduceTag::Psi: return "psi";
    case ReduceTag::Psi1: return "psi1";
    case ReduceTag::Psi2: return "psi2";
    }
    return "?";
}

Matching extend_psi(const Matching& m) {
    auto arcs = m.arcs();
    const int top = static_cast<int>(2 * arcs.size());
    arcs.push_back({top + 1, top + 2});
    return Matching(std::move(arcs));
}

namespace {

Matching split_arc(const Matching& m, const Arc& arc, bool swapped) {
    if (!m.contains(arc)) {
        throw ArcNotFound("arc (" + std::to_string(arc.opener) + "," + std::to_string(arc.closer) +
                          ") is not in " + m.to_string());
    }
    const Arc key{std::min(arc.opener, arc.closer), std::max(arc.opener, arc.closer)};
    const int top = static_cast<int>(2 * m.order());
    std::vector<Arc> arcs;
    arcs.reserve(m.order() + 1);
    for (const auto& a : m.arcs()) {
        if (a != key) {
            arcs.push_back(a);
        }
    }
    const int first = swapped ? key.closer : key.opener;
    const int second = swapped ? key.opener : key.closer;
    arcs.push_back({first, top + 1});
    arcs.push_back({second, top + 2});
    return Matching(std::move(arcs));
}

} // namespace

Matching extend_psi1(const Matching& m, const Arc& arc) { return split_arc(m, arc, false); }
Matching extend_psi2(const Matching& m, const Arc& arc) { return split_arc(m, arc, true); }

std::pair<Matching, ReduceTag> reduce_step(const Matching& m) {
    const unsigned n = m.order();
    if (n == 0) {
        throw Error("reduce_step needs a nonempty matching");
    }
    const int hi = static_cast<int>(2 * n);
    const auto partner = m.partners();
    std::vector<Arc> arcs;
    arcs.reserve(n);
    if (partner[static_cast<std::size_t>(hi)] == hi - 1) {
        for (const auto& a : m.arcs()) {
            if (a.closer != hi) {
                arcs.push_back(a);
            }
        }
        return {Matching(std::move(arcs)), ReduceTag::Psi};
    }
    const int a = partner[static_cast<std::size_t>(hi - 1)];
    const int b = partner[static_cast<std::size_t>(hi)];
    for (const auto& arc : m.arcs()) {
        if (arc.closer < hi - 1) {
            arcs.push_back(arc);
        }
    }
    arcs.push_back({std::min(a, b), std::max(a, b)});
    return {Matching(std::move(arcs)), a < b ? ReduceTag::Psi1 : ReduceTag::Psi2};
}

std::set<int> trace_indices(const Matching& m) {
    std::set<int> out;
    Matching current = m;
    while (true) {
        for (const auto& a : current.arcs()) {
            if (classify_block(a).closer_class == CloserClass::Fixed) {
                out.insert(a.opener);
            }
        }
        if (current.order() == 0) {
            break;
        }
        current = reduce_step(current).first;
    }
    return out;
}

unsigned trace_count(const Matching& m) {
    auto t = static_cast<unsigned>(trace_indices(m).size());
    fault::bump(Fault::Trace, t);
    return t;
}

MVPoly m_poly(unsigned n, unsigned jobs) {
    return matching_sum(n, jobs, {"x", "y", "s", "t"}, [](const Matching& m, std::vector<unsigned>& e) {
        const auto b = block_stats(m);
        e = {b.elblock, b.olblock, b.fixb, trace_count(m)};
    });
}

MVPoly i_poly(unsigned n, unsigned jobs) {
    return matching_sum(n, jobs, {"x", "y", "q"}, [](const Matching& m, std::vector<unsigned>& e) {
        const auto p = pairwise_stats(m);
        e = {p.ne, p.cr, p.al};
    });
}

Matching mirror(const Matching& m) {
    const int top = static_cast<int>(2 * m.order()) + 1;
    std::vector<Arc> arcs;
    arcs.reserve(m.order());
    for (const auto& a : m.arcs()) {
        arcs.push_back({top - a.closer, top - a.opener});
    }
    return Matching(std::move(arcs));
}

std::string matching_csv_header() {
    return "n,rank,arcs,fixb,elblock,olblock,esblock,osblock,cr,ne,al,lne,lcr,nal,lrp,rrp,trace";
}

std::string matching_csv_row(unsigned n, std::uint64_t rank, const Matching& m) {
    const auto b = block_stats(m);
    const auto p = pairwise_stats(m);
    // The arc list contains commas, so it is quoted.
    std::string out = std::to_string(n) + "," + std::to_string(rank) + ",\"" + m.to_string() + "\"";
    for (unsigned v : {b.fixb, b.elblock, b.olblock, b.esblock, b.osblock, p.cr, p.ne, p.al, p.lne, p.lcr, p.nal,
                       p.lrp, p.rrp, trace_count(m)}) {
        out += "," + std::to_string(v);
    }
    return out;
}

} // namespace chordlab
