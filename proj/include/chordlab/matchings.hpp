#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chordlab/parallel.hpp"
#include "chordlab/poly.hpp"

namespace chordlab {

struct Arc {
    int opener = 0;
    int closer = 0;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Perfect matching on [2n] in standard form: arcs sorted by closer.
class Matching {
  public:
    Matching() = default;
    /// Normalizes to standard form; throws Error if the arcs do not form a
    /// perfect matching on [2n].
    explicit Matching(std::vector<Arc> arcs);

    unsigned order() const noexcept { return static_cast<unsigned>(arcs_.size()); }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    /// partner[v] for v in 1..2n; index 0 unused.
    std::vector<int> partners() const;
    bool contains(const Arc& a) const;
    std::string to_string() const;

    friend bool operator==(const Matching&, const Matching&) = default;
    friend auto operator<=>(const Matching& a, const Matching& b) { return a.arcs_ <=> b.arcs_; }

  private:
    std::vector<Arc> arcs_;
};

/// Parses "(i1,j1)(i2,j2)..."; whitespace is ignored.
Matching parse_matching(std::string_view text);

enum class CloserClass { Fixed, EvenLarger, OddLarger };
enum class OpenerClass { Fixed, EvenSmaller, OddSmaller };

struct BlockClass {
    CloserClass closer_class;
    OpenerClass opener_class;
};

BlockClass classify_block(const Arc& a);

struct BlockStats {
    unsigned fixb = 0;
    unsigned elblock = 0;
    unsigned olblock = 0;
    unsigned esblock = 0;
    unsigned osblock = 0;
    unsigned even_to_odd = 0;
};

struct PairStats {
    unsigned cr = 0;
    unsigned ne = 0;
    unsigned al = 0;
    unsigned lne = 0;
    unsigned lcr = 0;
    unsigned nal = 0;
    unsigned rne = 0;
    unsigned rcr = 0;
    unsigned lrp = 0;
    unsigned rrp = 0;
};

BlockStats block_stats(const Matching& m);
PairStats pairwise_stats(const Matching& m);

// Enumeration: the smallest unmatched vertex is paired with each larger
// unmatched vertex in increasing order; ranks follow that order.

std::uint64_t matching_count(unsigned n);
Matching unrank_matching(unsigned n, std::uint64_t rank);
void for_each_matching(unsigned n, RankRange range,
                       const std::function<void(std::uint64_t, const Matching&)>& fn);
std::vector<Matching> enumerate_matchings(unsigned n);

/// Sums prod vars[k]^exps[k] over all matchings of order n; `stats` fills
/// the exponent vector (pre-sized to vars.size()) for each matching.
MVPoly matching_sum(unsigned n, unsigned jobs, const std::vector<std::string>& vars,
                    const std::function<void(const Matching&, std::vector<unsigned>&)>& stats);

// Generation algorithm and its inverse.

enum class ReduceTag { Psi, Psi1, Psi2 };
std::string_view tag_name(ReduceTag t);

Matching extend_psi(const Matching& m);
/// Replaces (i,j) by (i,2n+1)(j,2n+2). Throws ArcNotFound.
Matching extend_psi1(const Matching& m, const Arc& arc);
/// Replaces (i,j) by (j,2n+1)(i,2n+2). Throws ArcNotFound.
Matching extend_psi2(const Matching& m, const Arc& arc);
std::pair<Matching, ReduceTag> reduce_step(const Matching& m);

std::set<int> trace_indices(const Matching& m);
unsigned trace_count(const Matching& m);

/// M_n(x,y,s,t) = sum x^elblock y^olblock s^fixb t^trace.
MVPoly m_poly(unsigned n, unsigned jobs = 1);
/// I_n(x,y,q) = sum x^ne y^cr q^al.
MVPoly i_poly(unsigned n, unsigned jobs = 1);

/// Reflection v -> 2n+1-v, returned in standard form.
Matching mirror(const Matching& m);

std::string matching_csv_header();
std::string matching_csv_row(unsigned n, std::uint64_t rank, const Matching& m);

} // namespace chordlab
