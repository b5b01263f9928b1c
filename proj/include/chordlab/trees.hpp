#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "chordlab/poly.hpp"
#include "chordlab/rational.hpp"

namespace chordlab {

/// Increasing plane tree on [n] rooted at 1 with ordered children.
struct PlaneTree {
    unsigned max_degree = 2;
    /// children[v] for v in 1..n; index 0 unused.
    std::vector<std::vector<int>> children;

    unsigned order() const noexcept { return children.empty() ? 0 : static_cast<unsigned>(children.size() - 1); }
    bool is_valid() const;
    /// Bracket form, e.g. "1(2(3))" or "1(3,2)".
    std::string to_string() const;
    friend bool operator==(const PlaneTree& a, const PlaneTree& b) { return a.children == b.children; }
};

struct TreeDegrees {
    unsigned leaves = 0;
    unsigned deg1 = 0;
    unsigned deg2 = 0;
    unsigned deg3 = 0;
};

TreeDegrees tree_degrees(const PlaneTree& t);

/// Vertex m+1 is attached at every child slot of every tree on [m], vertices
/// in increasing order and slots left to right.
std::vector<PlaneTree> enumerate_trees(unsigned n, unsigned max_degree);
/// Same order as enumerate_trees, one tree alive at a time.
void for_each_tree(unsigned n, unsigned max_degree, const std::function<void(const PlaneTree&)>& fn);

using CoeffKey = std::array<unsigned, 3>;

struct CoeffTable {
    std::string family;
    unsigned n = 0;
    std::map<CoeffKey, BigInt> entries;

    /// sum c * a^i b^j c^k over the given variable names.
    MVPoly to_poly(const std::array<std::string, 3>& vars) const;
    std::string to_json() const;
    friend bool operator==(const CoeffTable&, const CoeffTable&) = default;
};

/// Trees on [n+1] with degree bound 3, keyed (deg1, deg2, deg3).
CoeffTable xi_census(unsigned n);
/// Trees on [n] with degree bound 3, keyed (deg2, deg1, leaves).
CoeffTable gamma_census(unsigned n);
/// Trees on [n] with degree bound 2, keyed by the number of degree-two vertices.
std::map<unsigned, std::uint64_t> alpha_census(unsigned n);

/// CSV columns n,rank,tree,leaves,deg1,deg2,deg3; the tree field is quoted.
std::string tree_csv_header();
std::string tree_csv_row(unsigned n, std::uint64_t rank, const PlaneTree& t);

/// xi_{n;i,j,k} from the three-term recurrence; memoized.
CoeffTable xi_table(unsigned n);
/// gamma_{n;i,j,k} from the three-term recurrence; memoized.
CoeffTable gamma_table(unsigned n);

} // namespace chordlab
