#include "chordlab/trees.hpp"

#include <mutex>
#include <shared_mutex>

#include <json.hpp>

#include "chordlab/errors.hpp"
#include "chordlab/fault_injection.hpp"

namespace chordlab {

bool PlaneTree::is_valid() const {
    const unsigned n = order();
    std::vector<int> parent(n + 1, 0);
    for (unsigned v = 1; v <= n; ++v) {
        if (children[v].size() > max_degree) {
            return false;
        }
        for (int c : children[v]) {
            if (c <= static_cast<int>(v) || c > static_cast<int>(n) || parent[static_cast<std::size_t>(c)] != 0) {
                return false;
            }
            parent[static_cast<std::size_t>(c)] = static_cast<int>(v);
        }
    }
    for (unsigned v = 2; v <= n; ++v) {
        if (parent[v] == 0) {
            return false;
        }
    }
    return true;
}

namespace {

void render(const PlaneTree& t, int v, std::string& out) {
    out += std::to_string(v);
    const auto& kids = t.children[static_cast<std::size_t>(v)];
    if (kids.empty()) {
        return;
    }
    out += '(';
    for (std::size_t i = 0; i < kids.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        render(t, kids[i], out);
    }
    out += ')';
}

} // namespace

std::string PlaneTree::to_string() const {
    std::string out;
    if (order() > 0) {
        render(*this, 1, out);
    }
    return out;
}

TreeDegrees tree_degrees(const PlaneTree& t) {
    TreeDegrees d;
    for (unsigned v = 1; v <= t.order(); ++v) {
        switch (t.children[v].size()) {
        case 0: ++d.leaves; break;
        case 1: ++d.deg1; break;
        case 2: ++d.deg2; break;
        default: ++d.deg3; break;
        }
    }
    fault::bump(fault::Fault::TreeLeaves, d.leaves);
    fault::bump(fault::Fault::TreeDeg1, d.deg1);
    fault::bump(fault::Fault::TreeDeg2, d.deg2);
    fault::bump(fault::Fault::TreeDeg3, d.deg3);
    return d;
}

namespace {

void grow(PlaneTree& t, unsigned m, unsigned n, const std::function<void(const PlaneTree&)>& fn) {
    if (m == n) {
        fn(t);
        return;
    }
    const int label = static_cast<int>(m + 1);
    t.children.emplace_back();
    for (unsigned v = 1; v <= m; ++v) {
        const std::size_t width = t.children[v].size();
        if (width >= t.max_degree) {
            continue;
        }
        for (std::size_t slot = 0; slot <= width; ++slot) {
            auto& kids = t.children[v];
            kids.insert(kids.begin() + static_cast<std::ptrdiff_t>(slot), label);
            grow(t, m + 1, n, fn);
            auto& after = t.children[v];
            after.erase(after.begin() + static_cast<std::ptrdiff_t>(slot));
        }
    }
    t.children.pop_back();
}

} // namespace

void for_each_tree(unsigned n, unsigned max_degree, const std::function<void(const PlaneTree&)>& fn) {
    if (max_degree != 2 && max_degree != 3) {
        throw Error("plane tree degree bound must be 2 or 3");
    }
    if (n > 12) {
        throw Error("plane tree order " + std::to_string(n) + " exceeds the supported maximum 12");
    }
    if (n == 0) {
        return;
    }
    PlaneTree root;
    root.max_degree = max_degree;
    root.children.resize(2);
    grow(root, 1, n, fn);
}

std::vector<PlaneTree> enumerate_trees(unsigned n, unsigned max_degree) {
    std::vector<PlaneTree> out;
    for_each_tree(n, max_degree, [&](const PlaneTree& t) { out.push_back(t); });
    return out;
}

MVPoly CoeffTable::to_poly(const std::array<std::string, 3>& vars) const {
    MVPoly p;
    for (const auto& [key, c] : entries) {
        p.add_term(Monomial({{vars[0], key[0]}, {vars[1], key[1]}, {vars[2], key[2]}}), BigRat(c));
    }
    return p;
}

std::string CoeffTable::to_json() const {
    nlohmann::ordered_json j;
    j["family"] = family;
    j["n"] = n;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& [key, c] : entries) {
        nlohmann::ordered_json e;
        e["i"] = key[0];
        e["j"] = key[1];
        e["k"] = key[2];
        e["c"] = c.get_str();
        j["entries"].push_back(std::move(e));
    }
    return j.dump();
}

std::string tree_csv_header() { return "n,rank,tree,leaves,deg1,deg2,deg3"; }

std::string tree_csv_row(unsigned n, std::uint64_t rank, const PlaneTree& t) {
    const auto d = tree_degrees(t);
    return std::to_string(n) + "," + std::to_string(rank) + ",\"" + t.to_string() + "\"," + std::to_string(d.leaves) +
           "," + std::to_string(d.deg1) + "," + std::to_string(d.deg2) + "," + std::to_string(d.deg3);
}

CoeffTable xi_census(unsigned n) {
    CoeffTable t{"xi", n, {}};
    for_each_tree(n + 1, 3, [&](const PlaneTree& tree) {
        const auto d = tree_degrees(tree);
        t.entries[{d.deg1, d.deg2, d.deg3}] += 1;
    });
    return t;
}

CoeffTable gamma_census(unsigned n) {
    CoeffTable t{"gamma", n, {}};
    for_each_tree(n, 3, [&](const PlaneTree& tree) {
        const auto d = tree_degrees(tree);
        t.entries[{d.deg2, d.deg1, d.leaves}] += 1;
    });
    return t;
}

std::map<unsigned, std::uint64_t> alpha_census(unsigned n) {
    std::map<unsigned, std::uint64_t> out;
    for_each_tree(n, 2, [&](const PlaneTree& tree) { ++out[tree_degrees(tree).deg2]; });
    return out;
}

namespace {

using Entries = std::map<CoeffKey, BigInt>;

BigInt lookup(const Entries& e, long i, long j, long k) {
    if (i < 0 || j < 0 || k < 0) {
        return 0;
    }
    const auto it = e.find({static_cast<unsigned>(i), static_cast<unsigned>(j), static_cast<unsigned>(k)});
    return it == e.end() ? BigInt(0) : it->second;
}

Entries xi_next(const Entries& prev, unsigned n) {
    // row n+1 from row n; keys satisfy i + 2j + 3k = n + 1
    Entries out;
    const long target = static_cast<long>(n) + 1;
    for (long k = 0; 3 * k <= target; ++k) {
        for (long j = 0; 2 * j + 3 * k <= target; ++j) {
            const long i = target - 2 * j - 3 * k;
            BigInt c = (1 + j + 2 * k) * lookup(prev, i - 1, j, k) + 2 * (1 + i) * lookup(prev, i + 1, j - 1, k) +
                       3 * (1 + j) * lookup(prev, i, j + 1, k - 1);
            if (c != 0) {
                out[{static_cast<unsigned>(i), static_cast<unsigned>(j), static_cast<unsigned>(k)}] = c;
            }
        }
    }
    return out;
}

Entries gamma_next(const Entries& prev, unsigned n) {
    // row n from row n-1; keys satisfy i + 2j + 3k = 2n + 1
    Entries out;
    const long target = 2 * static_cast<long>(n) + 1;
    for (long k = 0; 3 * k <= target; ++k) {
        for (long j = 0; 2 * j + 3 * k <= target; ++j) {
            const long i = target - 2 * j - 3 * k;
            BigInt c = 3 * (1 + i) * lookup(prev, i + 1, j, k - 1) + 2 * (1 + j) * lookup(prev, i - 1, j + 1, k - 1) +
                       k * lookup(prev, i, j - 1, k);
            if (c != 0) {
                out[{static_cast<unsigned>(i), static_cast<unsigned>(j), static_cast<unsigned>(k)}] = c;
            }
        }
    }
    return out;
}

struct TableCache {
    std::shared_mutex mutex;
    std::vector<Entries> rows; // rows[n-1] holds row n
};

template <typename Next>
CoeffTable cached_row(TableCache& cache, const char* family, unsigned n, Entries first, Next next) {
    if (n == 0) {
        throw Error(std::string(family) + " table needs n >= 1");
    }
    {
        std::shared_lock lock(cache.mutex);
        if (n <= cache.rows.size()) {
            return {family, n, cache.rows[n - 1]};
        }
    }
    std::unique_lock lock(cache.mutex);
    if (cache.rows.empty()) {
        cache.rows.push_back(std::move(first));
    }
    while (cache.rows.size() < n) {
        const auto m = static_cast<unsigned>(cache.rows.size());
        cache.rows.push_back(next(cache.rows.back(), m));
    }
    return {family, n, cache.rows[n - 1]};
}

} // namespace

CoeffTable xi_table(unsigned n) {
    static TableCache cache;
    return cached_row(cache, "xi", n, Entries{{{1, 0, 0}, BigInt(1)}},
                      [](const Entries& prev, unsigned m) { return xi_next(prev, m); });
}

CoeffTable gamma_table(unsigned n) {
    static TableCache cache;
    return cached_row(cache, "gamma", n, Entries{{{0, 0, 1}, BigInt(1)}},
                      [](const Entries& prev, unsigned m) { return gamma_next(prev, m + 1); });
}

} // namespace chordlab
