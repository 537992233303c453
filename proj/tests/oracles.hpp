// Brute-force reference implementations used as test oracles. These stay
// independent of the library's algorithm paths: subsets and permutations are
// enumerated directly.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "mismu/graph.hpp"

namespace oracle {

using mismu::Graph;
using mismu::u128;

inline bool subset_independent(const Graph& g, std::uint64_t s) {
    for (int u = 0; u < g.order(); ++u)
        if ((s >> u) & 1)
            for (int v = u + 1; v < g.order(); ++v)
                if (((s >> v) & 1) && g.has_edge(u, v)) return false;
    return true;
}

inline bool subset_maximal_independent(const Graph& g, std::uint64_t s) {
    if (!subset_independent(g, s)) return false;
    for (int v = 0; v < g.order(); ++v) {
        if ((s >> v) & 1) continue;
        bool blocked = false;
        for (int u = 0; u < g.order(); ++u)
            if (((s >> u) & 1) && g.has_edge(u, v)) blocked = true;
        if (!blocked) return false;
    }
    return true;
}

inline u128 count_mis(const Graph& g) {
    u128 total = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s)
        if (subset_maximal_independent(g, s)) ++total;
    return total;
}

inline u128 count_independent_sets(const Graph& g) {
    u128 total = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s)
        if (subset_independent(g, s)) ++total;
    return total;
}

// recursive include/exclude: the first free vertex either stays unmatched or
// pairs with one of its free neighbors
inline int matching_number_rec(const Graph& g, std::uint64_t used) {
    int u = -1;
    for (int w = 0; w < g.order(); ++w)
        if (!((used >> w) & 1)) {
            u = w;
            break;
        }
    if (u < 0) return 0;
    int best = matching_number_rec(g, used | mismu::bit(u));
    for (int v = u + 1; v < g.order(); ++v)
        if (!((used >> v) & 1) && g.has_edge(u, v))
            best = std::max(best, 1 + matching_number_rec(g, used | mismu::bit(u) | mismu::bit(v)));
    return best;
}

inline int matching_number(const Graph& g) { return matching_number_rec(g, 0); }

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    std::vector<int> perm(static_cast<std::size_t>(a.order()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < a.order() && match; ++u)
            for (int v = u + 1; v < a.order() && match; ++v)
                if (a.has_edge(u, v) !=
                    b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
                    match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// min-over-all-permutations edge bitmap; usable as a certificate up to n ~ 6
inline std::uint64_t brute_certificate(const Graph& g) {
    int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t bits = 0;
        int at = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (g.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
                    bits |= mismu::bit(at);
                ++at;
            }
        best = std::min(best, bits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// every isomorphism class on n vertices by brute-force dedupe (n <= 6)
inline std::vector<Graph> all_graphs(int n) {
    std::set<std::uint64_t> seen;
    std::vector<Graph> out;
    int m = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        Graph g(n);
        int at = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if ((mask >> at) & 1) g.add_edge(u, v);
                ++at;
            }
        if (seen.insert(brute_certificate(g)).second) out.push_back(g);
    }
    return out;
}

// every maximum matching, as saturated-vertex masks
inline void collect_matchings(const Graph& g, std::uint64_t used, int from, int size,
                              std::vector<std::pair<int, std::uint64_t>>& out) {
    out.emplace_back(size, used);
    for (int u = from; u < g.order(); ++u) {
        if ((used >> u) & 1) continue;
        for (int v = u + 1; v < g.order(); ++v)
            if (!((used >> v) & 1) && g.has_edge(u, v))
                collect_matchings(g, used | mismu::bit(u) | mismu::bit(v), u + 1, size + 1, out);
    }
}

// union of unsaturated vertices over all maximum matchings
inline std::uint64_t exposed_by_some_maximum_matching(const Graph& g) {
    std::vector<std::pair<int, std::uint64_t>> all;
    collect_matchings(g, 0, 0, 0, all);
    int mu = 0;
    for (auto& [size, used] : all) mu = std::max(mu, size);
    std::uint64_t exposed = 0;
    std::uint64_t full = g.vertex_mask();
    for (auto& [size, used] : all)
        if (size == mu) exposed |= full & ~used;
    return exposed;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d4ecb3fe7b151dULL;
    return z ^ (z >> 31);
}

inline Graph random_graph(int n, std::uint64_t& state, int density_percent = 50) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(splitmix64(state) % 100) < density_percent) g.add_edge(u, v);
    return g;
}

inline std::vector<int> random_permutation(int n, std::uint64_t& state) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)],
                  perm[static_cast<std::size_t>(splitmix64(state) % static_cast<std::uint64_t>(i + 1))]);
    return perm;
}

}  // namespace oracle
