#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mismu/graph.hpp"

namespace mismu {

/// Set of pairwise vertex-disjoint edges of a host graph.
struct Matching {
    std::vector<std::pair<int, int>> edges;  // normalized u < v

    int size() const { return static_cast<int>(edges.size()); }

    VertexSet saturated() const {
        VertexSet s;
        for (auto [u, v] : edges) s.bits |= bit(u) | bit(v);
        return s;
    }

    /// mate[v] or -1; throws if pairs share endpoints.
    std::array<int, kMaxOrder> mates(int n) const {
        std::array<int, kMaxOrder> m{};
        m.fill(-1);
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n || u == v)
                throw std::invalid_argument("Matching: endpoint out of range");
            if (m[static_cast<std::size_t>(u)] != -1 || m[static_cast<std::size_t>(v)] != -1)
                throw std::invalid_argument("Matching: shared endpoint");
            m[static_cast<std::size_t>(u)] = v;
            m[static_cast<std::size_t>(v)] = u;
        }
        return m;
    }
};

inline bool is_valid_matching(const Graph& g, const Matching& m) {
    try {
        m.mates(g.order());
    } catch (const std::invalid_argument&) {
        return false;
    }
    for (auto [u, v] : m.edges)
        if (!g.has_edge(u, v)) return false;
    return true;
}

namespace detail {

// Edmonds' blossom search. Finds an alternating tree from root, contracting
// odd cycles via base[]; returns an unsaturated endpoint of an augmenting
// path, or -1. Scan order is ascending everywhere, so results are
// deterministic for a given graph.
struct BlossomSearch {
    const Graph& g;
    int n;
    std::array<int, kMaxOrder> match, parent, base;

    explicit BlossomSearch(const Graph& graph) : g(graph), n(graph.order()) {
        match.fill(-1);
    }

    int lowest_common_base(int a, int b) const {
        std::uint64_t seen = 0;
        for (;;) {
            a = base[static_cast<std::size_t>(a)];
            seen |= bit(a);
            if (match[static_cast<std::size_t>(a)] == -1) break;
            a = parent[static_cast<std::size_t>(match[static_cast<std::size_t>(a)])];
        }
        for (;;) {
            b = base[static_cast<std::size_t>(b)];
            if (seen & bit(b)) return b;
            b = parent[static_cast<std::size_t>(match[static_cast<std::size_t>(b)])];
        }
    }

    void mark_path(int v, int stop, int child, std::uint64_t& in_blossom) {
        while (base[static_cast<std::size_t>(v)] != stop) {
            int mv = match[static_cast<std::size_t>(v)];
            in_blossom |= bit(base[static_cast<std::size_t>(v)]);
            in_blossom |= bit(base[static_cast<std::size_t>(mv)]);
            parent[static_cast<std::size_t>(v)] = child;
            child = mv;
            v = parent[static_cast<std::size_t>(mv)];
        }
    }

    int find_augmenting_endpoint(int root) {
        parent.fill(-1);
        for (int v = 0; v < n; ++v) base[static_cast<std::size_t>(v)] = v;
        std::uint64_t used = bit(root);
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            std::uint64_t nbrs = g.row(v);
            while (nbrs) {
                int u = lowest_bit(nbrs);
                nbrs &= nbrs - 1;
                if (base[static_cast<std::size_t>(v)] == base[static_cast<std::size_t>(u)] ||
                    match[static_cast<std::size_t>(v)] == u)
                    continue;
                if (u == root ||
                    (match[static_cast<std::size_t>(u)] != -1 &&
                     parent[static_cast<std::size_t>(match[static_cast<std::size_t>(u)])] != -1)) {
                    // Odd cycle: contract the blossom to its base.
                    int cur_base = lowest_common_base(v, u);
                    std::uint64_t in_blossom = 0;
                    mark_path(v, cur_base, u, in_blossom);
                    mark_path(u, cur_base, v, in_blossom);
                    for (int i = 0; i < n; ++i) {
                        if (in_blossom & bit(base[static_cast<std::size_t>(i)])) {
                            base[static_cast<std::size_t>(i)] = cur_base;
                            if (!(used & bit(i))) {
                                used |= bit(i);
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (parent[static_cast<std::size_t>(u)] == -1) {
                    parent[static_cast<std::size_t>(u)] = v;
                    int mu = match[static_cast<std::size_t>(u)];
                    if (mu == -1) return u;  // augmenting path root..u
                    if (!(used & bit(mu))) {
                        used |= bit(mu);
                        queue.push_back(mu);
                    }
                }
            }
        }
        return -1;
    }

    void augment(int u) {
        while (u != -1) {
            int pv = parent[static_cast<std::size_t>(u)];
            int next = match[static_cast<std::size_t>(pv)];
            match[static_cast<std::size_t>(u)] = pv;
            match[static_cast<std::size_t>(pv)] = u;
            u = next;
        }
    }
};

inline Matching mates_to_matching(const std::array<int, kMaxOrder>& mates, int n) {
    Matching m;
    for (int v = 0; v < n; ++v)
        if (mates[static_cast<std::size_t>(v)] > v)
            m.edges.emplace_back(v, mates[static_cast<std::size_t>(v)]);
    return m;
}

}  // namespace detail

inline Matching maximum_matching(const Graph& g) {
    detail::BlossomSearch bs(g);
    int n = g.order();
    // Greedy seed keeps the number of searches down.
    for (int v = 0; v < n; ++v) {
        if (bs.match[static_cast<std::size_t>(v)] != -1) continue;
        std::uint64_t nbrs = g.row(v);
        while (nbrs) {
            int u = lowest_bit(nbrs);
            nbrs &= nbrs - 1;
            if (bs.match[static_cast<std::size_t>(u)] == -1) {
                bs.match[static_cast<std::size_t>(v)] = u;
                bs.match[static_cast<std::size_t>(u)] = v;
                break;
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (bs.match[static_cast<std::size_t>(v)] != -1) continue;
        int end = bs.find_augmenting_endpoint(v);
        if (end != -1) bs.augment(end);
    }
    return detail::mates_to_matching(bs.match, n);
}

inline int matching_number(const Graph& g) { return maximum_matching(g).size(); }

/// Augmenting path for m as a vertex sequence, or nullopt when m is maximum.
inline std::optional<std::vector<int>> find_augmenting_path(const Graph& g, const Matching& m) {
    if (!is_valid_matching(g, m)) throw std::invalid_argument("find_augmenting_path: invalid matching");
    int n = g.order();
    detail::BlossomSearch bs(g);
    bs.match = m.mates(n);
    int end = -1;
    for (int v = 0; v < n && end == -1; ++v)
        if (bs.match[static_cast<std::size_t>(v)] == -1) end = bs.find_augmenting_endpoint(v);
    if (end == -1) return std::nullopt;

    auto before = m.mates(n);
    bs.augment(end);
    // The symmetric difference of the two matchings is exactly the
    // augmenting path; walk it from its smaller unsaturated endpoint.
    std::array<std::array<int, 2>, kMaxOrder> link{};
    std::array<int, kMaxOrder> deg{};
    deg.fill(0);
    auto add_link = [&](int a, int b) {
        link[static_cast<std::size_t>(a)][static_cast<std::size_t>(deg[static_cast<std::size_t>(a)]++)] = b;
    };
    for (int v = 0; v < n; ++v) {
        int b0 = before[static_cast<std::size_t>(v)], a0 = bs.match[static_cast<std::size_t>(v)];
        if (b0 > v && b0 != a0) { add_link(v, b0); add_link(b0, v); }
        if (a0 > v && a0 != before[static_cast<std::size_t>(v)]) { add_link(v, a0); add_link(a0, v); }
    }
    int start = -1;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1 && before[static_cast<std::size_t>(v)] == -1) {
            start = v;
            break;
        }
    std::vector<int> path{start};
    int prev = -1, cur = start;
    while (true) {
        int next = -1;
        for (int i = 0; i < deg[static_cast<std::size_t>(cur)]; ++i)
            if (link[static_cast<std::size_t>(cur)][static_cast<std::size_t>(i)] != prev)
                next = link[static_cast<std::size_t>(cur)][static_cast<std::size_t>(i)];
        if (next == -1) break;
        path.push_back(next);
        prev = cur;
        cur = next;
    }
    return path;
}

inline bool is_saturated_by_all_maximum_matchings(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
    return matching_number(delete_vertex(g, v)) == matching_number(g) - 1;
}

inline bool is_factor_critical(const Graph& g) {
    int n = g.order();
    if (n % 2 == 0 || !is_connected(g)) return false;
    for (int v = 0; v < n; ++v)
        if (matching_number(delete_vertex(g, v)) != (n - 1) / 2) return false;
    return true;
}

inline bool is_induced_matching(const Graph& g, const Matching& m) {
    if (!is_valid_matching(g, m)) throw std::invalid_argument("is_induced_matching: invalid matching");
    return induced_subgraph(g, m.saturated()).edge_count() == m.size();
}

/// Gallai-Edmonds partition: D = vertices some maximum matching misses,
/// A = their outside neighbors, C = the rest.
struct GEDecomposition {
    VertexSet D, A, C;
};

inline GEDecomposition gallai_edmonds(const Graph& g) {
    int mu = matching_number(g);
    GEDecomposition ge;
    for (int v = 0; v < g.order(); ++v)
        if (matching_number(delete_vertex(g, v)) == mu) ge.D.bits |= bit(v);
    for_each_bit(ge.D.bits, [&](int v) { ge.A.bits |= g.row(v); });
    ge.A.bits &= ~ge.D.bits;
    ge.C.bits = g.vertex_mask() & ~ge.D.bits & ~ge.A.bits;
    return ge;
}

}  // namespace mismu
