#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mismu/common.hpp"

namespace mismu {

constexpr int kMaxOrder = 64;

/// Subset of the vertices {0..n-1} of some host graph, stored as a bit mask.
struct VertexSet {
    std::uint64_t bits = 0;

    VertexSet() = default;
    explicit VertexSet(std::uint64_t b) : bits(b) {}

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.bits |= bit(v);
        return s;
    }

    bool contains(int v) const { return (bits >> v) & 1; }
    int count() const { return popcount64(bits); }
    bool empty() const { return bits == 0; }
    VertexSet with(int v) const { return VertexSet{bits | bit(v)}; }
    VertexSet without(int v) const { return VertexSet{bits & ~bit(v)}; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each_bit(bits, [&](int v) { out.push_back(v); });
        return out;
    }

    friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
    friend bool operator!=(VertexSet a, VertexSet b) { return a.bits != b.bits; }
};

/// Simple undirected graph on at most 64 vertices, one adjacency word per
/// vertex. Algorithms treat graphs as immutable values; add_edge exists for
/// construction only.
class Graph {
public:
    Graph() = default;  // order-0 value, only ever produced by vertex deletion

    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxOrder) throw std::invalid_argument("Graph: order out of range 0..64");
        rows_.assign(static_cast<std::size_t>(n), 0);
    }

    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        rows_[static_cast<std::size_t>(u)] |= bit(v);
        rows_[static_cast<std::size_t>(v)] |= bit(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (rows_[static_cast<std::size_t>(u)] >> v) & 1;
    }

    std::uint64_t row(int v) const {
        check_vertex(v);
        return rows_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return popcount64(row(v)); }

    std::uint64_t vertex_mask() const { return full_mask(n_); }

    int edge_count() const {
        int total = 0;
        for (std::uint64_t r : rows_) total += popcount64(r);
        return total / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for_each_bit(rows_[static_cast<std::size_t>(u)] & ~full_mask(u + 1),
                         [&](int v) { out.emplace_back(u, v); });
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
    }

    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

enum class BasicKind { Complete, Cycle, Path, Star, Empty };

inline Graph make_basic(BasicKind kind, int n) {
    if (n < 1) throw std::invalid_argument("make_basic: order must be >= 1");
    if (kind == BasicKind::Cycle && n < 3) throw std::invalid_argument("make_basic: cycle needs n >= 3");
    Graph g(n);
    switch (kind) {
        case BasicKind::Complete:
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
            break;
        case BasicKind::Cycle:
            for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
            break;
        case BasicKind::Path:
            for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
            break;
        case BasicKind::Star:
            for (int v = 1; v < n; ++v) g.add_edge(0, v);  // center = vertex 0
            break;
        case BasicKind::Empty:
            break;
    }
    return g;
}

inline Graph disjoint_union(const std::vector<Graph>& gs) {
    long total = 0;
    for (const Graph& g : gs) total += g.order();
    if (total < 1) throw std::invalid_argument("disjoint_union: empty result");
    if (total > kMaxOrder) throw std::invalid_argument("disjoint_union: order exceeds 64");
    Graph out(static_cast<int>(total));
    int offset = 0;
    for (const Graph& g : gs) {
        for (int u = 0; u < g.order(); ++u)
            for_each_bit(g.row(u) & ~full_mask(u + 1),
                         [&](int v) { out.add_edge(offset + u, offset + v); });
        offset += g.order();
    }
    return out;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) { return disjoint_union({a, b}); }

/// Vertex i of the result is the i-th smallest member of s.
inline Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (s.bits & ~g.vertex_mask()) throw std::out_of_range("induced_subgraph: set out of range");
    std::vector<int> verts = s.to_vector();
    Graph out;
    if (!verts.empty()) out = Graph(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

inline Graph delete_vertices(const Graph& g, VertexSet s) {
    if (s.bits & ~g.vertex_mask()) throw std::out_of_range("delete_vertices: set out of range");
    return induced_subgraph(g, VertexSet{g.vertex_mask() & ~s.bits});
}

inline Graph delete_vertex(const Graph& g, int v) { return delete_vertices(g, VertexSet{bit(v)}); }

inline VertexSet neighborhood(const Graph& g, int v, bool closed = false) {
    std::uint64_t m = g.row(v);
    if (closed) m |= bit(v);
    return VertexSet{m};
}

inline std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::uint64_t unseen = g.vertex_mask();
    while (unseen) {
        std::uint64_t comp = bit(lowest_bit(unseen));
        for (;;) {
            std::uint64_t frontier = 0;
            for_each_bit(comp, [&](int v) { frontier |= g.row(v); });
            frontier &= ~comp;
            if (!frontier) break;
            comp |= frontier;
        }
        out.push_back(VertexSet{comp});
        unseen &= ~comp;
    }
    return out;
}

// The order-0 graph is not connected; K1 is.
inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    return components(g).size() == 1;
}

inline bool is_triangle_free(const Graph& g) {
    for (int u = 0; u < g.order(); ++u) {
        std::uint64_t above = g.row(u) & ~full_mask(u + 1);
        bool bad = false;
        for_each_bit(above, [&](int v) {
            if (g.row(v) & above & ~bit(v)) bad = true;
        });
        if (bad) return false;
    }
    return true;
}

inline Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

/// New graph formed by attaching k fresh leaves to vertex v.
inline Graph attach_leaves(const Graph& g, int v, int k) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("attach_leaves: vertex out of range");
    if (g.order() + k > kMaxOrder) throw std::invalid_argument("attach_leaves: order exceeds 64");
    Graph out(g.order() + k);
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    for (int i = 0; i < k; ++i) out.add_edge(v, g.order() + i);
    return out;
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    // perm maps old vertex -> new vertex
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

}  // namespace mismu
