#pragma once

#include <cstdint>
#include <vector>

#include "mismu/graph.hpp"

namespace mismu {

inline bool is_independent(const Graph& g, VertexSet s) {
    bool ok = true;
    for_each_bit(s.bits, [&](int v) {
        if (g.row(v) & s.bits) ok = false;
    });
    return ok;
}

inline bool is_maximal_independent(const Graph& g, VertexSet s) {
    if (!is_independent(g, s)) return false;
    std::uint64_t dominated = s.bits;
    for_each_bit(s.bits, [&](int v) { dominated |= g.row(v); });
    return dominated == g.vertex_mask();
}

namespace detail {

// Maximal independent sets of G are the maximal cliques of its complement;
// the recursion below is the pivoting branch-and-bound over
// (current, candidates, excluded) run on complement rows. The sink returns
// false to abort enumeration early.
template <typename Sink>
bool mis_recurse(const std::uint64_t* crows, std::uint64_t current,
                 std::uint64_t cand, std::uint64_t excl, Sink&& sink) {
    if (!cand && !excl) return sink(current);
    // Pivot: the candidate-or-excluded vertex covering the most candidates
    // (complement neighborhood), ties to the smallest index.
    int pivot = -1, best = -1;
    for_each_bit(cand | excl, [&](int v) {
        int cover = popcount64(crows[v] & cand);
        if (cover > best) {
            best = cover;
            pivot = v;
        }
    });
    std::uint64_t ext = cand & ~crows[pivot];
    bool keep_going = true;
    for_each_bit(ext, [&](int v) {
        if (!keep_going) return;
        if (!mis_recurse(crows, current | bit(v), cand & crows[v], excl & crows[v], sink))
            keep_going = false;
        cand &= ~bit(v);
        excl |= bit(v);
    });
    return keep_going;
}

}  // namespace detail

/// Calls sink(VertexSet) for every maximal independent set, in a fixed
/// deterministic order. Returns false if the sink aborted the stream.
template <typename Sink>
bool for_each_mis(const Graph& g, Sink&& sink) {
    int n = g.order();
    if (n == 0) return sink(VertexSet{});  // the empty set, vacuously maximal
    std::uint64_t crows[kMaxOrder];
    std::uint64_t full = g.vertex_mask();
    for (int v = 0; v < n; ++v) crows[v] = ~g.row(v) & full & ~bit(v);
    return detail::mis_recurse(crows, 0, full, 0,
                               [&](std::uint64_t s) { return sink(VertexSet{s}); });
}

inline std::vector<VertexSet> enumerate_mis(const Graph& g) {
    std::vector<VertexSet> out;
    for_each_mis(g, [&](VertexSet s) {
        out.push_back(s);
        return true;
    });
    return out;
}

// Same recursion as enumeration with the emission replaced by an accumulator.
inline u128 count_mis(const Graph& g) {
    u128 count = 0;
    for_each_mis(g, [&](VertexSet) {
        ++count;
        return true;
    });
    return count;
}

namespace detail {

inline u128 count_is_recurse(const Graph& g, std::uint64_t mask) {
    // Pick the busiest remaining vertex; branch on excluding it vs. taking it.
    int pick = -1, best = 0;
    for_each_bit(mask, [&](int v) {
        int d = popcount64(g.row(v) & mask);
        if (d > best) {
            best = d;
            pick = v;
        }
    });
    if (pick < 0) return u128{1} << popcount64(mask);  // edgeless remainder
    return count_is_recurse(g, mask & ~bit(pick)) +
           count_is_recurse(g, mask & ~(g.row(pick) | bit(pick)));
}

}  // namespace detail

/// i(G): all independent sets including the empty set.
inline u128 count_independent_sets(const Graph& g) {
    return detail::count_is_recurse(g, g.vertex_mask());
}

}  // namespace mismu
