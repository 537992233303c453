#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mismu/canonical.hpp"
#include "mismu/graph.hpp"

namespace mismu {

struct GenFilter {
    bool connected = false;
    bool triangle_free = false;
};

// Internal generation limits; larger universes must come from a graph6
// corpus. Triangle-freeness is hereditary under vertex deletion, so the
// augmentation tree restricted to triangle-free graphs is complete for the
// class and stays small enough to reach higher orders.
constexpr int kGenLimitAll = 9;
constexpr int kGenLimitTriangleFree = 11;

/// Generates one canonically labeled representative per isomorphism class,
/// by augmenting each class of order k-1 with one new vertex and deduping on
/// canonical certificates. Levels are cached, so sweeps over 1..n reuse work.
class GraphGenerator {
public:
    /// All classes of order exactly n satisfying the filter, sorted by
    /// certificate.
    std::vector<Graph> generate(int n, GenFilter filter = {}) {
        if (n < 1) throw std::invalid_argument("generate: order must be >= 1");
        int limit = filter.triangle_free ? kGenLimitTriangleFree : kGenLimitAll;
        if (n > limit)
            throw std::invalid_argument("generate: order " + std::to_string(n) +
                                        " above internal limit " + std::to_string(limit) +
                                        "; use a graph6 corpus");
        const std::vector<Graph>& lvl = level(n, filter.triangle_free);
        if (!filter.connected) return lvl;
        std::vector<Graph> out;
        for (const Graph& g : lvl)
            if (is_connected(g)) out.push_back(g);
        return out;
    }

private:
    const std::vector<Graph>& level(int n, bool triangle_free) {
        auto key = std::make_pair(n, triangle_free);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;

        std::vector<Graph> result;
        if (n == 1) {
            result.push_back(Graph(1));
        } else {
            const std::vector<Graph>& parents = level(n - 1, triangle_free);
            std::unordered_map<std::string, Graph> seen;
            std::uint64_t rows[kMaxOrder];
            for (const Graph& parent : parents) {
                std::uint64_t parent_rows[kMaxOrder];
                for (int v = 0; v < n - 1; ++v) parent_rows[v] = parent.row(v);
                for (std::uint64_t s = 0; s <= full_mask(n - 1); ++s) {
                    if (triangle_free && !subset_independent(parent_rows, s)) continue;
                    for (int v = 0; v < n - 1; ++v)
                        rows[v] = parent_rows[v] | ((s >> v) & 1 ? bit(n - 1) : 0);
                    rows[n - 1] = s;
                    CanonicalForm cf = detail::canonical_form_rows(n, rows);
                    if (seen.find(cf.certificate) == seen.end())
                        seen.emplace(cf.certificate, relabeled(n, rows, cf.relabeling));
                }
            }
            std::vector<std::pair<std::string, Graph>> sorted(seen.begin(), seen.end());
            std::sort(sorted.begin(), sorted.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            result.reserve(sorted.size());
            for (auto& [cert, g] : sorted) result.push_back(std::move(g));
        }
        return cache_.emplace(key, std::move(result)).first->second;
    }

    static bool subset_independent(const std::uint64_t* rows, std::uint64_t s) {
        std::uint64_t m = s;
        while (m) {
            int v = lowest_bit(m);
            m &= m - 1;
            if (rows[v] & s) return false;
        }
        return true;
    }

    static Graph relabeled(int n, const std::uint64_t* rows, const std::vector<int>& perm) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for_each_bit(rows[u] & ~full_mask(u + 1), [&](int v) {
                g.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
            });
        return g;
    }

    std::map<std::pair<int, bool>, std::vector<Graph>> cache_;
};

}  // namespace mismu
