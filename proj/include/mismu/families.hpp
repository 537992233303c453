#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mismu/bounds.hpp"
#include "mismu/canonical.hpp"
#include "mismu/graph.hpp"
#include "mismu/matching.hpp"
#include "mismu/mis.hpp"

namespace mismu {

enum class FamilyId {
    GeneralT1,  // tK3 u rK1
    E_T,
    H_T,
    A5,
    L_T,
    M_T,
    A_N,
    B_N,
    D_N,
    H7,
    T_ODD,
    P_CLASS,
    G_T,
    Q3,
    Q4,
    F_T,
};

/// Family plus its matching-number parameter where one applies (leg count r
/// for T_ODD). Recognizers default the parameter to mu(g).
struct FamilySpec {
    FamilyId id;
    std::optional<int> param;
};

// ---------------------------------------------------------------------------
// constructors

inline Graph make_general_extremal(int t, int r) {
    if (t < 0 || r < 0 || 3 * t + r < 1)
        throw std::invalid_argument("make_general_extremal: need t,r >= 0 and 3t+r >= 1");
    std::vector<Graph> parts;
    for (int i = 0; i < t; ++i) parts.push_back(make_basic(BasicKind::Complete, 3));
    for (int i = 0; i < r; ++i) parts.push_back(Graph(1));
    return disjoint_union(parts);
}

/// Center joined to one vertex of each of t-1 triangles and to ell leaves.
inline Graph make_E(int t, int ell) {
    if (t < 2 || ell < 1) throw std::invalid_argument("make_E: need t >= 2, ell >= 1");
    int n = 3 * (t - 1) + 1 + ell;
    Graph g(n);
    for (int i = 0; i < t - 1; ++i) {
        int a = 1 + 3 * i;
        g.add_edge(a, a + 1);
        g.add_edge(a, a + 2);
        g.add_edge(a + 1, a + 2);
        g.add_edge(0, a);
    }
    for (int i = 0; i < ell; ++i) g.add_edge(0, 3 * (t - 1) + 1 + i);
    return g;
}

/// Center joined to one vertex of each of t-1 triangles, no leaves.
inline Graph make_L(int t) {
    if (t < 2) throw std::invalid_argument("make_L: need t >= 2");
    int n = 3 * (t - 1) + 1;
    Graph g(n);
    for (int i = 0; i < t - 1; ++i) {
        int a = 1 + 3 * i;
        g.add_edge(a, a + 1);
        g.add_edge(a, a + 2);
        g.add_edge(a + 1, a + 2);
        g.add_edge(0, a);
    }
    return g;
}

/// Center joined to every vertex of two disjoint edges.
inline Graph make_A5() {
    return Graph::from_edges(5, {{1, 2}, {3, 4}, {0, 1}, {0, 2}, {0, 3}, {0, 4}});
}

/// Spider with r legs of length two; r = 0 gives K1.
inline Graph make_T(int r) {
    if (r < 0) throw std::invalid_argument("make_T: need r >= 0");
    Graph g(2 * r + 1);
    for (int i = 0; i < r; ++i) {
        g.add_edge(0, 1 + 2 * i);
        g.add_edge(1 + 2 * i, 2 + 2 * i);
    }
    return g;
}

/// 5-cycle 0..4 plus the path 0-5-6 hanging off it. The fixed edge list is
/// validated against mis = 8 and mu = 3 once per process.
inline Graph make_H7() {
    static const Graph h7 = [] {
        Graph g = Graph::from_edges(
            7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}});
        if (count_mis(g) != 8 || matching_number(g) != 3)
            throw std::logic_error("make_H7: fixed edge list failed its invariants");
        return g;
    }();
    return h7;
}

/// M_t: t/2 C5 u rK1 for even t; K_{1,ell} u (t-1)/2 C5 u sK1 for odd t.
inline Graph make_M(int t, int ell, int s_or_r) {
    if (t < 1) throw std::invalid_argument("make_M: need t >= 1");
    std::vector<Graph> parts;
    int cycles;
    if (t % 2 == 0) {
        if (s_or_r < 0) throw std::invalid_argument("make_M: need r >= 0");
        cycles = t / 2;
    } else {
        if (ell < 1 || s_or_r < 0) throw std::invalid_argument("make_M: need ell >= 1, s >= 0");
        parts.push_back(make_basic(BasicKind::Star, ell + 1));
        cycles = (t - 1) / 2;
    }
    for (int i = 0; i < cycles; ++i) parts.push_back(make_basic(BasicKind::Cycle, 5));
    for (int i = 0; i < s_or_r; ++i) parts.push_back(Graph(1));
    return disjoint_union(parts);
}

inline Graph make_An(int n) {
    if (n < 2 || (n % 2 == 1 && n < 5)) throw std::invalid_argument("make_An: need even n >= 2 or odd n >= 5");
    std::vector<Graph> parts;
    int pairs = n / 2;
    if (n % 2 == 1) {
        parts.push_back(make_basic(BasicKind::Cycle, 5));
        pairs = (n - 5) / 2;
    }
    for (int i = 0; i < pairs; ++i) parts.push_back(make_basic(BasicKind::Complete, 2));
    return disjoint_union(parts);
}

inline Graph make_Bn(int n) {
    if (n < 10 || n % 2 == 1) throw std::invalid_argument("make_Bn: need even n >= 10");
    std::vector<Graph> parts{make_basic(BasicKind::Cycle, 5), make_basic(BasicKind::Cycle, 5)};
    for (int i = 0; i < (n - 10) / 2; ++i) parts.push_back(make_basic(BasicKind::Complete, 2));
    return disjoint_union(parts);
}

enum class DnVariant { H7, Spider };

inline Graph make_Dn(int n, DnVariant variant, int r = 0) {
    if (n % 2 == 0) throw std::invalid_argument("make_Dn: need odd n");
    std::vector<Graph> parts;
    int pairs;
    if (variant == DnVariant::H7) {
        if (n < 7) throw std::invalid_argument("make_Dn: H7 variant needs n >= 7");
        parts.push_back(make_H7());
        pairs = (n - 7) / 2;
    } else {
        if (r < 0 || 2 * r + 1 > n) throw std::invalid_argument("make_Dn: need 0 <= r <= (n-1)/2");
        parts.push_back(make_T(r));
        pairs = (n - 2 * r - 1) / 2;
    }
    for (int i = 0; i < pairs; ++i) parts.push_back(make_basic(BasicKind::Complete, 2));
    return disjoint_union(parts);
}

/// Nonadjacent u, v with l1 leaves on u, l2 on v, and l3 common degree-2
/// neighbors. All three classes must be nonempty.
inline Graph make_P(int l1, int l2, int l3) {
    if (l1 < 1 || l2 < 1 || l3 < 1) throw std::invalid_argument("make_P: need l1,l2,l3 >= 1");
    Graph g(2 + l1 + l2 + l3);
    int at = 2;
    for (int i = 0; i < l1; ++i) g.add_edge(0, at++);
    for (int i = 0; i < l2; ++i) g.add_edge(1, at++);
    for (int i = 0; i < l3; ++i) {
        g.add_edge(0, at);
        g.add_edge(1, at);
        ++at;
    }
    return g;
}

namespace detail {

// appends a C5 whose first vertex is joined to hook
inline void append_c5(Graph& g, int hook, int at) {
    g.add_edge(at, at + 1);
    g.add_edge(at + 1, at + 2);
    g.add_edge(at + 2, at + 3);
    g.add_edge(at + 3, at + 4);
    g.add_edge(at + 4, at);
    g.add_edge(hook, at);
}

inline Graph grow(const Graph& base, int extra) {
    Graph g(base.order() + extra);
    for (auto [u, v] : base.edges()) g.add_edge(u, v);
    return g;
}

}  // namespace detail

/// Odd t: star K_{1,r} whose center also hooks (t-1)/2 disjoint C5s.
inline Graph make_G_odd(int t, int r) {
    if (t < 1 || t % 2 == 0 || r < 1) throw std::invalid_argument("make_G_odd: need odd t >= 1, r >= 1");
    int k = (t - 1) / 2;
    Graph g(1 + r + 5 * k);
    for (int i = 0; i < r; ++i) g.add_edge(0, 1 + i);
    for (int i = 0; i < k; ++i) detail::append_c5(g, 0, 1 + r + 5 * i);
    return g;
}

/// Even t >= 4: a P-class core whose u-side also hooks (t-2)/2 disjoint C5s.
inline Graph make_G_even(int t, int l1, int l2, int l3) {
    if (t < 4 || t % 2 == 1) throw std::invalid_argument("make_G_even: need even t >= 4");
    int k = (t - 2) / 2;
    Graph p = make_P(l1, l2, l3);
    Graph g = detail::grow(p, 5 * k);
    for (int i = 0; i < k; ++i) detail::append_c5(g, 0, p.order() + 5 * i);
    return g;
}

// ---------------------------------------------------------------------------
// recognizer building blocks

namespace detail {

inline std::uint64_t leaf_mask(const Graph& g) {
    std::uint64_t m = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) m |= bit(v);
    return m;
}

inline std::uint64_t supported_mask(const Graph& g) {
    std::uint64_t leaves = leaf_mask(g), m = 0;
    for (int v = 0; v < g.order(); ++v)
        if (!(leaves & bit(v)) && (g.row(v) & leaves)) m |= bit(v);
    return m;
}

inline bool comp_is_triangle(const Graph& g, VertexSet c) {
    return c.count() == 3 && induced_subgraph(g, c).edge_count() == 3;
}

inline bool comp_is_c5(const Graph& g, VertexSet c) {
    if (c.count() != 5) return false;
    Graph h = induced_subgraph(g, c);
    if (h.edge_count() != 5) return false;
    for (int v = 0; v < 5; ++v)
        if (h.degree(v) != 2) return false;
    return true;
}

// K_{1,ell} with ell >= 1; K2 counts as a star
inline bool comp_is_star(const Graph& g, VertexSet c) {
    int sz = c.count();
    if (sz < 2) return false;
    Graph h = induced_subgraph(g, c);
    if (h.edge_count() != sz - 1) return false;
    int max_deg = 0;
    for (int v = 0; v < sz; ++v) max_deg = std::max(max_deg, h.degree(v));
    return max_deg == sz - 1;
}

inline bool comp_is_k2(const Graph& g, VertexSet c) {
    return c.count() == 2 && induced_subgraph(g, c).edge_count() == 1;
}

inline const std::string& cert_A5() {
    static const std::string c = certificate(make_A5());
    return c;
}
inline const std::string& cert_H7() {
    static const std::string c = certificate(make_H7());
    return c;
}
inline const std::string& cert_C5() {
    static const std::string c = certificate(make_basic(BasicKind::Cycle, 5));
    return c;
}
inline const std::string& cert_K5() {
    static const std::string c = certificate(make_basic(BasicKind::Complete, 5));
    return c;
}
inline const std::string& cert_K3() {
    static const std::string c = certificate(make_basic(BasicKind::Complete, 3));
    return c;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// structural recognizers

inline bool recognize_general_t1(const Graph& g, std::optional<int> t = {}) {
    int triangles = 0;
    for (VertexSet c : components(g)) {
        if (detail::comp_is_triangle(g, c))
            ++triangles;
        else if (c.count() != 1)
            return false;
    }
    return !t || *t == triangles;
}

inline bool recognize_E(const Graph& g, std::optional<int> t = {}) {
    if (g.order() < 5 || !is_connected(g)) return false;
    // the center is the only vertex carrying leaves
    std::uint64_t candidates = detail::supported_mask(g);
    for (int c = 0; c < g.order(); ++c) {
        if (!(candidates & bit(c))) continue;
        Graph rest = delete_vertex(g, c);
        // component indices in `rest` map back by skipping c
        auto to_g = [&](int v) { return v < c ? v : v + 1; };
        int triangles = 0, leaves = 0;
        bool ok = true;
        for (VertexSet comp : components(rest)) {
            if (detail::comp_is_triangle(rest, comp)) {
                int hooked = 0;
                for_each_bit(comp.bits, [&](int v) {
                    if (g.has_edge(c, to_g(v))) ++hooked;
                });
                if (hooked != 1) { ok = false; break; }
                ++triangles;
            } else if (comp.count() == 1) {
                ++leaves;
            } else {
                ok = false;
                break;
            }
        }
        if (ok && triangles >= 1 && leaves >= 1 && (!t || *t == triangles + 1)) return true;
    }
    return false;
}

inline bool recognize_L(const Graph& g, std::optional<int> t = {}) {
    if (g.order() < 4 || !is_connected(g)) return false;
    for (int c = 0; c < g.order(); ++c) {
        if (g.degree(c) * 3 + 1 != g.order()) continue;
        Graph rest = delete_vertex(g, c);
        auto to_g = [&](int v) { return v < c ? v : v + 1; };
        int triangles = 0;
        bool ok = true;
        for (VertexSet comp : components(rest)) {
            if (!detail::comp_is_triangle(rest, comp)) { ok = false; break; }
            int hooked = 0;
            for_each_bit(comp.bits, [&](int v) {
                if (g.has_edge(c, to_g(v))) ++hooked;
            });
            if (hooked != 1) { ok = false; break; }
            ++triangles;
        }
        if (ok && triangles >= 1 && (!t || *t == triangles + 1)) return true;
    }
    return false;
}

inline bool recognize_A5(const Graph& g) {
    return g.order() == 5 && certificate(g) == detail::cert_A5();
}

inline bool recognize_H7(const Graph& g) {
    return g.order() == 7 && certificate(g) == detail::cert_H7();
}

inline bool recognize_T(const Graph& g, std::optional<int> r = {}) {
    int n = g.order();
    if (n % 2 == 0) return false;
    if (n == 1) return !r || *r == 0;
    if (r && 2 * *r + 1 != n) return false;
    for (int c = 0; c < n; ++c) {
        if (2 * g.degree(c) + 1 != n) continue;
        Graph rest = delete_vertex(g, c);
        auto to_g = [&](int v) { return v < c ? v : v + 1; };
        bool ok = true;
        for (VertexSet comp : components(rest)) {
            if (!detail::comp_is_k2(rest, comp)) { ok = false; break; }
            int hooked = 0;
            for_each_bit(comp.bits, [&](int v) {
                if (g.has_edge(c, to_g(v))) ++hooked;
            });
            if (hooked != 1) { ok = false; break; }
        }
        if (ok) return true;
    }
    return false;
}

inline bool recognize_M(const Graph& g, std::optional<int> t = {}) {
    int cycles = 0, stars = 0;
    for (VertexSet c : components(g)) {
        if (detail::comp_is_c5(g, c))
            ++cycles;
        else if (detail::comp_is_star(g, c))
            ++stars;
        else if (c.count() != 1)
            return false;
    }
    if (stars > 1) return false;
    int found_t = 2 * cycles + stars;
    if (found_t < 1) return false;
    return !t || *t == found_t;
}

inline bool recognize_An(const Graph& g) {
    int n = g.order();
    int cycles = 0, pairs = 0;
    for (VertexSet c : components(g)) {
        if (detail::comp_is_k2(g, c))
            ++pairs;
        else if (detail::comp_is_c5(g, c))
            ++cycles;
        else
            return false;
    }
    return n % 2 == 0 ? cycles == 0 : cycles == 1;
}

inline bool recognize_Bn(const Graph& g) {
    if (g.order() % 2 == 1 || g.order() < 10) return false;
    int cycles = 0;
    for (VertexSet c : components(g)) {
        if (detail::comp_is_c5(g, c))
            ++cycles;
        else if (!detail::comp_is_k2(g, c))
            return false;
    }
    return cycles == 2;
}

inline bool recognize_Dn(const Graph& g) {
    if (g.order() % 2 == 0) return false;
    std::optional<VertexSet> odd_comp;
    for (VertexSet c : components(g)) {
        if (detail::comp_is_k2(g, c)) continue;
        if (odd_comp) return false;
        odd_comp = c;
    }
    if (!odd_comp) return false;
    Graph x = induced_subgraph(g, *odd_comp);
    return recognize_H7(x) || recognize_T(x);
}

inline bool recognize_P(const Graph& g) {
    int n = g.order();
    if (n < 5 || !is_connected(g)) return false;
    // u and v are exactly the supported vertices
    std::uint64_t sup = detail::supported_mask(g);
    if (popcount64(sup) != 2) return false;
    for (int u = 0; u < n; ++u) {
        if (!(sup & bit(u))) continue;
        for (int v = 0; v < n; ++v) {
            if (u == v || !(sup & bit(v)) || g.has_edge(u, v)) continue;
            int l1 = 0, l2 = 0, l3 = 0;
            bool ok = true;
            for (int x = 0; x < n && ok; ++x) {
                if (x == u || x == v) continue;
                std::uint64_t nb = g.row(x);
                if (nb == bit(u))
                    ++l1;
                else if (nb == bit(v))
                    ++l2;
                else if (nb == (bit(u) | bit(v)))
                    ++l3;
                else
                    ok = false;
            }
            if (ok && l1 >= 1 && l2 >= 1 && l3 >= 1) return true;
        }
    }
    return false;
}

inline bool recognize_G(const Graph& g, std::optional<int> t = {}) {
    int n = g.order();
    if (!is_connected(g)) return false;
    std::uint64_t sup = detail::supported_mask(g);
    // odd shape: center w with leaves plus hooked C5s; w is the only
    // supported vertex, except in K_{1,1} where both ends are leaves
    if (!t || *t % 2 == 1) {
        if ((!t || *t == 1) && n == 2 && g.edge_count() == 1) return true;
        for (int w = 0; w < n; ++w) {
            if (!(sup & bit(w))) continue;
            Graph rest = delete_vertex(g, w);
            auto to_g = [&](int v) { return v < w ? v : v + 1; };
            int cycles = 0, leaves = 0;
            bool ok = true;
            for (VertexSet comp : components(rest)) {
                if (comp.count() == 1) {
                    ++leaves;
                } else if (detail::comp_is_c5(rest, comp)) {
                    int hooked = 0;
                    for_each_bit(comp.bits, [&](int v) {
                        if (g.has_edge(w, to_g(v))) ++hooked;
                    });
                    if (hooked != 1) { ok = false; break; }
                    ++cycles;
                } else {
                    ok = false;
                    break;
                }
            }
            if (ok && leaves >= 1 && (!t || *t == 2 * cycles + 1)) return true;
        }
    }
    // even shape: P-class core on (u, v) with C5s hooked to u; u and v are
    // exactly the supported vertices
    if ((!t || (*t % 2 == 0 && *t >= 4)) && n >= 10 && popcount64(sup) == 2) {
        for (int u = 0; u < n; ++u) {
            if (!(sup & bit(u))) continue;
            for (int v = 0; v < n; ++v) {
                if (u == v || !(sup & bit(v)) || g.has_edge(u, v)) continue;
                Graph rest = delete_vertices(g, VertexSet::of({u, v}));
                auto to_g = [&](int x) {
                    int y = x;
                    if (y >= std::min(u, v)) ++y;
                    if (y >= std::max(u, v)) ++y;
                    return y;
                };
                int l1 = 0, l2 = 0, l3 = 0, cycles = 0;
                bool ok = true;
                for (VertexSet comp : components(rest)) {
                    if (comp.count() == 1) {
                        int x = to_g(lowest_bit(comp.bits));
                        std::uint64_t nb = g.row(x);
                        if (nb == bit(u))
                            ++l1;
                        else if (nb == bit(v))
                            ++l2;
                        else if (nb == (bit(u) | bit(v)))
                            ++l3;
                        else
                            ok = false;
                    } else if (detail::comp_is_c5(rest, comp)) {
                        int hooked_u = 0, hooked_v = 0;
                        for_each_bit(comp.bits, [&](int x) {
                            if (g.has_edge(u, to_g(x))) ++hooked_u;
                            if (g.has_edge(v, to_g(x))) ++hooked_v;
                        });
                        if (hooked_u != 1 || hooked_v != 0) { ok = false; break; }
                        ++cycles;
                    } else {
                        ok = false;
                    }
                    if (!ok) break;
                }
                if (ok && l1 >= 1 && l2 >= 1 && l3 >= 1 && cycles >= 1 &&
                    (!t || *t == 2 * cycles + 2))
                    return true;
            }
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Q3/Q4: generate-and-test families

constexpr int kFamilyEnumLimit = 14;

std::vector<Graph> enumerate_family(FamilySpec spec, int n);

namespace detail {

// Attachment candidates for the new star center: subsets of the neighbors of
// the base's supported vertices, leaving every supported vertex at least one
// private leaf. Twin vertices (equal neighborhoods) are interchangeable, so
// only per-class counts are enumerated.
inline std::vector<std::uint64_t> attach_sets(const Graph& h) {
    std::uint64_t leaves = leaf_mask(h), supported = supported_mask(h);
    if (!supported) return {};
    std::uint64_t cand = 0;
    for_each_bit(supported, [&](int x) { cand |= h.row(x); });

    std::map<std::uint64_t, std::uint64_t> classes;  // neighborhood -> members
    for_each_bit(cand, [&](int y) { classes[h.row(y)] |= bit(y); });

    std::vector<std::uint64_t> comp_masks;
    for (VertexSet c : components(h)) comp_masks.push_back(c.bits);

    struct Cls {
        std::uint64_t members;
        int limit;
    };
    std::vector<Cls> cls;
    for (auto& [nbhd, members] : classes) {
        int size = popcount64(members);
        int limit = size;
        // a class of leaves hung on one supported vertex must not be taken whole
        if (popcount64(nbhd) == 1 && (supported & nbhd) && (members & leaves) == members)
            limit = size - 1;
        cls.push_back({members, limit});
    }

    std::vector<std::uint64_t> out;
    std::vector<std::uint64_t> chosen(cls.size(), 0);
    auto emit = [&]() {
        std::uint64_t a = 0;
        for (std::uint64_t c : chosen) a |= c;
        if (!a) return;
        for (std::uint64_t cm : comp_masks)
            if (!(a & cm)) return;  // star would stay disconnected from cm
        bool indep = true;
        for_each_bit(a, [&](int y) {
            if (h.row(y) & a) indep = false;
        });
        if (indep) out.push_back(a);
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == cls.size()) {
            emit();
            return;
        }
        std::uint64_t members = cls[i].members;
        std::uint64_t taken = 0;
        for (int k = 0; k <= cls[i].limit; ++k) {
            chosen[i] = taken;
            self(self, i + 1);
            if (k < cls[i].limit) {
                std::uint64_t rest = members & ~taken;
                taken |= bit(lowest_bit(rest));
            }
        }
    };
    rec(rec, 0);
    return out;
}

inline Graph star_extension(const Graph& base, int star_size, std::uint64_t attach) {
    int b = base.order();
    Graph g(b + 1 + star_size);
    for (auto [u, v] : base.edges()) g.add_edge(u, v);
    for (int i = 0; i < star_size; ++i) g.add_edge(b, b + 1 + i);
    for_each_bit(attach, [&](int y) { g.add_edge(b, y); });
    return g;
}

inline std::vector<Graph> p_class_members(int n) {
    std::vector<Graph> out;
    for (int l1 = 1; l1 + 2 <= n - 2; ++l1)
        for (int l2 = 1; l1 + l2 + 1 <= n - 2; ++l2) {
            int l3 = n - 2 - l1 - l2;
            if (l3 >= 1) out.push_back(make_P(l1, l2, l3));
        }
    return out;
}

inline std::vector<Graph> star_unions(int n, int count) {
    // disjoint unions of `count` stars K_{1,r_i}, every r_i >= 2
    std::vector<Graph> out;
    std::vector<int> sizes(static_cast<std::size_t>(count), 0);
    auto rec = [&](auto&& self, int i, int remaining, int min_r) -> void {
        if (i == count) {
            if (remaining != 0) return;
            std::vector<Graph> parts;
            for (int r : sizes) parts.push_back(make_basic(BasicKind::Star, r + 1));
            out.push_back(disjoint_union(parts));
            return;
        }
        for (int r = min_r; (r + 1) * (count - i) <= remaining; ++r) {
            sizes[static_cast<std::size_t>(i)] = r;
            self(self, i + 1, remaining - (r + 1), r);
        }
    };
    rec(rec, 0, n, 2);
    return out;
}

// Permissively extend every admissible base with a new pendant star, then
// keep exactly the graphs meeting the target matching number and mis count.
// The exhaustive sweeps in the verify module arbitrate that nothing is lost.
inline std::vector<Graph> q_members(int which, int n) {
    std::vector<Graph> out;
    std::set<std::string> seen;
    int target_mu = which;
    u128 target_mis = connected_trianglefree_bound_f(which).value;
    for (int base_order = 4; base_order <= n - 2; ++base_order) {
        int star_size = n - base_order - 1;
        std::vector<Graph> bases;
        if (which == 3) {
            for (Graph& p : p_class_members(base_order)) bases.push_back(std::move(p));
            for (Graph& s : star_unions(base_order, 2)) bases.push_back(std::move(s));
        } else {
            for (Graph& q : enumerate_family({FamilyId::Q3, {}}, base_order))
                bases.push_back(std::move(q));
            for (int p_order = 5; p_order + 3 <= base_order; ++p_order) {
                int r = base_order - p_order - 1;
                if (r < 2) continue;
                for (Graph& p : p_class_members(p_order))
                    bases.push_back(disjoint_union(p, make_basic(BasicKind::Star, r + 1)));
            }
            for (Graph& s : star_unions(base_order, 3)) bases.push_back(std::move(s));
        }
        for (const Graph& base : bases) {
            for (std::uint64_t attach : attach_sets(base)) {
                Graph g = star_extension(base, star_size, attach);
                if (!is_connected(g) || !is_triangle_free(g)) continue;
                if (matching_number(g) != target_mu) continue;
                if (count_mis(g) != target_mis) continue;
                CanonicalForm cf = canonical_form(g);
                if (seen.insert(cf.certificate).second)
                    out.push_back(relabel(g, cf.relabeling));
            }
        }
    }
    return out;
}

inline const std::set<std::string>& q_cert_cache(int which, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::set<std::string>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(which, n);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::set<std::string> certs;
        for (const Graph& g : q_members(which, n)) certs.insert(certificate(g));
        it = cache.emplace(key, std::move(certs)).first;
    }
    return it->second;
}

}  // namespace detail

inline bool recognize_Q3(const Graph& g) {
    if (g.order() > kFamilyEnumLimit)
        throw std::invalid_argument("recognize_Q3: order above generate-and-test limit");
    return detail::q_cert_cache(3, g.order()).count(certificate(g)) > 0;
}

inline bool recognize_Q4(const Graph& g) {
    if (g.order() > kFamilyEnumLimit)
        throw std::invalid_argument("recognize_Q4: order above generate-and-test limit");
    return detail::q_cert_cache(4, g.order()).count(certificate(g)) > 0;
}

inline Graph make_Q3(const Graph& base, int star_size, VertexSet attach) {
    bool base_ok = recognize_P(base);
    if (!base_ok) {
        auto comps = components(base);
        base_ok = comps.size() == 2 && detail::comp_is_star(base, comps[0]) &&
                  detail::comp_is_star(base, comps[1]) && detail::leaf_mask(base) != 0 &&
                  popcount64(detail::supported_mask(base)) == 2;
    }
    if (!base_ok) throw std::invalid_argument("make_Q3: base outside P u {two stars}");
    if (star_size < 1) throw std::invalid_argument("make_Q3: star size must be >= 1");
    std::uint64_t supported = detail::supported_mask(base), leaves = detail::leaf_mask(base);
    std::uint64_t cand = 0;
    for_each_bit(supported, [&](int x) { cand |= base.row(x); });
    if (attach.bits & ~cand)
        throw std::invalid_argument("make_Q3: attach outside supported neighborhoods");
    bool still_supported = true;
    for_each_bit(supported, [&](int x) {
        if (!(base.row(x) & leaves & ~attach.bits)) still_supported = false;
    });
    if (!still_supported)
        throw std::invalid_argument("make_Q3: attach leaves a supported vertex unsupported");
    Graph g = detail::star_extension(base, star_size, attach.bits);
    if (!is_connected(g)) throw std::invalid_argument("make_Q3: result disconnected");
    if (!is_triangle_free(g) || matching_number(g) != 3 || count_mis(g) != 8)
        throw std::invalid_argument("make_Q3: result violates the family invariants");
    return g;
}

inline Graph make_Q4(const Graph& base, int star_size, VertexSet attach) {
    bool base_ok = base.order() <= kFamilyEnumLimit && recognize_Q3(base);
    if (!base_ok) {
        auto comps = components(base);
        if (comps.size() == 2) {
            for (int i = 0; i < 2 && !base_ok; ++i) {
                VertexSet star = comps[static_cast<std::size_t>(i)], other = comps[static_cast<std::size_t>(1 - i)];
                base_ok = detail::comp_is_star(base, star) && star.count() >= 3 &&
                          recognize_P(induced_subgraph(base, other));
            }
        } else if (comps.size() == 3) {
            base_ok = true;
            for (VertexSet c : comps)
                if (!detail::comp_is_star(base, c) || c.count() < 3) base_ok = false;
        }
    }
    if (!base_ok) throw std::invalid_argument("make_Q4: base outside the allowed set");
    if (star_size < 1) throw std::invalid_argument("make_Q4: star size must be >= 1");
    std::uint64_t supported = detail::supported_mask(base), leaves = detail::leaf_mask(base);
    std::uint64_t cand = 0;
    for_each_bit(supported, [&](int x) { cand |= base.row(x); });
    if (attach.bits & ~cand)
        throw std::invalid_argument("make_Q4: attach outside supported neighborhoods");
    bool still_supported = true;
    for_each_bit(supported, [&](int x) {
        if (!(base.row(x) & leaves & ~attach.bits)) still_supported = false;
    });
    if (!still_supported)
        throw std::invalid_argument("make_Q4: attach leaves a supported vertex unsupported");
    Graph g = detail::star_extension(base, star_size, attach.bits);
    if (!is_connected(g)) throw std::invalid_argument("make_Q4: result disconnected");
    if (!is_triangle_free(g) || matching_number(g) != 4 || count_mis(g) != 16)
        throw std::invalid_argument("make_Q4: result violates the family invariants");
    return g;
}

inline bool recognize_F(const Graph& g, std::optional<int> t = {});

inline bool recognize_H(const Graph& g, std::optional<int> t = {}) {
    int tt = t ? *t : matching_number(g);
    if (tt == 1) return g.order() == 3 && certificate(g) == detail::cert_K3();
    if (tt == 2) {
        if (g.order() == 5) {
            const std::string c = certificate(g);
            if (c == detail::cert_A5() || c == detail::cert_C5() || c == detail::cert_K5()) return true;
        }
        return recognize_E(g, 2);
    }
    return tt >= 3 && recognize_E(g, tt);
}

inline bool recognize_F(const Graph& g, std::optional<int> t) {
    int tt = t ? *t : matching_number(g);
    switch (tt) {
        case 1:
            return g.order() >= 2 && detail::comp_is_star(g, VertexSet{g.vertex_mask()}) &&
                   is_connected(g);
        case 2:
            return g.order() == 5 && certificate(g) == detail::cert_C5();
        case 3:
            return recognize_G(g, 3) || recognize_Q3(g);
        case 4:
            return recognize_G(g, 4) || recognize_Q4(g);
        default:
            return tt >= 5 && recognize_G(g, tt);
    }
}

inline bool recognize(const Graph& g, FamilySpec spec) {
    switch (spec.id) {
        case FamilyId::GeneralT1: return recognize_general_t1(g, spec.param);
        case FamilyId::E_T: return recognize_E(g, spec.param);
        case FamilyId::H_T: return recognize_H(g, spec.param);
        case FamilyId::A5: return recognize_A5(g);
        case FamilyId::L_T: return recognize_L(g, spec.param);
        case FamilyId::M_T: return recognize_M(g, spec.param);
        case FamilyId::A_N: return recognize_An(g);
        case FamilyId::B_N: return recognize_Bn(g);
        case FamilyId::D_N: return recognize_Dn(g);
        case FamilyId::H7: return recognize_H7(g);
        case FamilyId::T_ODD: return recognize_T(g, spec.param);
        case FamilyId::P_CLASS: return recognize_P(g);
        case FamilyId::G_T: return recognize_G(g, spec.param);
        case FamilyId::Q3: return recognize_Q3(g);
        case FamilyId::Q4: return recognize_Q4(g);
        case FamilyId::F_T: return recognize_F(g, spec.param);
    }
    return false;
}

// ---------------------------------------------------------------------------
// per-order family enumeration

namespace detail {

inline void push_unique(std::vector<Graph>& out, std::set<std::string>& seen, const Graph& g) {
    CanonicalForm cf = canonical_form(g);
    if (seen.insert(cf.certificate).second) out.push_back(relabel(g, cf.relabeling));
}

}  // namespace detail

/// One canonical representative per isomorphism class of family members of
/// order exactly n, sorted by certificate.
inline std::vector<Graph> enumerate_family(FamilySpec spec, int n) {
    if ((spec.id == FamilyId::Q3 || spec.id == FamilyId::Q4) && n > kFamilyEnumLimit)
        throw std::invalid_argument("enumerate_family: order above generate-and-test limit");
    std::vector<Graph> out;
    std::set<std::string> seen;
    auto add = [&](const Graph& g) { detail::push_unique(out, seen, g); };
    auto want = [&](int t) { return !spec.param || *spec.param == t; };

    switch (spec.id) {
        case FamilyId::GeneralT1:
            for (int t = 0; 3 * t <= n; ++t)
                if (want(t)) add(make_general_extremal(t, n - 3 * t));
            break;
        case FamilyId::E_T:
            for (int t = 2; 3 * (t - 1) + 2 <= n; ++t)
                if (want(t)) add(make_E(t, n - 3 * (t - 1) - 1));
            break;
        case FamilyId::H_T: {
            if (want(1) && n == 3) add(make_basic(BasicKind::Complete, 3));
            if (want(2) && n == 5) {
                add(make_A5());
                add(make_basic(BasicKind::Cycle, 5));
                add(make_basic(BasicKind::Complete, 5));
            }
            for (int t = 2; 3 * (t - 1) + 2 <= n; ++t)
                if (want(t)) add(make_E(t, n - 3 * (t - 1) - 1));
            break;
        }
        case FamilyId::A5:
            if (n == 5) add(make_A5());
            break;
        case FamilyId::L_T:
            if (n >= 4 && (n - 1) % 3 == 0 && want((n - 1) / 3 + 1)) add(make_L((n - 1) / 3 + 1));
            break;
        case FamilyId::M_T:
            for (int t = 1; t <= n; ++t) {
                if (!want(t)) continue;
                if (t % 2 == 0) {
                    if (n >= 5 * t / 2) add(make_M(t, 0, n - 5 * t / 2));
                } else {
                    int fixed = 1 + 5 * (t - 1) / 2;
                    for (int ell = 1; fixed + ell <= n; ++ell)
                        add(make_M(t, ell, n - fixed - ell));
                }
            }
            break;
        case FamilyId::A_N:
            if (n % 2 == 0 ? n >= 2 : n >= 5) add(make_An(n));
            break;
        case FamilyId::B_N:
            if (n % 2 == 0 && n >= 10) add(make_Bn(n));
            break;
        case FamilyId::D_N:
            if (n % 2 == 1) {
                if (n >= 7) add(make_Dn(n, DnVariant::H7));
                for (int r = 0; 2 * r + 1 <= n; ++r) add(make_Dn(n, DnVariant::Spider, r));
            }
            break;
        case FamilyId::H7:
            if (n == 7) add(make_H7());
            break;
        case FamilyId::T_ODD:
            if (n % 2 == 1 && want((n - 1) / 2)) add(make_T((n - 1) / 2));
            break;
        case FamilyId::P_CLASS:
            for (Graph& g : detail::p_class_members(n)) add(g);
            break;
        case FamilyId::G_T:
            for (int t = 1; t <= n; ++t) {
                if (!want(t)) continue;
                if (t % 2 == 1) {
                    int r = n - 1 - 5 * (t - 1) / 2;
                    if (r >= 1) add(make_G_odd(t, r));
                } else if (t >= 4) {
                    int rest = n - 5 * (t - 2) / 2;
                    for (int l1 = 1; l1 <= rest - 4; ++l1)
                        for (int l2 = 1; l1 + l2 <= rest - 3; ++l2)
                            add(make_G_even(t, l1, l2, rest - 2 - l1 - l2));
                }
            }
            break;
        case FamilyId::Q3:
            for (Graph& g : detail::q_members(3, n)) add(g);
            break;
        case FamilyId::Q4:
            for (Graph& g : detail::q_members(4, n)) add(g);
            break;
        case FamilyId::F_T:
            if (n > kFamilyEnumLimit && (want(3) || want(4)))
                throw std::invalid_argument(
                    "enumerate_family: F_t at t in {3,4} needs order <= 14");
            for (int t = 1; t <= n; ++t) {
                if (!want(t)) continue;
                if (t == 1) {
                    if (n >= 2) add(make_basic(BasicKind::Star, n));
                } else if (t == 2) {
                    if (n == 5) add(make_basic(BasicKind::Cycle, 5));
                } else {
                    for (Graph& g : enumerate_family({FamilyId::G_T, t}, n)) add(g);
                    if (t == 3)
                        for (Graph& g : enumerate_family({FamilyId::Q3, {}}, n)) add(g);
                    if (t == 4)
                        for (Graph& g : enumerate_family({FamilyId::Q4, {}}, n)) add(g);
                }
            }
            break;
    }
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
        return certificate(a) < certificate(b);
    });
    return out;
}

}  // namespace mismu
