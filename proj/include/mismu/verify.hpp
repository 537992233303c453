#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "mismu/bounds.hpp"
#include "mismu/families.hpp"
#include "mismu/generate.hpp"
#include "mismu/graph6.hpp"
#include "mismu/matching.hpp"
#include "mismu/mis.hpp"

namespace mismu {

enum class TheoremId {
    THM1,
    THM2,
    THM3,
    THM4,
    LEM21_STRICT,
    LEM31,
    LEM32,
    LEM33,
    THMB_PROPS,
    THMD,
    THME_ODD,
    MOON_MOSER,
    THMC,
};

inline const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::THM1: return "THM1";
        case TheoremId::THM2: return "THM2";
        case TheoremId::THM3: return "THM3";
        case TheoremId::THM4: return "THM4";
        case TheoremId::LEM21_STRICT: return "LEM21_STRICT";
        case TheoremId::LEM31: return "LEM31";
        case TheoremId::LEM32: return "LEM32";
        case TheoremId::LEM33: return "LEM33";
        case TheoremId::THMB_PROPS: return "THMB_PROPS";
        case TheoremId::THMD: return "THMD";
        case TheoremId::THME_ODD: return "THME_ODD";
        case TheoremId::MOON_MOSER: return "MOON_MOSER";
        case TheoremId::THMC: return "THMC";
    }
    return "?";
}

inline std::optional<TheoremId> theorem_from_string(const std::string& s) {
    for (TheoremId id :
         {TheoremId::THM1, TheoremId::THM2, TheoremId::THM3, TheoremId::THM4,
          TheoremId::LEM21_STRICT, TheoremId::LEM31, TheoremId::LEM32, TheoremId::LEM33,
          TheoremId::THMB_PROPS, TheoremId::THMD, TheoremId::THME_ODD, TheoremId::MOON_MOSER,
          TheoremId::THMC})
        if (s == theorem_name(id)) return id;
    return std::nullopt;
}

struct Violation {
    std::string graph6;
    int mu = 0;
    u128 mis = 0;
    u128 bound = 0;
    std::string note;  // property name for lemma/structure suites
};

struct EqualityMismatch {
    std::string graph6;
    std::string direction;  // achieves-but-unrecognized | recognized-but-below
};

struct VerificationReport {
    TheoremId theorem = TheoremId::THM1;
    int max_order = 0;
    std::string filter_desc;
    std::string source;
    long graphs_checked = 0;
    std::map<int, long> checked_by_order;
    long hypothesis_flagged = 0;
    long excluded = 0;
    std::vector<Violation> violations;
    std::vector<std::string> equality_graphs;
    std::vector<EqualityMismatch> equality_mismatches;
    double wall_ms = 0.0;

    bool ok() const { return violations.empty() && equality_mismatches.empty(); }
};

/// Materialized single-pass universe plus its provenance.
struct Universe {
    std::vector<Graph> graphs;
    int max_order = 0;
    GenFilter filter;
    std::string source = "generator";
};

inline Universe make_universe(GraphGenerator& gen, int max_n, GenFilter filter = {}) {
    Universe u;
    u.max_order = max_n;
    u.filter = filter;
    for (int n = 1; n <= max_n; ++n)
        for (Graph& g : gen.generate(n, filter)) u.graphs.push_back(std::move(g));
    return u;
}

inline std::string filter_desc(GenFilter f) {
    std::string d;
    if (f.connected) d += "connected";
    if (f.triangle_free) d += std::string(d.empty() ? "" : ",") + "triangle-free";
    return d.empty() ? "all" : d;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d4ecb3fe7b151dULL;
    return z ^ (z >> 31);
}

// Contiguous shards, merged in index order, so the worker count never
// changes the report contents.
template <typename Fragment, typename Work>
std::vector<Fragment> sharded(std::size_t total, int workers, Work&& work) {
    if (workers < 1) workers = 1;
    std::size_t shards = std::min<std::size_t>(static_cast<std::size_t>(workers), total ? total : 1);
    std::vector<Fragment> frags(shards);
    std::vector<std::thread> threads;
    std::size_t chunk = shards ? (total + shards - 1) / shards : 0;
    for (std::size_t s = 0; s < shards; ++s) {
        std::size_t begin = s * chunk, end = std::min(total, begin + chunk);
        threads.emplace_back([&, s, begin, end] { work(frags[s], begin, end); });
    }
    for (auto& t : threads) t.join();
    return frags;
}

struct BoundTheoremTraits {
    std::function<bool(const Graph&, int mu)> hypothesis;
    std::function<u128(int mu)> bound;
    std::function<FamilySpec(int mu)> family;
};

inline BoundTheoremTraits bound_traits(TheoremId thm) {
    switch (thm) {
        case TheoremId::THM1:
            return {[](const Graph&, int) { return true; },
                    [](int mu) { return general_bound(mu).value; },
                    [](int mu) { return FamilySpec{FamilyId::GeneralT1, mu}; }};
        case TheoremId::THM2:
            return {[](const Graph& g, int mu) { return mu >= 1 && is_connected(g); },
                    [](int mu) { return connected_bound_h(mu).value; },
                    [](int mu) { return FamilySpec{FamilyId::H_T, mu}; }};
        case TheoremId::THM3:
            return {[](const Graph& g, int mu) { return mu >= 1 && is_triangle_free(g); },
                    [](int mu) { return trianglefree_bound_m(mu).value; },
                    [](int mu) { return FamilySpec{FamilyId::M_T, mu}; }};
        case TheoremId::THM4:
            return {[](const Graph& g, int mu) {
                        return mu >= 1 && is_connected(g) && is_triangle_free(g);
                    },
                    [](int mu) { return connected_trianglefree_bound_f(mu).value; },
                    [](int mu) { return FamilySpec{FamilyId::F_T, mu}; }};
        default:
            throw std::invalid_argument("bound_traits: not a bound theorem");
    }
}

struct ReportFragment {
    long checked = 0;
    long flagged = 0;
    long excluded = 0;
    std::map<int, long> by_order;
    std::vector<Violation> violations;
    std::vector<std::string> equality;
    std::vector<EqualityMismatch> mismatches;
};

inline void merge_fragments(VerificationReport& r, std::vector<ReportFragment>& frags) {
    for (ReportFragment& f : frags) {
        r.graphs_checked += f.checked;
        r.hypothesis_flagged += f.flagged;
        r.excluded += f.excluded;
        for (auto& [n, c] : f.by_order) r.checked_by_order[n] += c;
        for (auto& v : f.violations) r.violations.push_back(std::move(v));
        for (auto& e : f.equality) r.equality_graphs.push_back(std::move(e));
        for (auto& m : f.mismatches) r.equality_mismatches.push_back(std::move(m));
    }
}

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

}  // namespace detail

/// Bound plus equality-family verification (THM1..THM4). The reverse
/// equality direction re-runs the constructors through enumerate_family so a
/// recognizer bug and a constructor bug surface differently.
inline VerificationReport check_bound_theorem(const Universe& universe, TheoremId thm,
                                              int workers = 1) {
    detail::Stopwatch timer;
    detail::BoundTheoremTraits traits = detail::bound_traits(thm);
    VerificationReport report;
    report.theorem = thm;
    report.max_order = universe.max_order;
    report.filter_desc = filter_desc(universe.filter);
    report.source = universe.source;

    auto frags = detail::sharded<detail::ReportFragment>(
        universe.graphs.size(), workers, [&](detail::ReportFragment& frag, std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) {
                const Graph& g = universe.graphs[i];
                ++frag.checked;
                ++frag.by_order[g.order()];
                int mu = matching_number(g);
                if (!traits.hypothesis(g, mu)) {
                    ++frag.flagged;
                    continue;
                }
                u128 mis = count_mis(g);
                u128 bound = traits.bound(mu);
                if (mis > bound) {
                    frag.violations.push_back({to_graph6(g), mu, mis, bound, ""});
                } else if (mis == bound) {
                    std::string g6 = to_graph6(g);
                    frag.equality.push_back(g6);
                    if (!recognize(g, traits.family(mu)))
                        frag.mismatches.push_back({g6, "achieves-but-unrecognized"});
                }
            }
        });
    detail::merge_fragments(report, frags);

    // Independent route: every constructed family member must achieve its bound.
    for (int n = 1; n <= universe.max_order; ++n) {
        FamilySpec all_t = traits.family(0);
        all_t.param.reset();
        for (const Graph& member : enumerate_family(all_t, n)) {
            int mu = matching_number(member);
            if (!traits.hypothesis(member, mu)) continue;
            if (count_mis(member) != traits.bound(mu))
                report.equality_mismatches.push_back({to_graph6(member), "recognized-but-below"});
        }
    }
    report.wall_ms = timer.ms();
    return report;
}

/// Order-indexed bounds (MOON_MOSER, THMC, THMD, THME_ODD).
inline VerificationReport check_order_bounds(const Universe& universe, TheoremId thm,
                                             int workers = 1) {
    detail::Stopwatch timer;
    VerificationReport report;
    report.theorem = thm;
    report.max_order = universe.max_order;
    report.filter_desc = filter_desc(universe.filter);
    report.source = universe.source;

    auto frags = detail::sharded<detail::ReportFragment>(
        universe.graphs.size(), workers, [&](detail::ReportFragment& frag, std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) {
                const Graph& g = universe.graphs[i];
                int n = g.order();
                ++frag.checked;
                ++frag.by_order[n];
                bool ok_hyp = true;
                switch (thm) {
                    case TheoremId::MOON_MOSER: ok_hyp = n >= 2; break;
                    case TheoremId::THMC: ok_hyp = is_connected(g); break;
                    case TheoremId::THMD: ok_hyp = n >= 4 && is_triangle_free(g); break;
                    case TheoremId::THME_ODD: ok_hyp = n >= 4 && is_triangle_free(g); break;
                    default: throw std::invalid_argument("check_order_bounds: bad theorem");
                }
                if (!ok_hyp) {
                    ++frag.flagged;
                    continue;
                }
                if (thm == TheoremId::THME_ODD && (recognize_An(g) || recognize_Bn(g))) {
                    ++frag.excluded;  // the theorem exempts A_n and B_n
                    continue;
                }
                u128 bound = 0;
                switch (thm) {
                    case TheoremId::MOON_MOSER: bound = moon_moser(n).value; break;
                    case TheoremId::THMC: bound = griggs_c(n).value; break;
                    case TheoremId::THMD: bound = hujter_bound(n).value; break;
                    case TheoremId::THME_ODD: bound = chang_q(n).value; break;
                    default: break;
                }
                u128 mis = count_mis(g);
                if (mis > bound) {
                    frag.violations.push_back({to_graph6(g), matching_number(g), mis, bound, ""});
                } else if (mis == bound) {
                    std::string g6 = to_graph6(g);
                    if (thm == TheoremId::THMD) {
                        frag.equality.push_back(g6);
                        if (!recognize_An(g))
                            frag.mismatches.push_back({g6, "achieves-but-unrecognized"});
                    } else if (thm == TheoremId::THME_ODD) {
                        frag.equality.push_back(g6);
                        if (n % 2 == 1 && !recognize_Dn(g))
                            frag.mismatches.push_back({g6, "achieves-but-unrecognized"});
                    } else {
                        frag.equality.push_back(g6);
                    }
                }
            }
        });
    detail::merge_fragments(report, frags);

    if (thm == TheoremId::THMD || thm == TheoremId::THME_ODD) {
        FamilyId fam = thm == TheoremId::THMD ? FamilyId::A_N : FamilyId::D_N;
        for (int n = 4; n <= universe.max_order; ++n) {
            for (const Graph& member : enumerate_family({fam, {}}, n)) {
                if (thm == TheoremId::THME_ODD && n % 2 == 0) continue;
                u128 want = thm == TheoremId::THMD ? hujter_bound(n).value : chang_q(n).value;
                if (count_mis(member) != want)
                    report.equality_mismatches.push_back({to_graph6(member), "recognized-but-below"});
            }
        }
    }
    report.wall_ms = timer.ms();
    return report;
}

/// Lemma property suites (LEM21_STRICT, LEM31, LEM32, LEM33).
inline VerificationReport check_lemma_suite(const Universe& universe, TheoremId lemma,
                                            int workers = 1) {
    detail::Stopwatch timer;
    VerificationReport report;
    report.theorem = lemma;
    report.max_order = universe.max_order;
    report.filter_desc = filter_desc(universe.filter);
    report.source = universe.source;

    auto frags = detail::sharded<detail::ReportFragment>(
        universe.graphs.size(), workers, [&](detail::ReportFragment& frag, std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) {
                const Graph& g = universe.graphs[i];
                ++frag.checked;
                ++frag.by_order[g.order()];
                switch (lemma) {
                    case TheoremId::LEM21_STRICT: {
                        int mu = matching_number(g);
                        if (!is_connected(g) || mu < 2) {
                            ++frag.flagged;
                            break;
                        }
                        u128 mis = count_mis(g), bound = general_bound(mu).value;
                        if (mis >= bound)
                            frag.violations.push_back({to_graph6(g), mu, mis, bound, "strictness"});
                        break;
                    }
                    case TheoremId::LEM31: {
                        u128 whole = count_mis(g);
                        int n = g.order();
                        auto test_subset = [&](std::uint64_t s) {
                            u128 part = count_mis(induced_subgraph(g, VertexSet{s}));
                            if (part > whole)
                                frag.violations.push_back(
                                    {to_graph6(g), matching_number(g), part, whole, "induced-subgraph"});
                        };
                        if (n <= 7) {
                            for (std::uint64_t s = 1; s < bit(n); ++s) test_subset(s);
                        } else {
                            std::uint64_t state =
                                0x51ed2701u ^ (static_cast<std::uint64_t>(n) << 32) ^ i;
                            for (int k = 0; k < 50; ++k)
                                test_subset(detail::splitmix64(state) & g.vertex_mask());
                        }
                        break;
                    }
                    case TheoremId::LEM32: {
                        int mu = matching_number(g);
                        for (int v = 0; v < g.order(); ++v) {
                            int reduced = matching_number(delete_vertex(g, v));
                            if (reduced != mu && reduced != mu - 1)
                                frag.violations.push_back(
                                    {to_graph6(g), mu, static_cast<u128>(reduced), static_cast<u128>(mu),
                                     "deletion-dichotomy"});
                        }
                        break;
                    }
                    case TheoremId::LEM33: {
                        if (!is_connected(g)) {
                            ++frag.flagged;
                            break;
                        }
                        int mu = matching_number(g);
                        for (int v = 0; v < g.order(); ++v) {
                            if (!is_saturated_by_all_maximum_matchings(g, v)) continue;
                            for (int k = 1; k <= 2; ++k) {
                                if (g.order() + k > kMaxOrder) continue;
                                int grown = matching_number(attach_leaves(g, v, k));
                                if (grown != mu)
                                    frag.violations.push_back({to_graph6(g), mu,
                                                               static_cast<u128>(grown),
                                                               static_cast<u128>(mu), "leaf-attachment"});
                            }
                        }
                        break;
                    }
                    default:
                        throw std::invalid_argument("check_lemma_suite: bad lemma id");
                }
            }
        });
    detail::merge_fragments(report, frags);
    report.wall_ms = timer.ms();
    return report;
}

/// Structure-theorem property suite: factor-critical D-components, perfect
/// matching on C, positive surplus of A, and the shape of one maximum
/// matching.
inline VerificationReport check_gallai_edmonds(const Universe& universe, int workers = 1) {
    detail::Stopwatch timer;
    VerificationReport report;
    report.theorem = TheoremId::THMB_PROPS;
    report.max_order = universe.max_order;
    report.filter_desc = filter_desc(universe.filter);
    report.source = universe.source;

    auto frags = detail::sharded<detail::ReportFragment>(
        universe.graphs.size(), workers, [&](detail::ReportFragment& frag, std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) {
                const Graph& g = universe.graphs[i];
                ++frag.checked;
                ++frag.by_order[g.order()];
                int mu = matching_number(g);
                auto fail = [&](const char* what) {
                    frag.violations.push_back({to_graph6(g), mu, 0, 0, what});
                };
                GEDecomposition ge = gallai_edmonds(g);

                Graph d_graph = induced_subgraph(g, ge.D);
                std::vector<VertexSet> d_comps_local = components(d_graph);
                // component masks mapped back into g's vertex numbering
                std::vector<int> d_verts = ge.D.to_vector();
                std::vector<std::uint64_t> d_comps;
                for (VertexSet c : d_comps_local) {
                    std::uint64_t m = 0;
                    for_each_bit(c.bits, [&](int v) { m |= bit(d_verts[static_cast<std::size_t>(v)]); });
                    d_comps.push_back(m);
                }

                for (VertexSet c : d_comps_local)
                    if (!is_factor_critical(induced_subgraph(d_graph, c))) fail("D-component-factor-critical");

                Graph c_graph = induced_subgraph(g, ge.C);
                if (matching_number(c_graph) * 2 != c_graph.order()) fail("C-perfect-matching");

                // surplus of X over all nonempty subsets of A
                std::vector<int> a_verts = ge.A.to_vector();
                std::size_t a_count = a_verts.size();
                if (a_count > 0) {
                    std::vector<std::uint64_t> comp_nbrs(a_count, 0);
                    for (std::size_t ai = 0; ai < a_count; ++ai)
                        for (std::size_t ci = 0; ci < d_comps.size(); ++ci)
                            if (g.row(a_verts[ai]) & d_comps[ci]) comp_nbrs[ai] |= bit(static_cast<int>(ci));
                    for (std::uint64_t s = 1; s < bit(static_cast<int>(a_count)); ++s) {
                        std::uint64_t nbhd = 0;
                        for_each_bit(s, [&](int ai) { nbhd |= comp_nbrs[static_cast<std::size_t>(ai)]; });
                        if (popcount64(nbhd) - popcount64(s) < 1) {
                            fail("surplus-positive");
                            break;
                        }
                    }
                }

                // shape of one maximum matching
                Matching m = maximum_matching(g);
                auto mate = m.mates(g.order());
                bool shape_ok = true;
                for_each_bit(ge.C.bits, [&](int v) {
                    int w = mate[static_cast<std::size_t>(v)];
                    if (w < 0 || !ge.C.contains(w)) shape_ok = false;
                });
                std::uint64_t a_images = 0;
                for_each_bit(ge.A.bits, [&](int a) {
                    int w = mate[static_cast<std::size_t>(a)];
                    if (w < 0 || !ge.D.contains(w)) {
                        shape_ok = false;
                        return;
                    }
                    for (std::size_t ci = 0; ci < d_comps.size(); ++ci)
                        if (d_comps[ci] & bit(w)) {
                            if (a_images & bit(static_cast<int>(ci))) shape_ok = false;
                            a_images |= bit(static_cast<int>(ci));
                        }
                });
                for (std::uint64_t comp : d_comps) {
                    int internal = 0;
                    for_each_bit(comp, [&](int v) {
                        int w = mate[static_cast<std::size_t>(v)];
                        if (w >= 0 && (comp & bit(w))) ++internal;
                    });
                    if (internal != popcount64(comp) - 1) shape_ok = false;
                    // the one leftover vertex may only be unmatched or matched into A
                    for_each_bit(comp, [&](int v) {
                        int w = mate[static_cast<std::size_t>(v)];
                        if (w >= 0 && !(comp & bit(w)) && !ge.A.contains(w)) shape_ok = false;
                    });
                }
                if (!shape_ok) fail("maximum-matching-shape");
            }
        });
    detail::merge_fragments(report, frags);
    report.wall_ms = timer.ms();
    return report;
}

}  // namespace mismu
