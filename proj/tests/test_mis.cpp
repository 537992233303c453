#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "mismu/families.hpp"
#include "mismu/generate.hpp"
#include "mismu/matching.hpp"
#include "mismu/mis.hpp"
#include "oracles.hpp"

using namespace mismu;

TEST_CASE("independence predicates", "[mis]") {
    Graph k3 = make_basic(BasicKind::Complete, 3);
    CHECK_FALSE(is_independent(k3, VertexSet::of({0, 1})));
    Graph c5 = make_basic(BasicKind::Cycle, 5);
    CHECK(is_independent(c5, VertexSet::of({0, 2})));
    CHECK(is_independent(k3, VertexSet{}));  // empty set counts

    CHECK(is_maximal_independent(c5, VertexSet::of({0, 2})));
    Graph p4 = make_basic(BasicKind::Path, 4);
    CHECK_FALSE(is_maximal_independent(p4, VertexSet::of({2})));  // 0 can join
    Graph e4 = make_basic(BasicKind::Empty, 4);
    CHECK(is_maximal_independent(e4, VertexSet{e4.vertex_mask()}));
}

TEST_CASE("enumeration on the named small graphs", "[mis]") {
    Graph k3 = make_basic(BasicKind::Complete, 3);
    auto sets = enumerate_mis(k3);
    REQUIRE(sets.size() == 3);
    for (VertexSet s : sets) CHECK(s.count() == 1);

    auto c5_sets = enumerate_mis(make_basic(BasicKind::Cycle, 5));
    REQUIRE(c5_sets.size() == 5);
    for (VertexSet s : c5_sets) CHECK(s.count() == 2);

    Graph star = make_basic(BasicKind::Star, 4);
    auto star_sets = enumerate_mis(star);
    REQUIRE(star_sets.size() == 2);
    std::set<std::uint64_t> as_bits;
    for (VertexSet s : star_sets) as_bits.insert(s.bits);
    CHECK(as_bits.count(VertexSet::of({0}).bits) == 1);
    CHECK(as_bits.count(VertexSet::of({1, 2, 3}).bits) == 1);
}

TEST_CASE("counts on the named small graphs", "[mis]") {
    Graph two_k3 = disjoint_union(make_basic(BasicKind::Complete, 3),
                                  make_basic(BasicKind::Complete, 3));
    CHECK(count_mis(two_k3) == 9);
    CHECK(count_mis(make_A5()) == 5);
    CHECK(count_mis(make_basic(BasicKind::Path, 4)) == 3);
}

TEST_CASE("independent-set counting", "[mis]") {
    CHECK(count_independent_sets(make_basic(BasicKind::Complete, 2)) == 3);
    CHECK(count_independent_sets(make_basic(BasicKind::Cycle, 5)) ==
          oracle::count_independent_sets(make_basic(BasicKind::Cycle, 5)));
    // induced matchings hit the 3^t ceiling
    for (int t = 1; t <= 6; ++t) {
        std::vector<Graph> parts(static_cast<std::size_t>(t), make_basic(BasicKind::Complete, 2));
        CHECK(count_independent_sets(disjoint_union(parts)) == checked_pow(3, static_cast<unsigned>(t)));
    }
}

TEST_CASE("count matches the subset oracle on every graph with n <= 7", "[mis]") {
    GraphGenerator gen;
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : gen.generate(n)) {
            REQUIRE(count_mis(g) == oracle::count_mis(g));
            REQUIRE(count_independent_sets(g) == oracle::count_independent_sets(g));
        }
}

TEST_CASE("enumeration emits exactly the maximal sets, no duplicates", "[mis]") {
    std::uint64_t state = 2024;
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = oracle::random_graph(2 + static_cast<int>(oracle::splitmix64(state) % 7), state);
        std::set<std::uint64_t> seen;
        for (VertexSet s : enumerate_mis(g)) {
            REQUIRE(is_maximal_independent(g, s));
            REQUIRE(seen.insert(s.bits).second);
        }
        REQUIRE(static_cast<u128>(seen.size()) == oracle::count_mis(g));
    }
}

TEST_CASE("early-abort streaming caps the output", "[mis]") {
    Graph two_k3 = disjoint_union(make_basic(BasicKind::Complete, 3),
                                  make_basic(BasicKind::Complete, 3));
    int emitted = 0;
    bool completed = for_each_mis(two_k3, [&](VertexSet) { return ++emitted < 4; });
    CHECK_FALSE(completed);
    CHECK(emitted == 4);
}

TEST_CASE("mis is multiplicative over disjoint unions", "[mis]") {
    std::uint64_t state = 555;
    for (int trial = 0; trial < 500; ++trial) {
        int na = 1 + static_cast<int>(oracle::splitmix64(state) % 6);
        int nb = 1 + static_cast<int>(oracle::splitmix64(state) % 6);
        Graph a = oracle::random_graph(na, state);
        Graph b = oracle::random_graph(nb, state);
        REQUIRE(count_mis(disjoint_union(a, b)) == count_mis(a) * count_mis(b));
    }
}

TEST_CASE("mis never shrinks under induced supergraphs", "[mis]") {
    GraphGenerator gen;
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : gen.generate(n)) {
            u128 whole = count_mis(g);
            for (std::uint64_t s = 0; s < bit(n); ++s)
                REQUIRE(count_mis(induced_subgraph(g, VertexSet{s})) <= whole);
        }
}

TEST_CASE("mis is bounded by independent sets of the matched core", "[mis]") {
    GraphGenerator gen;
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : gen.generate(n)) {
            Matching m = maximum_matching(g);
            REQUIRE(count_mis(g) <= count_independent_sets(induced_subgraph(g, m.saturated())));
        }
}

TEST_CASE("isolated vertices never change the count", "[mis]") {
    std::uint64_t state = 31337;
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = oracle::random_graph(1 + static_cast<int>(oracle::splitmix64(state) % 8), state);
        u128 base = count_mis(g);
        for (int k = 1; k <= 3; ++k) {
            std::vector<Graph> parts{g};
            for (int i = 0; i < k; ++i) parts.push_back(Graph(1));
            REQUIRE(count_mis(disjoint_union(parts)) == base);
        }
    }
}
