#include <catch2/catch_amalgamated.hpp>

#include "mismu/generate.hpp"
#include "mismu/graph6.hpp"
#include "oracles.hpp"

using namespace mismu;

// Hand-encoded vectors, cross-checked against the format definition:
// "A_" = K2, "A?" = 2K1, "Bw" = K3, "@" = K1.
TEST_CASE("parse known encodings", "[graph6]") {
    Graph k2 = parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.has_edge(0, 1));

    Graph e2 = parse_graph6("A?");
    CHECK(e2.order() == 2);
    CHECK(e2.edge_count() == 0);

    Graph k3 = parse_graph6("Bw");
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);

    Graph k1 = parse_graph6("@");
    CHECK(k1.order() == 1);

    CHECK(parse_graph6(">>graph6<<Bw") == k3);
    CHECK(parse_graph6("Bw\n") == k3);
}

TEST_CASE("emit known encodings", "[graph6]") {
    CHECK(to_graph6(make_basic(BasicKind::Complete, 3)) == "Bw");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(make_basic(BasicKind::Complete, 2)) == "A_");

    Graph c5 = make_basic(BasicKind::Cycle, 5);
    CHECK(parse_graph6(to_graph6(c5)) == c5);
}

TEST_CASE("parse errors name the byte offset", "[graph6]") {
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("B"), Graph6Error);       // truncated bits
    CHECK_THROWS_AS(parse_graph6("Bw "), Graph6Error);     // bad trailing char
    CHECK_THROWS_AS(parse_graph6("BwBw"), Graph6Error);    // trailing garbage
    CHECK_THROWS_AS(parse_graph6("?"), Graph6Error);       // order 0
    CHECK_THROWS_AS(parse_graph6("A\x20"), Graph6Error);   // char below 63
    CHECK_THROWS_AS(parse_graph6("~~?@?"), Graph6Error);   // 8-byte form

    try {
        parse_graph6("Bw!");
        FAIL("expected a parse error");
    } catch (const Graph6Error& e) {
        CHECK(e.offset() == 2);
    }

    // nonzero padding bits in the final character
    CHECK_THROWS_AS(parse_graph6(std::string("B") + static_cast<char>(63 + 1)), Graph6Error);
}

TEST_CASE("long form round trip at 63 and 64", "[graph6]") {
    std::uint64_t state = 17;
    for (int n : {63, 64}) {
        Graph g = oracle::random_graph(n, state, 20);
        std::string enc = to_graph6(g);
        CHECK(enc[0] == 126);
        CHECK(parse_graph6(enc) == g);
    }
    // short form stays short up to 62
    CHECK(to_graph6(Graph(62))[0] != 126);
}

TEST_CASE("random byte strings either parse or raise a located error", "[graph6]") {
    std::uint64_t state = 0xfeed;
    for (int trial = 0; trial < 2000; ++trial) {
        std::string s;
        int len = static_cast<int>(oracle::splitmix64(state) % 12);
        for (int i = 0; i < len; ++i)
            s.push_back(static_cast<char>(oracle::splitmix64(state) % 96 + 32));
        try {
            Graph g = parse_graph6(s);
            REQUIRE(parse_graph6(to_graph6(g)) == g);
        } catch (const Graph6Error& e) {
            REQUIRE(e.offset() <= s.size());
        }
    }
}

TEST_CASE("round trip is the identity on generated graphs", "[graph6]") {
    GraphGenerator gen;
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : gen.generate(n)) REQUIRE(parse_graph6(to_graph6(g)) == g);

    std::uint64_t state = 99;
    for (int i = 0; i < 200; ++i) {
        Graph g = oracle::random_graph(2 + static_cast<int>(oracle::splitmix64(state) % 30), state);
        REQUIRE(parse_graph6(to_graph6(g)) == g);
    }
}
