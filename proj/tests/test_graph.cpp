#include <catch2/catch_amalgamated.hpp>

#include "mismu/graph.hpp"

using namespace mismu;

TEST_CASE("basic constructors", "[graph]") {
    Graph k3 = make_basic(BasicKind::Complete, 3);
    CHECK(k3.edge_count() == 3);

    Graph c5 = make_basic(BasicKind::Cycle, 5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    Graph star = make_basic(BasicKind::Star, 4);
    CHECK(star.degree(0) == 3);
    CHECK(star.edge_count() == 3);

    CHECK(make_basic(BasicKind::Empty, 4).edge_count() == 0);
    CHECK(make_basic(BasicKind::Path, 4).edge_count() == 3);

    CHECK_THROWS_AS(make_basic(BasicKind::Cycle, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_basic(BasicKind::Complete, 0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);
}

TEST_CASE("disjoint union", "[graph]") {
    Graph two_k3 = disjoint_union(make_basic(BasicKind::Complete, 3),
                                  make_basic(BasicKind::Complete, 3));
    CHECK(two_k3.order() == 6);
    CHECK(two_k3.edge_count() == 6);
    CHECK(components(two_k3).size() == 2);

    Graph k2_k1 = disjoint_union(make_basic(BasicKind::Complete, 2), Graph(1));
    CHECK(k2_k1.order() == 3);
    CHECK(k2_k1.edge_count() == 1);

    // C5 u 2K2 is the odd order-9 pairing graph
    Graph a9 = disjoint_union({make_basic(BasicKind::Cycle, 5), make_basic(BasicKind::Complete, 2),
                               make_basic(BasicKind::Complete, 2)});
    CHECK(a9.order() == 9);
    CHECK(components(a9).size() == 3);

    CHECK_THROWS_AS(disjoint_union(std::vector<Graph>(33, make_basic(BasicKind::Complete, 2))),
                    std::invalid_argument);
}

TEST_CASE("induced subgraph and deletion", "[graph]") {
    Graph c5 = make_basic(BasicKind::Cycle, 5);
    Graph p3 = induced_subgraph(c5, VertexSet::of({0, 1, 2}));
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);

    Graph k5 = make_basic(BasicKind::Complete, 5);
    CHECK(induced_subgraph(k5, VertexSet::of({1, 3, 4})).edge_count() == 3);
    CHECK(induced_subgraph(c5, VertexSet{c5.vertex_mask()}) == c5);

    Graph p4 = delete_vertex(c5, 0);
    CHECK(p4.order() == 4);
    CHECK(p4.edge_count() == 3);

    Graph star = make_basic(BasicKind::Star, 4);
    Graph rest = delete_vertex(star, 0);
    CHECK(rest.order() == 3);
    CHECK(rest.edge_count() == 0);

    CHECK(delete_vertices(c5, VertexSet{}) == c5);
    CHECK(delete_vertices(c5, VertexSet{c5.vertex_mask()}).order() == 0);
    CHECK_THROWS_AS(induced_subgraph(p3, VertexSet::of({5})), std::out_of_range);
}

TEST_CASE("neighborhoods", "[graph]") {
    Graph c5 = make_basic(BasicKind::Cycle, 5);
    CHECK(neighborhood(c5, 0) == VertexSet::of({1, 4}));
    Graph star = make_basic(BasicKind::Star, 4);
    CHECK(neighborhood(star, 0, true) == VertexSet::of({0, 1, 2, 3}));
    CHECK(neighborhood(make_basic(BasicKind::Empty, 3), 0).empty());
    CHECK_THROWS_AS(neighborhood(c5, 7), std::out_of_range);
}

TEST_CASE("components and connectivity", "[graph]") {
    Graph two_k3 = disjoint_union(make_basic(BasicKind::Complete, 3),
                                  make_basic(BasicKind::Complete, 3));
    CHECK(components(two_k3).size() == 2);
    CHECK_FALSE(is_connected(two_k3));
    CHECK_FALSE(is_triangle_free(two_k3));

    Graph c5 = make_basic(BasicKind::Cycle, 5);
    CHECK(is_connected(c5));
    CHECK(is_triangle_free(c5));

    Graph k3_k1 = disjoint_union(make_basic(BasicKind::Complete, 3), Graph(1));
    CHECK(components(k3_k1).size() == 2);

    CHECK(is_connected(Graph(1)));
    CHECK_FALSE(is_connected(Graph()));  // order-0 value from full deletion
}

TEST_CASE("triangle detection", "[graph]") {
    CHECK(is_triangle_free(make_basic(BasicKind::Path, 5)));
    CHECK(is_triangle_free(make_basic(BasicKind::Star, 6)));
    CHECK(is_triangle_free(make_basic(BasicKind::Cycle, 4)));
    CHECK_FALSE(is_triangle_free(make_basic(BasicKind::Complete, 3)));
    Graph paw = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    CHECK_FALSE(is_triangle_free(paw));
}

TEST_CASE("attach leaves", "[graph]") {
    Graph k2 = make_basic(BasicKind::Complete, 2);
    Graph grown = attach_leaves(k2, 0, 2);
    CHECK(grown.order() == 4);
    CHECK(grown.degree(0) == 3);
    CHECK(grown.degree(2) == 1);
    CHECK(grown.degree(3) == 1);
}
