#include <doctest.h>

#include "gridmagic/common.hpp"
#include "gridmagic/graph.hpp"

using namespace gridmagic;

TEST_CASE("grid construction basics") {
    Graph g12 = Graph::grid(1, 2);
    CHECK(g12.vertex_count() == 2);
    CHECK(g12.edge_count() == 1);

    Graph g34 = Graph::grid(3, 4);
    CHECK(g34.vertex_count() == 12);
    CHECK(g34.edge_count() == 17);  // 3*3 + 4*2

    Graph g22 = Graph::grid(2, 2);
    CHECK(g22.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(g22.degree(v) == 2);

    CHECK_THROWS_AS(Graph::grid(0, 3), std::invalid_argument);
}

TEST_CASE("torus construction and edge coalescing") {
    Graph t24 = Graph::torus(2, 4);
    CHECK(t24.vertex_count() == 8);
    CHECK(t24.edge_count() == 12);  // 3n

    Graph t44 = Graph::torus(4, 4);
    CHECK(t44.vertex_count() == 16);
    CHECK(t44.edge_count() == 32);  // 2mn
    for (int v = 0; v < 16; ++v) CHECK(t44.degree(v) == 4);

    // 1 x n torus is the n-cycle; the vertical wraps would be loops
    Graph t14 = Graph::torus(1, 4);
    CHECK(t14.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(t14.degree(v) == 2);
    int wraps = 0;
    for (const Edge& e : t14.edges())
        if (e.kind == EdgeKind::wrap_horizontal) ++wraps;
    CHECK(wraps == 1);

    // n = 2: the horizontal wrap coincides with the grid edge
    CHECK(Graph::torus(2, 2).edge_count() == 4);
    CHECK(Graph::torus(1, 2).edge_count() == 1);
    CHECK(Graph::torus(3, 2).edge_count() == 9);  // 3m by transposition

    CHECK_THROWS_AS(Graph::torus(2, 1), domain_error);
}

TEST_CASE("edge count formulas across the catalog") {
    for (int m = 1; m <= 8; ++m)
        for (int n = 1; n <= 8; ++n) {
            Graph g = Graph::grid(m, n);
            CHECK(g.edge_count() == m * (n - 1) + n * (m - 1));
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (m * n > 1) CHECK(g.degree(v) >= 1);
                CHECK(g.degree(v) <= 4);
            }
            if (n < 2) continue;
            Graph t = Graph::torus(m, n);
            if (m == 2 && n > 2) CHECK(t.edge_count() == 3 * n);
            if (m > 2 && n > 2) CHECK(t.edge_count() == 2 * m * n);
        }
}

TEST_CASE("bipartition") {
    auto bp = Graph::grid(3, 3).bipartition();
    REQUIRE(bp.has_value());
    CHECK(bp->first.size() == 5);
    CHECK(bp->second.size() == 4);

    // checkerboard parity: class sizes differ by mn mod 2
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            auto p = Graph::grid(m, n).bipartition();
            REQUIRE(p.has_value());
            long diff = std::abs(static_cast<long>(p->first.size()) -
                                 static_cast<long>(p->second.size()));
            CHECK(diff == (m * n) % 2);
        }

    CHECK_FALSE(Graph::torus(2, 3).bipartition().has_value());
    CHECK_FALSE(Graph::torus(3, 4).bipartition().has_value());
    auto p44 = Graph::torus(4, 4).bipartition();
    REQUIRE(p44.has_value());
    CHECK(p44->first.size() == 8);
    CHECK(p44->second.size() == 8);
    CHECK(Graph::torus(1, 4).is_bipartite());
    CHECK_FALSE(Graph::torus(1, 5).is_bipartite());
}

TEST_CASE("canonical indexing is rebuild-stable") {
    for (auto [m, n] : {std::pair{3, 4}, std::pair{2, 5}}) {
        Graph a = Graph::torus(m, n), b = Graph::torus(m, n);
        REQUIRE(a.edge_count() == b.edge_count());
        for (int e = 0; e < a.edge_count(); ++e) {
            CHECK(a.edges()[e].u == b.edges()[e].u);
            CHECK(a.edges()[e].v == b.edges()[e].v);
            CHECK(a.edges()[e].kind == b.edges()[e].kind);
        }
    }
    // horizontals first (row-major), then verticals, then wraps
    Graph g = Graph::grid(3, 4);
    for (int e = 0; e < 9; ++e) CHECK(g.edges()[e].kind == EdgeKind::horizontal);
    for (int e = 9; e < 17; ++e) CHECK(g.edges()[e].kind == EdgeKind::vertical);
}

TEST_CASE("h-description") {
    HDescription h22 = h_description(Graph::grid(2, 2));
    CHECK(h22.equalities.size() == 4);
    CHECK(h22.num_edges == 4);
    CHECK(h22.odd_set_omitted);

    Graph g34 = Graph::grid(3, 4);
    HDescription h34 = h_description(g34);
    CHECK(h34.equalities.size() == 12);
    CHECK(h34.num_edges == 17);
    for (int v = 0; v < g34.vertex_count(); ++v)
        CHECK(h34.equalities[v] == g34.incident(v));

    CHECK_THROWS_AS(h_description(Graph::torus(2, 3)), domain_error);
}
