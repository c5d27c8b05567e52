#include <doctest.h>

#include "gridmagic/common.hpp"
#include "gridmagic/counting.hpp"
#include "gridmagic/decompose.hpp"

using namespace gridmagic;

namespace {

std::vector<long long> resummed(const Graph& g, const Decomposition& dec) {
    std::vector<long long> acc(g.edge_count(), 0);
    for (const auto& layer : dec.layers)
        for (int e : layer) ++acc[e];
    return acc;
}

}  // namespace

TEST_CASE("matching extraction prefers low edge indices") {
    Graph g = Graph::grid(2, 2);
    std::vector<bool> all(g.edge_count(), true);
    std::vector<int> m = extract_matching(g, all);
    CHECK(m == std::vector<int>{0, 1});  // the two horizontals come first
}

TEST_CASE("a sum-1 labelling extracts as itself") {
    Graph g = Graph::grid(3, 4);
    for (const auto& matching : perfect_matchings(g, 100)) {
        std::vector<bool> support(g.edge_count(), false);
        for (int e : matching) support[e] = true;
        CHECK(extract_matching(g, support) == matching);
    }
}

TEST_CASE("extraction from the union of two matchings") {
    Graph g = Graph::grid(2, 3);
    auto ms = perfect_matchings(g, 10);
    REQUIRE(ms.size() == 3);
    std::vector<bool> support(g.edge_count(), false);
    for (int e : ms[0]) support[e] = true;
    for (int e : ms[2]) support[e] = true;
    std::vector<int> m = extract_matching(g, support);
    for (int e : m) CHECK(support[e]);
    CHECK(m.size() == 3);
}

TEST_CASE("no matching in support") {
    Graph g = Graph::grid(2, 2);
    std::vector<bool> support(g.edge_count(), false);
    support[0] = true;  // a single horizontal cannot cover 4 vertices
    CHECK_THROWS_AS(extract_matching(g, support), domain_error);
}

TEST_CASE("decompose simple cases") {
    Graph g22 = Graph::grid(2, 2);
    Decomposition ones = decompose(MagicLabelling(g22, 2, {1, 1, 1, 1}));
    REQUIRE(ones.layers.size() == 2);
    CHECK(ones.layers[0] != ones.layers[1]);
    CHECK(resummed(g22, ones) == std::vector<long long>{1, 1, 1, 1});

    // a sum-1 labelling decomposes into itself
    Graph g34 = Graph::grid(3, 4);
    auto matchings = perfect_matchings(g34, 100);
    std::vector<long long> lab(g34.edge_count(), 0);
    for (int e : matchings[3]) lab[e] = 1;
    Decomposition one = decompose(MagicLabelling(g34, 1, lab));
    REQUIRE(one.layers.size() == 1);
    CHECK(one.layers[0] == matchings[3]);

    // sum 0 peels into nothing
    CHECK(decompose(MagicLabelling(g22, 0, {0, 0, 0, 0})).layers.empty());
}

TEST_CASE("witness stacking round-trips") {
    MagicLabelling w = gorenstein_witness(WitnessCase::grid3xn_t5, 3, 6);
    Decomposition dec = decompose(w);
    REQUIRE(dec.layers.size() == 5);
    CHECK(resummed(w.graph, dec) == w.labels);
    for (const auto& layer : dec.layers)
        CHECK(layer.size() == static_cast<std::size_t>(w.graph.vertex_count() / 2));
}

TEST_CASE("round-trip over full enumerations of small grids") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 5; ++n) {
            Graph g = Graph::grid(m, n);
            for (long long t = 0; t <= 4; ++t)
                for (const MagicLabelling& l :
                     enumerate_labellings(g, t, CountMode::all, 100000)) {
                    Decomposition dec = decompose(l);
                    CHECK(dec.layers.size() == static_cast<std::size_t>(t));
                    CHECK(resummed(g, dec) == l.labels);
                }
        }
}

TEST_CASE("torus labellings decompose too") {
    Graph t = Graph::torus(2, 4);
    for (const MagicLabelling& l : enumerate_labellings(t, 2, CountMode::all, 100000)) {
        Decomposition dec = decompose(l);
        CHECK(dec.layers.size() == 2);
        CHECK(resummed(t, dec) == l.labels);
    }
}

TEST_CASE("invalid labellings are rejected") {
    Graph g = Graph::grid(2, 2);
    CHECK_THROWS_AS(decompose(MagicLabelling(g, 3, {1, 1, 1, 1})), domain_error);
}

TEST_CASE("tiling rendering") {
    Graph g = Graph::grid(2, 2);
    CHECK(render_tiling(g, {0, 1}) == "HH\nHH\n");
    CHECK(render_tiling(g, {2, 3}) == "VV\nVV\n");
    CHECK_THROWS_AS(render_tiling(Graph::torus(2, 4), {}), domain_error);
}
