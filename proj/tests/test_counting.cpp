#include <doctest.h>

#include "gridmagic/common.hpp"
#include "gridmagic/counting.hpp"
#include "gridmagic/recurrence.hpp"

using namespace gridmagic;

namespace {

// Independent oracle: walk every label vector in [lo, t]^E and test the
// magic condition directly. Exponential; tiny inputs only.
long brute_count(const Graph& g, long long t, CountMode mode) {
    const long long lo = mode == CountMode::interior ? 1 : 0;
    const int E = g.edge_count();
    if (lo > t) return t == 0 && E == 0 ? 1 : 0;
    std::vector<long long> lab(E, lo);
    long count = 0;
    for (;;) {
        bool magic = true;
        for (int v = 0; v < g.vertex_count() && magic; ++v) {
            long long s = 0;
            for (int e : g.incident(v)) s += lab[e];
            magic = s == t;
        }
        if (magic) ++count;
        int pos = 0;
        while (pos < E && lab[pos] == t) lab[pos++] = lo;
        if (pos == E) break;
        ++lab[pos];
    }
    return count;
}

// Independent oracle for matchings: test every edge subset.
long brute_matchings(const Graph& g) {
    const int E = g.edge_count();
    REQUIRE(E <= 20);
    long count = 0;
    for (unsigned long mask = 0; mask < (1ul << E); ++mask) {
        std::vector<int> deg(g.vertex_count(), 0);
        for (int e = 0; e < E; ++e)
            if (mask & (1ul << e)) {
                const Edge& ed = g.edges()[e];
                ++deg[g.vertex_id(ed.u.row, ed.u.col)];
                ++deg[g.vertex_id(ed.v.row, ed.v.col)];
            }
        bool ok = true;
        for (int d : deg) ok = ok && d == 1;
        if (ok) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("profile DP vs exhaustive oracle") {
    for (long long t = 0; t <= 3; ++t) {
        CHECK(count_grid(2, 2, t, CountMode::all).value ==
              brute_count(Graph::grid(2, 2), t, CountMode::all));
        CHECK(count_grid(2, 2, t, CountMode::interior).value ==
              brute_count(Graph::grid(2, 2), t, CountMode::interior));
        CHECK(count_grid(1, 3, t, CountMode::all).value ==
              brute_count(Graph::grid(1, 3), t, CountMode::all));
    }
    CHECK(count_grid(2, 3, 2, CountMode::all).value ==
          brute_count(Graph::grid(2, 3), 2, CountMode::all));
}

TEST_CASE("counts pinned by the interpolating polynomial") {
    CHECK(count_grid(3, 4, 1, CountMode::all).value == 11);
    CHECK(count_grid(3, 4, 2, CountMode::all).value == 57);
    for (int n = 3; n <= 6; ++n)
        CHECK(count_grid(2, n, 3, CountMode::interior).value == 1);
    CHECK(count_grid(3, 4, 4, CountMode::interior).value == 0);
    CHECK(count_grid(1, 3, 0, CountMode::all).value == 1);
    for (long long t = 1; t <= 3; ++t)
        CHECK(count_grid(1, 3, t, CountMode::all).value == 0);
    // single-row boards: one edge holds everything for n = 2; any longer
    // even path pins its middle edges to zero, so no interior points
    for (long long t = 1; t <= 4; ++t) {
        CHECK(count_grid(1, 2, t, CountMode::interior).value == 1);
        CHECK(count_grid(1, 4, t, CountMode::interior).value == 0);
    }
}

TEST_CASE("generic engine agrees with the DP") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 5; ++n) {
            Graph g = Graph::grid(m, n);
            for (long long t = 0; t <= 4; ++t)
                for (CountMode mode : {CountMode::all, CountMode::interior}) {
                    CAPTURE(m);
                    CAPTURE(n);
                    CAPTURE(t);
                    CHECK(count_generic(g, t, mode).value == count_grid(m, n, t, mode).value);
                }
        }
}

TEST_CASE("torus counting against the subset oracle") {
    Graph t24 = Graph::torus(2, 4);
    long matchings = brute_matchings(t24);
    CHECK(count_generic(t24, 1, CountMode::all).value == matchings);
    CHECK(perfect_matchings(t24, 100000).size() == static_cast<std::size_t>(matchings));
    CHECK(count_generic(t24, 2, CountMode::all).value ==
          brute_count(t24, 2, CountMode::all));

    CHECK_THROWS_AS(count_generic(Graph::torus(2, 3), 2, CountMode::all), domain_error);

    // a 4-regular graph carries the all-ones labelling at t = 4
    CHECK(count_generic(Graph::torus(4, 4), 4, CountMode::interior).value >= 1);
}

TEST_CASE("transpose symmetry") {
    for (int m = 1; m <= 6; ++m)
        for (int n = m; n <= 6; ++n)
            for (long long t = 0; t <= 3; ++t) {
                CAPTURE(m);
                CAPTURE(n);
                CAPTURE(t);
                CHECK(count_grid(m, n, t, CountMode::all).value ==
                      count_grid(n, m, t, CountMode::all).value);
            }
}

TEST_CASE("odd area forces zero") {
    for (int m : {1, 3, 5})
        for (int n : {1, 3, 5}) {
            CHECK(count_grid(m, n, 0, CountMode::all).value == 1);
            for (long long t = 1; t <= 3; ++t)
                CHECK(count_grid(m, n, t, CountMode::all).value == 0);
        }
}

TEST_CASE("interior counts never exceed full counts") {
    for (auto [m, n] : {std::pair{2, 4}, std::pair{3, 4}, std::pair{3, 3}})
        for (long long t = 0; t <= 5; ++t)
            CHECK(count_grid(m, n, t, CountMode::interior).value <=
                  count_grid(m, n, t, CountMode::all).value);
}

TEST_CASE("sum-1 counts are matching counts") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            Graph g = Graph::grid(m, n);
            CHECK(count_grid(m, n, 1, CountMode::all).value ==
                  int_of(static_cast<long long>(perfect_matchings(g, 1000000).size())));
        }
}

TEST_CASE("enumeration") {
    Graph g22 = Graph::grid(2, 2);
    auto two = enumerate_labellings(g22, 1, CountMode::all, 10);
    REQUIRE(two.size() == 2);
    CHECK(two[0].labels < two[1].labels);  // lexicographic order

    Graph g34 = Graph::grid(3, 4);
    auto all = enumerate_labellings(g34, 2, CountMode::all, 1000);
    CHECK(all.size() == 57);
    CHECK(std::is_sorted(all.begin(), all.end(),
                         [](const MagicLabelling& a, const MagicLabelling& b) {
                             return a.labels < b.labels;
                         }));

    CHECK_THROWS_AS(enumerate_labellings(g34, 2, CountMode::all, 10), cap_exceeded);
}

TEST_CASE("u64 overflow falls back to exact big integers") {
    // counts that overflow 64 bits; checked against the minimal recurrence
    // fitted on small values and run forward
    std::vector<Rat> seq;
    for (int n = 0; n <= 30; ++n)
        seq.emplace_back(n == 0 ? Int(1) : count_grid(2, n, 4, CountMode::all).value);
    Recurrence rec = berlekamp_massey(seq);
    std::vector<Rat> ext = extend(rec, Direction::forward, 120 - rec.order + 1);
    Int big = count_grid(2, 120, 4, CountMode::all).value;
    CHECK(big > Int("18446744073709551615"));
    CHECK(Rat(big) == ext[120 - rec.order]);
}

TEST_CASE("matching enumerator basics") {
    CHECK(perfect_matchings(Graph::grid(2, 2), 10).size() == 2);
    CHECK(perfect_matchings(Graph::grid(3, 3), 10).empty());
    CHECK(perfect_matchings(Graph::torus(1, 4), 10).size() == 2);
    CHECK(has_perfect_matching(Graph::grid(3, 4)));
    CHECK_FALSE(has_perfect_matching(Graph::torus(1, 5)));
}
