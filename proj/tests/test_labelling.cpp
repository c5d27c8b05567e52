#include <doctest.h>

#include "gridmagic/common.hpp"
#include "gridmagic/counting.hpp"
#include "gridmagic/labelling.hpp"

using namespace gridmagic;

TEST_CASE("validate") {
    Graph g = Graph::grid(3, 4);

    // every perfect matching's incidence vector is magic at t = 1
    for (const auto& matching : perfect_matchings(g, 100)) {
        std::vector<long long> lab(g.edge_count(), 0);
        for (int e : matching) lab[e] = 1;
        ValidationReport r = validate(MagicLabelling(g, 1, lab));
        CHECK(r.is_magic);
        CHECK_FALSE(r.is_interior);
    }

    ValidationReport zero = validate(MagicLabelling(g, 0, std::vector<long long>(17, 0)));
    CHECK(zero.is_magic);
    CHECK_FALSE(zero.is_interior);

    ValidationReport bad = validate(MagicLabelling(g, 2, std::vector<long long>(17, 1)));
    CHECK_FALSE(bad.is_magic);
    CHECK_FALSE(bad.violations.empty());

    CHECK_THROWS_AS(MagicLabelling(g, 1, std::vector<long long>(16, 0)),
                    std::invalid_argument);
}

TEST_CASE("pictured interior point of the 2xn case") {
    MagicLabelling w = gorenstein_witness(WitnessCase::grid2xn_t3, 2, 5);
    ValidationReport r = validate(w);
    CHECK(r.is_magic);
    CHECK(r.is_interior);
    CHECK(w.sum == 3);
    // end verticals carry 2, everything else 1
    const Graph& g = w.graph;
    for (const Edge& e : g.edges()) {
        bool end_vertical = e.kind == EdgeKind::vertical && (e.u.col == 0 || e.u.col == 4);
        CHECK(w.labels[e.index] == (end_vertical ? 2 : 1));
    }
}

TEST_CASE("witness catalog validates as interior") {
    auto check_case = [](WitnessCase wc, int m, int n, long long t) {
        CAPTURE(to_string(wc));
        CAPTURE(m);
        CAPTURE(n);
        MagicLabelling w = gorenstein_witness(wc, m, n);
        CHECK(w.sum == t);
        ValidationReport r = validate(w);
        CHECK(r.is_magic);
        CHECK(r.is_interior);
    };
    for (int n = 3; n <= 8; ++n) check_case(WitnessCase::grid2xn_t3, 2, n, 3);
    for (int n = 4; n <= 8; n += 2) check_case(WitnessCase::grid3xn_t5, 3, n, 5);
    check_case(WitnessCase::grid4x4_t4, 4, 4, 4);
    for (int m = 2; m <= 8; m += 2)
        for (int n = 2; n <= 8; n += 2) check_case(WitnessCase::even_even_t4, m, n, 4);
    for (int m = 2; m <= 6; m += 2)
        for (int n = 4; n <= 8; n += 2) check_case(WitnessCase::even_even_t5, m, n, 5);
    for (int m = 4; m <= 6; m += 2)
        for (int n = 5; n <= 7; n += 2) {
            check_case(WitnessCase::even_odd_t5, m, n, 5);
            check_case(WitnessCase::even_odd_t5_flipped, m, n, 5);
        }
}

TEST_CASE("flipped even-odd witness differs from the base one") {
    for (auto [m, n] : {std::pair{4, 5}, std::pair{6, 7}}) {
        MagicLabelling base = gorenstein_witness(WitnessCase::even_odd_t5, m, n);
        MagicLabelling flip = gorenstein_witness(WitnessCase::even_odd_t5_flipped, m, n);
        CHECK(base.labels != flip.labels);
    }
}

TEST_CASE("incompatible witness parameters are rejected") {
    CHECK_THROWS_AS(gorenstein_witness(WitnessCase::grid2xn_t3, 3, 4), domain_error);
    CHECK_THROWS_AS(gorenstein_witness(WitnessCase::grid2xn_t3, 2, 2), domain_error);
    CHECK_THROWS_AS(gorenstein_witness(WitnessCase::grid3xn_t5, 3, 5), domain_error);
    CHECK_THROWS_AS(gorenstein_witness(WitnessCase::grid4x4_t4, 4, 5), domain_error);
    CHECK_THROWS_AS(gorenstein_witness(WitnessCase::even_even_t4, 3, 4), domain_error);
    CHECK_THROWS_AS(gorenstein_witness(WitnessCase::even_odd_t5, 4, 4), domain_error);
    CHECK_THROWS_AS(gorenstein_witness(WitnessCase::even_odd_t5, 3, 5), domain_error);
    CHECK_THROWS_AS(witness_case_from_string("nonsense"), std::invalid_argument);
}

TEST_CASE("row difference identity") {
    Graph g34 = Graph::grid(3, 4);
    for (const auto& matching : perfect_matchings(g34, 100)) {
        std::vector<long long> lab(g34.edge_count(), 0);
        for (int e : matching) lab[e] = 1;
        CHECK(check_difflemma(MagicLabelling(g34, 1, lab)));
    }

    MagicLabelling w = gorenstein_witness(WitnessCase::grid3xn_t5, 3, 6);
    CHECK(check_difflemma(w));

    // bumping one middle-row horizontal label breaks the identity
    MagicLabelling corrupted = w;
    corrupted.labels[6] += 1;  // a middle-row horizontal edge
    CHECK((!check_difflemma(corrupted) || !validate(corrupted).is_magic));
    CHECK_FALSE(validate(corrupted).is_magic);

    CHECK_THROWS_AS(check_difflemma(MagicLabelling(Graph::grid(2, 4), 0,
                                                   std::vector<long long>(10, 0))),
                    domain_error);
    CHECK_THROWS_AS(check_difflemma(MagicLabelling(Graph::grid(3, 5), 0,
                                                   std::vector<long long>(22, 0))),
                    domain_error);
}
