#include <doctest.h>

#include "gridmagic/json_io.hpp"

using namespace gridmagic;
using nlohmann::json;

TEST_CASE("graph serialization") {
    json j = graph_to_json(Graph::torus(2, 4));
    CHECK(j["rows"] == 2);
    CHECK(j["cols"] == 4);
    CHECK(j["topology"] == "torus");
    REQUIRE(j["edges"].size() == 12);
    CHECK(j["edges"][0]["index"] == 0);
    CHECK(j["edges"][0]["kind"] == "horizontal");
    CHECK(j["edges"][0]["u"] == json::array({0, 0}));
    CHECK(j["edges"][0]["v"] == json::array({0, 1}));
    CHECK(j["edges"][0]["slot"] == 0);
    CHECK(j["edges"][11]["kind"] == "wrap-horizontal");
}

TEST_CASE("labelling round-trip") {
    MagicLabelling w = gorenstein_witness(WitnessCase::even_even_t4, 4, 4);
    json j = labelling_to_json(w);
    MagicLabelling back = labelling_from_json(j);
    CHECK(back.sum == w.sum);
    CHECK(back.labels == w.labels);
    CHECK(back.graph == w.graph);

    json broken = j;
    broken["labels"].push_back(1);
    CHECK_THROWS_AS(labelling_from_json(broken), std::invalid_argument);
    json bad_topo = j;
    bad_topo["graph"]["topology"] = "klein-bottle";
    CHECK_THROWS_AS(labelling_from_json(bad_topo), std::invalid_argument);
}

TEST_CASE("validation report serialization") {
    Graph g = Graph::grid(2, 2);
    json ok = validation_to_json(validate(MagicLabelling(g, 2, {1, 1, 1, 1})));
    CHECK(ok["is_magic"] == true);
    CHECK(ok["is_interior"] == true);
    CHECK(ok["violations"].empty());
}

TEST_CASE("ehrhart serialization uses exact decimal strings") {
    EhrhartData e = ehrhart_polynomial(3, 4, Topology::grid);
    json j = ehrhart_to_json(e);
    CHECK(j["d"] == 6);
    REQUIRE(j["counts"].is_array());
    CHECK(j["counts"][0].is_string());
    CHECK(j["counts"][1] == "11");
    CHECK(j["counts"][2] == "57");
    CHECK(j["h"] == json::array({"1", "4", "1"}));
    CHECK(j["coeffs_num"][0] == "1");
    CHECK(j["coeffs_den"][6] == "120");
    CHECK(j["gorenstein"]["verdict"] == true);
    CHECK(j["gorenstein"]["index"] == 5);
    CHECK(j["series"] == "(z^2 + 4z + 1) / (1-z)^7");
}

TEST_CASE("recurrence round-trip preserves backward runs") {
    std::vector<Rat> fib{Rat(1), Rat(1), Rat(2), Rat(3), Rat(5), Rat(8), Rat(13), Rat(21)};
    Recurrence rec = berlekamp_massey(fib);
    Recurrence back = recurrence_from_json(recurrence_to_json(rec));
    CHECK(back.order == rec.order);
    CHECK(back.coeffs == rec.coeffs);
    CHECK(back.seed == rec.seed);
    CHECK(extend(back, Direction::backward, 5) == extend(rec, Direction::backward, 5));
}

TEST_CASE("reports serialize with pass flags") {
    json j = reciprocity_to_json(verify_reciprocity(2, 3));
    CHECK(j["all_pass"] == true);
    REQUIRE(j["rows"].size() == 4);
    CHECK(j["rows"][1]["sign"] == -1);
    CHECK(j["rows"][1]["forward"] == "1");
    CHECK(j["rows"][1]["backward"] == "-1");

    json p = power_to_json(power_recurrence(2, 2, 3));
    CHECK(p["all_pass"] == true);
    CHECK(p["recurrence"]["order"] == 3);
}

TEST_CASE("decomposition serialization") {
    MagicLabelling w = gorenstein_witness(WitnessCase::grid2xn_t3, 2, 4);
    json j = decomposition_to_json(decompose(w));
    CHECK(j["sum"] == 3);
    CHECK(j["layers"].size() == 3);

    json e = labellings_to_json(enumerate_labellings(Graph::grid(2, 2), 1, CountMode::all, 10));
    CHECK(e["count"] == 2);
    CHECK(e["labellings"].size() == 2);
}
