#include "gridmagic/json_io.hpp"

#include "gridmagic/common.hpp"

namespace gridmagic {

using nlohmann::json;

nlohmann::json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) {
        edges.push_back({{"index", e.index},
                         {"u", {e.u.row, e.u.col}},
                         {"v", {e.v.row, e.v.col}},
                         {"kind", to_string(e.kind)},
                         {"slot", e.slot}});
    }
    return {{"rows", g.rows()},
            {"cols", g.cols()},
            {"topology", to_string(g.topology())},
            {"edges", edges}};
}

nlohmann::json bipartition_to_json(const Graph& g) {
    json j;
    auto bp = g.bipartition();
    j["bipartite"] = bp.has_value();
    if (bp) j["classes"] = {bp->first, bp->second};
    return j;
}

nlohmann::json hdescription_to_json(const Graph& g) {
    HDescription h = h_description(g);
    json eq = json::array();
    for (int v = 0; v < static_cast<int>(h.equalities.size()); ++v) {
        Vertex vx = g.vertex(v);
        eq.push_back({{"vertex", {vx.row, vx.col}}, {"edges", h.equalities[v]}});
    }
    return {{"equalities", eq},
            {"nonnegativity", h.num_edges},
            {"odd_set_omitted", h.odd_set_omitted}};
}

nlohmann::json labelling_to_json(const MagicLabelling& l) {
    return {{"graph",
             {{"rows", l.graph.rows()},
              {"cols", l.graph.cols()},
              {"topology", to_string(l.graph.topology())}}},
            {"sum", l.sum},
            {"labels", l.labels}};
}

MagicLabelling labelling_from_json(const nlohmann::json& j) {
    const json& gj = j.at("graph");
    Topology topo = topology_from_string(gj.at("topology").get<std::string>());
    int rows = gj.at("rows").get<int>();
    int cols = gj.at("cols").get<int>();
    Graph g = topo == Topology::grid ? Graph::grid(rows, cols) : Graph::torus(rows, cols);
    long long sum = j.at("sum").get<long long>();
    std::vector<long long> labels = j.at("labels").get<std::vector<long long>>();
    return MagicLabelling(std::move(g), sum, std::move(labels));
}

nlohmann::json validation_to_json(const ValidationReport& r) {
    return {{"is_magic", r.is_magic},
            {"is_interior", r.is_interior},
            {"violations", r.violations}};
}

namespace {

json int_array(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(x.get_str());
    return a;
}

std::string poly_in_z(const std::vector<Int>& coeffs) {
    // descending powers, e.g. "z^2 + 4z + 1"
    std::string s;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const Int& c = coeffs[k];
        if (c == 0 && coeffs.size() > 1) continue;
        if (!s.empty()) s += c >= 0 ? " + " : " - ";
        Int a = c >= 0 ? c : Int(-c);
        if (k == 0)
            s += a.get_str();
        else {
            if (a != 1) s += a.get_str();
            s += k == 1 ? "z" : "z^" + std::to_string(k);
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace

nlohmann::json ehrhart_to_json(const EhrhartData& e) {
    json coeffs_num = json::array(), coeffs_den = json::array();
    for (const Rat& c : e.coeffs) {
        coeffs_num.push_back(c.get_num().get_str());
        coeffs_den.push_back(c.get_den().get_str());
    }
    json gor = {{"verdict", e.gorenstein}, {"mode", "hvector"}};
    gor["index"] = e.gorenstein_index ? json(*e.gorenstein_index) : json(nullptr);
    return {{"rows", e.rows},
            {"cols", e.cols},
            {"topology", to_string(e.topology)},
            {"d", e.d},
            {"counts", int_array(e.counts)},
            {"coeffs_num", coeffs_num},
            {"coeffs_den", coeffs_den},
            {"h", int_array(e.h)},
            {"series", ehrhart_series_string(e)},
            {"gorenstein", gor}};
}

std::string ehrhart_series_string(const EhrhartData& e) {
    return "(" + poly_in_z(e.h) + ") / (1-z)^" + std::to_string(e.d + 1);
}

nlohmann::json gorenstein_to_json(const GorensteinResult& r, int rows, int cols,
                                  Topology topology) {
    json j = {{"rows", rows},
              {"cols", cols},
              {"topology", to_string(topology)},
              {"verdict", r.verdict},
              {"mode", to_string(r.mode)},
              {"point", r.point},
              {"detail", r.detail}};
    j["index"] = r.index ? json(*r.index) : json(nullptr);
    if (!r.h.empty()) j["h"] = int_array(r.h);
    return j;
}

nlohmann::json recurrence_to_json(const Recurrence& rec) {
    json coeffs = json::array(), seed = json::array();
    for (const Rat& c : rec.coeffs) coeffs.push_back(rat_to_string(c));
    for (const Rat& s : rec.seed) seed.push_back(rat_to_string(s));
    return {{"order", rec.order},
            {"coeffs", coeffs},
            {"seed_index", rec.seed_index},
            {"seed", seed},
            {"formula", format_recurrence(rec)}};
}

Recurrence recurrence_from_json(const nlohmann::json& j) {
    Recurrence rec;
    rec.order = j.at("order").get<long long>();
    rec.seed_index = j.value("seed_index", 0LL);
    for (const auto& c : j.at("coeffs")) rec.coeffs.push_back(rat_from_string(c.get<std::string>()));
    for (const auto& s : j.at("seed")) rec.seed.push_back(rat_from_string(s.get<std::string>()));
    if (rec.order != static_cast<long long>(rec.coeffs.size()) ||
        rec.order != static_cast<long long>(rec.seed.size()))
        throw std::invalid_argument("recurrence order does not match coeffs/seed length");
    return rec;
}

namespace {

json reciprocity_rows(const std::vector<ReciprocityRow>& rows) {
    json a = json::array();
    for (const auto& r : rows) {
        a.push_back({{"n", r.n},
                     {"forward", r.forward.get_str()},
                     {"backward", rat_to_string(r.backward)},
                     {"sign", r.sign},
                     {"pass", r.pass}});
    }
    return a;
}

}  // namespace

nlohmann::json reciprocity_to_json(const ReciprocityReport& rep) {
    return {{"m", rep.m},
            {"ell", rep.ell},
            {"recurrence", recurrence_to_json(rep.rec)},
            {"rows", reciprocity_rows(rep.rows)},
            {"odd_zero_check", rep.odd_zero_check},
            {"all_pass", rep.all_pass}};
}

nlohmann::json power_to_json(const PowerReport& rep) {
    return {{"m", rep.m},
            {"t", rep.t},
            {"recurrence", recurrence_to_json(rep.rec)},
            {"rows", reciprocity_rows(rep.rows)},
            {"all_pass", rep.all_pass}};
}

nlohmann::json decomposition_to_json(const Decomposition& d) {
    return {{"sum", d.sum}, {"layers", d.layers}};
}

nlohmann::json labellings_to_json(const std::vector<MagicLabelling>& ls) {
    json a = json::array();
    for (const auto& l : ls) a.push_back(labelling_to_json(l));
    return {{"count", ls.size()}, {"labellings", a}};
}

}  // namespace gridmagic
