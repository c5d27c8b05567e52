#include "gridmagic.h"

#include "gridmagic/acceptance.hpp"
#include "gridmagic/config.hpp"
#include "gridmagic/counting.hpp"
#include "gridmagic/decompose.hpp"
#include "gridmagic/ehrhart.hpp"
#include "gridmagic/json_io.hpp"
#include "gridmagic/recurrence.hpp"

#include <cstdlib>
#include <cstring>

using namespace gridmagic;
using nlohmann::json;

struct gm_graph {
    Graph g;
};
struct gm_labelling {
    MagicLabelling l;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs fn, translating exceptions into status codes + gm_last_error().
template <class Fn>
gm_status guarded(Fn&& fn) {
    try {
        fn();
        return GM_OK;
    } catch (const internal_error& e) {
        t_last_error = e.what();
        return GM_EINTERNAL;
    } catch (const domain_error& e) {
        t_last_error = e.what();
        return GM_EDOMAIN;
    } catch (const json::exception& e) {
        t_last_error = e.what();
        return GM_EINVAL;
    } catch (const std::invalid_argument& e) {
        t_last_error = e.what();
        return GM_EINVAL;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return GM_EINTERNAL;
    }
}

void emit(char** out, const std::string& s) {
    if (!out) throw std::invalid_argument("null output parameter");
    *out = dup_string(s);
    if (!*out) throw std::bad_alloc();
}

void emit_json(char** out, const json& j) { emit(out, j.dump()); }

Graph build(int rows, int cols, const char* topology) {
    if (!topology) throw std::invalid_argument("null topology");
    Topology t = topology_from_string(topology);
    return t == Topology::grid ? Graph::grid(rows, cols) : Graph::torus(rows, cols);
}

}  // namespace

extern "C" {

const char* gm_last_error(void) { return t_last_error.c_str(); }

void gm_string_free(char* s) { std::free(s); }

void gm_set_threads(int threads) { config().threads = threads; }
void gm_set_state_cap(uint64_t cap) { config().state_cap = cap; }
void gm_set_enumerate_cap(uint64_t cap) { config().enumerate_cap = cap; }
void gm_set_precision_ceiling(int bits) { config().precision_ceiling_bits = bits; }

gm_status gm_graph_grid(int rows, int cols, gm_graph** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null output parameter");
        *out = new gm_graph{Graph::grid(rows, cols)};
    });
}

gm_status gm_graph_torus(int rows, int cols, gm_graph** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null output parameter");
        *out = new gm_graph{Graph::torus(rows, cols)};
    });
}

void gm_graph_free(gm_graph* g) { delete g; }

int gm_graph_rows(const gm_graph* g) { return g ? g->g.rows() : 0; }
int gm_graph_cols(const gm_graph* g) { return g ? g->g.cols() : 0; }
int gm_graph_vertex_count(const gm_graph* g) { return g ? g->g.vertex_count() : 0; }
int gm_graph_edge_count(const gm_graph* g) { return g ? g->g.edge_count() : 0; }
int gm_graph_is_bipartite(const gm_graph* g) { return g && g->g.is_bipartite() ? 1 : 0; }

gm_status gm_graph_to_json(const gm_graph* g, char** out) {
    return guarded([&] {
        if (!g) throw std::invalid_argument("null graph");
        emit_json(out, graph_to_json(g->g));
    });
}

gm_status gm_graph_bipartition_json(const gm_graph* g, char** out) {
    return guarded([&] {
        if (!g) throw std::invalid_argument("null graph");
        emit_json(out, bipartition_to_json(g->g));
    });
}

gm_status gm_graph_h_description_json(const gm_graph* g, char** out) {
    return guarded([&] {
        if (!g) throw std::invalid_argument("null graph");
        emit_json(out, hdescription_to_json(g->g));
    });
}

gm_status gm_labelling_create(const gm_graph* g, long long sum, const long long* labels,
                              int n_labels, gm_labelling** out) {
    return guarded([&] {
        if (!g || !labels || !out) throw std::invalid_argument("null parameter");
        std::vector<long long> lab(labels, labels + n_labels);
        *out = new gm_labelling{MagicLabelling(g->g, sum, std::move(lab))};
    });
}

gm_status gm_labelling_from_json(const char* json_text, gm_labelling** out) {
    return guarded([&] {
        if (!json_text || !out) throw std::invalid_argument("null parameter");
        *out = new gm_labelling{labelling_from_json(json::parse(json_text))};
    });
}

gm_status gm_labelling_to_json(const gm_labelling* l, char** out) {
    return guarded([&] {
        if (!l) throw std::invalid_argument("null labelling");
        emit_json(out, labelling_to_json(l->l));
    });
}

void gm_labelling_free(gm_labelling* l) { delete l; }

gm_status gm_labelling_validate_json(const gm_labelling* l, char** out) {
    return guarded([&] {
        if (!l) throw std::invalid_argument("null labelling");
        emit_json(out, validation_to_json(validate(l->l)));
    });
}

gm_status gm_witness(const char* case_id, int rows, int cols, gm_labelling** out) {
    return guarded([&] {
        if (!case_id || !out) throw std::invalid_argument("null parameter");
        *out = new gm_labelling{gorenstein_witness(witness_case_from_string(case_id), rows, cols)};
    });
}

gm_status gm_check_difflemma(const gm_labelling* l, int* holds) {
    return guarded([&] {
        if (!l || !holds) throw std::invalid_argument("null parameter");
        *holds = check_difflemma(l->l) ? 1 : 0;
    });
}

gm_status gm_count_grid(int rows, int cols, long long sum, const char* mode, char** out) {
    return guarded([&] {
        if (!mode) throw std::invalid_argument("null mode");
        emit(out, count_grid(rows, cols, sum, count_mode_from_string(mode)).value.get_str());
    });
}

gm_status gm_count(const gm_graph* g, long long sum, const char* mode, char** out) {
    return guarded([&] {
        if (!g || !mode) throw std::invalid_argument("null parameter");
        emit(out, count_generic(g->g, sum, count_mode_from_string(mode)).value.get_str());
    });
}

gm_status gm_enumerate_json(const gm_graph* g, long long sum, const char* mode, uint64_t limit,
                            char** out) {
    return guarded([&] {
        if (!g || !mode) throw std::invalid_argument("null parameter");
        auto ls = enumerate_labellings(g->g, sum, count_mode_from_string(mode), limit);
        emit_json(out, labellings_to_json(ls));
    });
}

gm_status gm_dimension(const gm_graph* g, long long* out) {
    return guarded([&] {
        if (!g || !out) throw std::invalid_argument("null parameter");
        *out = dimension(g->g);
    });
}

gm_status gm_ehrhart_json(int rows, int cols, const char* topology, char** out) {
    return guarded([&] {
        if (!topology) throw std::invalid_argument("null topology");
        EhrhartData e = ehrhart_polynomial(rows, cols, topology_from_string(topology));
        emit_json(out, ehrhart_to_json(e));
    });
}

gm_status gm_gorenstein_json(int rows, int cols, const char* topology, const char* mode,
                             long long t_max, char** out) {
    return guarded([&] {
        if (!topology || !mode) throw std::invalid_argument("null parameter");
        Topology topo = topology_from_string(topology);
        GorensteinResult r =
            gorenstein_check(rows, cols, topo, gorenstein_mode_from_string(mode), t_max);
        emit_json(out, gorenstein_to_json(r, rows, cols, topo));
    });
}

gm_status gm_kasteleyn(int m, int n, char** out) {
    return guarded([&] { emit(out, kasteleyn(m, n).get_str()); });
}

gm_status gm_transfer_recurrence_json(int m, long long t, char** out) {
    return guarded([&] {
        TransferMatrix a = transfer_matrix(m, t);
        emit_json(out, recurrence_to_json(char_poly_recurrence(a)));
    });
}

gm_status gm_minimal_recurrence_json(int m, long long t, long long terms, char** out) {
    return guarded([&] {
        long long len = terms;
        if (len <= 0) {
            double states = 1.0;
            for (int i = 0; i < m; ++i) states *= static_cast<double>(t + 1);
            if (states > 1e6) throw cap_exceeded("(t+1)^m too large for the default length");
            len = 4 * static_cast<long long>(states) + 4;
        }
        std::vector<Int> seq = tiling_sequence(m, t, len);
        std::vector<Rat> rseq(seq.begin(), seq.end());
        emit_json(out, recurrence_to_json(berlekamp_massey(rseq)));
    });
}

gm_status gm_berlekamp_massey_json(const char* seq_json, char** out) {
    return guarded([&] {
        if (!seq_json) throw std::invalid_argument("null sequence");
        json j = json::parse(seq_json);
        if (!j.is_array()) throw std::invalid_argument("sequence must be a JSON array");
        std::vector<Rat> seq;
        for (const auto& v : j) {
            if (v.is_string())
                seq.push_back(rat_from_string(v.get<std::string>()));
            else if (v.is_number_integer())
                seq.push_back(rat_of(v.get<long long>()));
            else
                throw std::invalid_argument("sequence entries must be integers or strings");
        }
        emit_json(out, recurrence_to_json(berlekamp_massey(seq)));
    });
}

gm_status gm_extend_json(const char* recurrence_json, const char* direction, long long count,
                         char** out) {
    return guarded([&] {
        if (!recurrence_json || !direction) throw std::invalid_argument("null parameter");
        Recurrence rec = recurrence_from_json(json::parse(recurrence_json));
        std::string dir(direction);
        if (dir != "forward" && dir != "backward")
            throw std::invalid_argument("direction must be 'forward' or 'backward'");
        auto vals = extend(rec, dir == "forward" ? Direction::forward : Direction::backward,
                           count);
        json values = json::array(), indices = json::array();
        for (long long k = 0; k < count; ++k) {
            values.push_back(rat_to_string(vals[k]));
            indices.push_back(dir == "forward" ? rec.seed_index + rec.order + k
                                               : rec.seed_index - 1 - k);
        }
        emit_json(out, json{{"direction", dir}, {"indices", indices}, {"values", values}});
    });
}

gm_status gm_reciprocity_json(int m, long long n_max, char** out) {
    return guarded([&] { emit_json(out, reciprocity_to_json(verify_reciprocity(m, n_max))); });
}

gm_status gm_power_json(int m, long long t, long long n_max, char** out) {
    return guarded([&] { emit_json(out, power_to_json(power_recurrence(m, t, n_max))); });
}

gm_status gm_decompose_json(const gm_labelling* l, char** out) {
    return guarded([&] {
        if (!l) throw std::invalid_argument("null labelling");
        emit_json(out, decomposition_to_json(decompose(l->l)));
    });
}

gm_status gm_decompose_render(const gm_labelling* l, char** out) {
    return guarded([&] {
        if (!l) throw std::invalid_argument("null labelling");
        Decomposition dec = decompose(l->l);
        std::string art;
        for (std::size_t i = 0; i < dec.layers.size(); ++i) {
            art += "layer " + std::to_string(i + 1) + ":\n";
            art += render_tiling(l->l.graph, dec.layers[i]);
        }
        if (dec.layers.empty()) art = "(sum 0: empty stacking)\n";
        emit(out, art);
    });
}

gm_status gm_selftest(int criterion, gm_selftest_cb cb, void* user, int* all_passed) {
    return guarded([&] {
        std::vector<int> only;
        if (criterion != 0) only.push_back(criterion);
        auto results = run_acceptance(
            [&](const CriterionResult& r) {
                if (cb) cb(r.id, r.name.c_str(), r.pass ? 1 : 0, r.seconds, r.detail.c_str(), user);
            },
            only);
        if (results.empty()) throw std::invalid_argument("no such criterion");
        bool ok = true;
        for (const auto& r : results) ok = ok && r.pass;
        if (all_passed) *all_passed = ok ? 1 : 0;
    });
}

}  // extern "C"
