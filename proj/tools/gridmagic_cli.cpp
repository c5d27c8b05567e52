// gridmagic: exact magic-labelling counts, Ehrhart data, recurrences and
// domino stackings for grid and torus graphs. Thin front end over the C API.

#include "gridmagic.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct CliError {
    int exit_code;
    std::string message;
};

void check(gm_status s) {
    if (s == GM_OK) return;
    throw CliError{s == GM_EINVAL ? 2 : 1, gm_last_error()};
}

std::string take(char* s) {
    std::string out = s ? s : "";
    gm_string_free(s);
    return out;
}

struct GraphHandle {
    gm_graph* g = nullptr;
    ~GraphHandle() { gm_graph_free(g); }
};

struct LabellingHandle {
    gm_labelling* l = nullptr;
    ~LabellingHandle() { gm_labelling_free(l); }
};

void build_graph(int rows, int cols, const std::string& topology, GraphHandle& h) {
    check(topology == "torus" ? gm_graph_torus(rows, cols, &h.g)
                              : gm_graph_grid(rows, cols, &h.g));
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw CliError{1, "cannot write " + path};
    f << text << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw CliError{1, "cannot read " + path};
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string join(const json& arr, const std::string& sep) {
    std::string out;
    for (const auto& v : arr) {
        if (!out.empty()) out += sep;
        out += v.is_string() ? v.get<std::string>() : v.dump();
    }
    return out;
}

void print_ehrhart_text(const json& j) {
    std::cout << "dimension: " << j["d"] << "\n";
    std::string coeffs;
    for (std::size_t i = 0; i < j["coeffs_num"].size(); ++i) {
        if (i) coeffs += " ";
        std::string num = j["coeffs_num"][i], den = j["coeffs_den"][i];
        coeffs += den == "1" ? num : num + "/" + den;
    }
    std::cout << "polynomial (constant first): " << coeffs << "\n";
    std::cout << "h-vector: (" << join(j["h"], ", ") << ")\n";
    std::cout << "series: " << j["series"].get<std::string>() << "\n";
    const json& g = j["gorenstein"];
    std::cout << "gorenstein: " << (g["verdict"].get<bool>() ? "yes" : "no");
    if (!g["index"].is_null()) std::cout << " (index " << g["index"] << ")";
    std::cout << "\n";
}

void selftest_print(int id, const char* name, int pass, double seconds, const char* detail,
                    void* user) {
    (void)user;
    std::printf("[%2d] %-30s %s  %8.2fs  %s\n", id, name, pass ? "PASS" : "FAIL", seconds,
                detail);
    std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "gridmagic: exact magic-labelling counting, Ehrhart/Gorenstein analysis,\n"
        "tiling recurrences and reciprocity, and domino stackings for grid and\n"
        "torus graphs. All numeric output is exact decimal."};
    app.require_subcommand(1);

    std::string format = "text";
    int threads = 0;
    if (const char* env = std::getenv("GRIDMAGIC_THREADS")) threads = std::atoi(env);
    std::uint64_t state_cap = 100000, enum_cap = 1000000;
    int prec_ceiling = 4096;
    app.add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--threads", threads,
                   "Worker threads (0 = hardware); default from GRIDMAGIC_THREADS");
    app.add_option("--state-cap", state_cap, "Transfer-matrix state cap (default 1e5)");
    app.add_option("--enum-cap", enum_cap, "Enumeration cap (default 1e6)");
    app.add_option("--prec-ceiling", prec_ceiling,
                   "Kasteleyn precision ceiling in bits (default 4096)");

    int rows = 0, cols = 0;
    long long sum = 1, sum_max = -1, tmax = 8, nmax = 10, terms = 0, count_n = 5;
    std::string topology = "grid", mode = "all", gmode = "auto", engine = "minimal";
    std::string in_path, out_path, case_id, direction = "backward", seq;
    std::uint64_t limit = 1000000;
    bool render = false;
    int criterion = 0;

    auto add_dims = [&](CLI::App* cmd, bool with_topology = true) {
        cmd->add_option("--rows,-m", rows, "Number of rows m")->required();
        cmd->add_option("--cols,-n", cols, "Number of columns n")->required();
        if (with_topology)
            cmd->add_option("--topology", topology, "grid or torus (default grid)")
                ->check(CLI::IsMember({"grid", "torus"}));
    };

    CLI::App* c_count = app.add_subcommand("count", "Count magic labellings of sum t");
    add_dims(c_count);
    c_count->add_option("--sum,-t", sum, "Sum t (default 1)");
    c_count->add_option("--sum-max", sum_max, "Emit CSV for t = 0..sum-max instead");
    c_count->add_option("--mode", mode, "all or interior")
        ->check(CLI::IsMember({"all", "interior"}));

    CLI::App* c_enum = app.add_subcommand("enumerate", "List magic labellings of sum t");
    add_dims(c_enum);
    c_enum->add_option("--sum,-t", sum, "Sum t (default 1)");
    c_enum->add_option("--mode", mode, "all or interior")
        ->check(CLI::IsMember({"all", "interior"}));
    c_enum->add_option("--limit", limit, "Enumeration cap (default 1e6)");
    c_enum->add_option("--out", out_path, "Write JSON to a file");

    CLI::App* c_ehr = app.add_subcommand(
        "ehrhart", "Ehrhart polynomial, h-vector and series of the matching polytope");
    add_dims(c_ehr);

    CLI::App* c_hv = app.add_subcommand("hvector", "h-vector of the matching polytope");
    add_dims(c_hv);

    CLI::App* c_gor = app.add_subcommand("gorenstein", "Gorenstein verdict and index");
    add_dims(c_gor);
    c_gor->add_option("--gmode", gmode, "hvector, functional, or auto (default)")
        ->check(CLI::IsMember({"hvector", "functional", "auto"}));
    c_gor->add_option("--tmax", tmax, "Evidence window for functional mode (default 8)");

    CLI::App* c_dim = app.add_subcommand("dimension", "Dimension of the matching polytope");
    add_dims(c_dim);

    CLI::App* c_kas =
        app.add_subcommand("kasteleyn", "Closed-form domino tiling count T(m,n,1)");
    add_dims(c_kas, false);

    CLI::App* c_rec = app.add_subcommand(
        "recurrence", "Linear recurrence for (T(m,n,t))_n, fixed m and t");
    c_rec->add_option("--rows,-m", rows, "Board width m")->required();
    c_rec->add_option("--sum,-t", sum, "Sum t (default 1)");
    c_rec->add_option("--engine", engine, "minimal (Berlekamp-Massey) or charpoly")
        ->check(CLI::IsMember({"minimal", "charpoly"}));
    c_rec->add_option("--terms", terms, "Sequence length fed to the fit (0 = auto)");
    c_rec->add_option("--seq", seq,
                      "Fit a recurrence to this comma-separated integer sequence instead");
    c_rec->add_option("--extend", count_n, "Also print this many extended values");
    c_rec->add_option("--direction", direction, "forward or backward (with --extend)")
        ->check(CLI::IsMember({"forward", "backward"}));

    CLI::App* c_recip = app.add_subcommand(
        "reciprocity", "Verify T(m,n,1) = (-1)^(ceil(m/2) n) T(m,-n-2,1)");
    c_recip->add_option("--rows,-m", rows, "Board width m")->required();
    c_recip->add_option("--nmax", nmax, "Check n = 0..nmax (default 10)");

    CLI::App* c_pow = app.add_subcommand(
        "power", "Minimal recurrence and reciprocity for (T(m,n,1)^t)_n");
    c_pow->add_option("--rows,-m", rows, "Board width m")->required();
    c_pow->add_option("--sum,-t", sum, "Exponent t")->required();
    c_pow->add_option("--nmax", nmax, "Check n = 0..nmax (default 8)");

    CLI::App* c_dec = app.add_subcommand(
        "decompose", "Decompose a magic labelling into stacked perfect matchings");
    c_dec->add_option("--in", in_path, "Labelling JSON file")->required();
    c_dec->add_option("--out", out_path, "Write the decomposition JSON to a file");
    c_dec->add_flag("--render", render, "Print each layer as an H/V tiling diagram");

    CLI::App* c_wit = app.add_subcommand("witness", "Construct a Gorenstein interior point");
    c_wit->add_option("--case", case_id,
                      "2xn-t3, 3xn-t5, 4x4-t4, even-even-t4, even-even-t5, even-odd-t5, "
                      "even-odd-t5-flipped")
        ->required();
    add_dims(c_wit, false);
    c_wit->add_option("--out", out_path, "Write the labelling JSON to a file");

    CLI::App* c_self = app.add_subcommand("selftest", "Run the acceptance suite");
    c_self->add_option("--criterion", criterion, "Run a single criterion 1..15 (default all)");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    gm_set_threads(threads);
    gm_set_state_cap(state_cap);
    gm_set_enumerate_cap(enum_cap);
    gm_set_precision_ceiling(prec_ceiling);

    try {
        if (*c_count) {
            if (sum_max >= 0) {
                std::cout << "index,value\n";
                for (long long t = 0; t <= sum_max; ++t) {
                    char* s = nullptr;
                    if (topology == "grid") {
                        check(gm_count_grid(rows, cols, t, mode.c_str(), &s));
                    } else {
                        GraphHandle g;
                        build_graph(rows, cols, topology, g);
                        check(gm_count(g.g, t, mode.c_str(), &s));
                    }
                    std::cout << t << "," << take(s) << "\n";
                }
                return 0;
            }
            char* s = nullptr;
            if (topology == "grid") {
                check(gm_count_grid(rows, cols, sum, mode.c_str(), &s));
            } else {
                GraphHandle g;
                build_graph(rows, cols, topology, g);
                check(gm_count(g.g, sum, mode.c_str(), &s));
            }
            std::string value = take(s);
            if (format == "json")
                std::cout << json{{"rows", rows}, {"cols", cols},     {"topology", topology},
                                  {"sum", sum},   {"mode", mode},     {"value", value}}
                                 .dump()
                          << "\n";
            else
                std::cout << value << "\n";
        } else if (*c_enum) {
            GraphHandle g;
            build_graph(rows, cols, topology, g);
            char* s = nullptr;
            check(gm_enumerate_json(g.g, sum, mode.c_str(), limit, &s));
            std::string text = take(s);
            if (!out_path.empty() || format == "json") {
                write_output(out_path, text);
            } else {
                json j = json::parse(text);
                std::cout << j["count"] << " labelling(s)\n";
                for (const auto& l : j["labellings"]) std::cout << l["labels"].dump() << "\n";
            }
        } else if (*c_ehr || *c_hv) {
            char* s = nullptr;
            check(gm_ehrhart_json(rows, cols, topology.c_str(), &s));
            json j = json::parse(take(s));
            if (format == "json")
                std::cout << j.dump() << "\n";
            else if (*c_hv)
                std::cout << "(" << join(j["h"], ", ") << ")\n";
            else
                print_ehrhart_text(j);
        } else if (*c_gor) {
            if (gmode == "auto") gmode = topology == "torus" ? "functional" : "hvector";
            char* s = nullptr;
            check(gm_gorenstein_json(rows, cols, topology.c_str(), gmode.c_str(), tmax, &s));
            json j = json::parse(take(s));
            if (format == "json") {
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "gorenstein: " << (j["verdict"].get<bool>() ? "yes" : "no");
                if (!j["index"].is_null()) std::cout << " (index " << j["index"] << ")";
                if (j["point"].get<bool>()) std::cout << " [point]";
                std::cout << "\nmode: " << j["mode"].get<std::string>() << "\n";
                if (j.contains("h")) std::cout << "h-vector: (" << join(j["h"], ", ") << ")\n";
                std::cout << j["detail"].get<std::string>() << "\n";
            }
        } else if (*c_dim) {
            GraphHandle g;
            build_graph(rows, cols, topology, g);
            long long d = 0;
            check(gm_dimension(g.g, &d));
            if (format == "json")
                std::cout << json{{"rows", rows},
                                  {"cols", cols},
                                  {"topology", topology},
                                  {"dimension", d}}
                                 .dump()
                          << "\n";
            else
                std::cout << d << "\n";
        } else if (*c_kas) {
            char* s = nullptr;
            check(gm_kasteleyn(rows, cols, &s));
            std::string value = take(s);
            if (format == "json")
                std::cout << json{{"rows", rows}, {"cols", cols}, {"value", value}}.dump()
                          << "\n";
            else
                std::cout << value << "\n";
        } else if (*c_rec) {
            char* s = nullptr;
            if (!seq.empty()) {
                json arr = json::array();
                std::stringstream ss(seq);
                std::string item;
                while (std::getline(ss, item, ',')) arr.push_back(item);
                check(gm_berlekamp_massey_json(arr.dump().c_str(), &s));
            } else if (engine == "charpoly") {
                check(gm_transfer_recurrence_json(rows, sum, &s));
            } else {
                check(gm_minimal_recurrence_json(rows, sum, terms, &s));
            }
            std::string rec_text = take(s);
            json j = json::parse(rec_text);
            if (format == "json")
                std::cout << j.dump() << "\n";
            else
                std::cout << j["formula"].get<std::string>() << "\n"
                          << "order: " << j["order"] << ", seed: (" << join(j["seed"], ", ")
                          << ")\n";
            if (c_rec->count("--extend")) {
                char* e = nullptr;
                check(gm_extend_json(rec_text.c_str(), direction.c_str(), count_n, &e));
                json ej = json::parse(take(e));
                if (format == "json") {
                    std::cout << ej.dump() << "\n";
                } else {
                    for (std::size_t i = 0; i < ej["values"].size(); ++i)
                        std::cout << "a(" << ej["indices"][i] << ") = "
                                  << ej["values"][i].get<std::string>() << "\n";
                }
            }
        } else if (*c_recip) {
            char* s = nullptr;
            check(gm_reciprocity_json(rows, nmax, &s));
            json j = json::parse(take(s));
            if (format == "json") {
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "minimal recurrence: " << j["recurrence"]["formula"].get<std::string>()
                          << "\n";
                std::cout << "n,forward,backward,sign,pass\n";
                for (const auto& row : j["rows"])
                    std::cout << row["n"] << "," << row["forward"].get<std::string>() << ","
                              << row["backward"].get<std::string>() << "," << row["sign"] << ","
                              << (row["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
                std::cout << (j["all_pass"].get<bool>() ? "all pass" : "FAILURES") << "\n";
            }
            if (!j["all_pass"].get<bool>()) return 1;
        } else if (*c_pow) {
            char* s = nullptr;
            check(gm_power_json(rows, sum, nmax, &s));
            json j = json::parse(take(s));
            if (format == "json") {
                std::cout << j.dump() << "\n";
            } else {
                std::cout << j["recurrence"]["formula"].get<std::string>() << "\n";
                std::cout << "order: " << j["recurrence"]["order"] << "\n";
                std::cout << "n,forward,backward,sign,pass\n";
                for (const auto& row : j["rows"])
                    std::cout << row["n"] << "," << row["forward"].get<std::string>() << ","
                              << row["backward"].get<std::string>() << "," << row["sign"] << ","
                              << (row["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
                std::cout << (j["all_pass"].get<bool>() ? "all pass" : "FAILURES") << "\n";
            }
            if (!j["all_pass"].get<bool>()) return 1;
        } else if (*c_dec) {
            LabellingHandle l;
            check(gm_labelling_from_json(read_file(in_path).c_str(), &l.l));
            char* s = nullptr;
            check(gm_decompose_json(l.l, &s));
            std::string dec = take(s);
            if (!out_path.empty())
                write_output(out_path, dec);
            else
                std::cout << dec << "\n";
            if (render) {
                char* art = nullptr;
                check(gm_decompose_render(l.l, &art));
                std::cout << take(art);
            }
        } else if (*c_wit) {
            LabellingHandle l;
            check(gm_witness(case_id.c_str(), rows, cols, &l.l));
            char* s = nullptr;
            check(gm_labelling_to_json(l.l, &s));
            write_output(out_path, take(s));
        } else if (*c_self) {
            int all_passed = 0;
            check(gm_selftest(criterion, selftest_print, nullptr, &all_passed));
            std::cout << (all_passed ? "selftest: all criteria passed"
                                     : "selftest: FAILURES present")
                      << "\n";
            return all_passed ? 0 : 1;
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
