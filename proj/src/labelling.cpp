#include "gridmagic/labelling.hpp"

#include "gridmagic/common.hpp"

#include <map>

namespace gridmagic {

MagicLabelling::MagicLabelling(Graph g, long long s, std::vector<long long> lab)
    : graph(std::move(g)), sum(s), labels(std::move(lab)) {
    if (sum < 0) throw std::invalid_argument("sum must be nonnegative");
    if (static_cast<int>(labels.size()) != graph.edge_count())
        throw std::invalid_argument("label vector length " + std::to_string(labels.size()) +
                                    " does not match edge count " +
                                    std::to_string(graph.edge_count()));
}

ValidationReport validate(const MagicLabelling& l) {
    ValidationReport rep;
    rep.is_magic = true;
    for (int e = 0; e < l.graph.edge_count(); ++e) {
        if (l.labels[e] < 0) {
            rep.is_magic = false;
            rep.violations.push_back("edge " + std::to_string(e) + ": negative label");
        }
    }
    for (int v = 0; v < l.graph.vertex_count(); ++v) {
        long long s = 0;
        for (int ei : l.graph.incident(v)) s += l.labels[ei];
        if (s != l.sum) {
            rep.is_magic = false;
            Vertex vx = l.graph.vertex(v);
            rep.violations.push_back("vertex (" + std::to_string(vx.row) + "," +
                                     std::to_string(vx.col) + "): sum " + std::to_string(s) +
                                     " != " + std::to_string(l.sum));
        }
    }
    rep.is_interior = rep.is_magic;
    for (int e = 0; e < l.graph.edge_count() && rep.is_interior; ++e)
        if (l.labels[e] < 1) rep.is_interior = false;
    return rep;
}

std::string to_string(WitnessCase c) {
    switch (c) {
        case WitnessCase::grid2xn_t3: return "2xn-t3";
        case WitnessCase::grid3xn_t5: return "3xn-t5";
        case WitnessCase::grid4x4_t4: return "4x4-t4";
        case WitnessCase::even_even_t4: return "even-even-t4";
        case WitnessCase::even_even_t5: return "even-even-t5";
        case WitnessCase::even_odd_t5: return "even-odd-t5";
        case WitnessCase::even_odd_t5_flipped: return "even-odd-t5-flipped";
    }
    return "?";
}

const std::vector<WitnessCase>& all_witness_cases() {
    static const std::vector<WitnessCase> cases = {
        WitnessCase::grid2xn_t3,   WitnessCase::grid3xn_t5,  WitnessCase::grid4x4_t4,
        WitnessCase::even_even_t4, WitnessCase::even_even_t5, WitnessCase::even_odd_t5,
        WitnessCase::even_odd_t5_flipped,
    };
    return cases;
}

WitnessCase witness_case_from_string(const std::string& s) {
    for (WitnessCase c : all_witness_cases())
        if (to_string(c) == s) return c;
    throw std::invalid_argument("unknown witness case '" + s + "'");
}

namespace {

// Canonical edge index arithmetic for grid graphs: all horizontals
// (row-major) come first, then all verticals (row-major).
int h_index(const Graph& g, int r, int c) { return r * (g.cols() - 1) + c; }
int v_index(const Graph& g, int r, int c) {
    return g.rows() * (g.cols() - 1) + r * g.cols() + c;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw domain_error(msg);
}

MagicLabelling even_odd_t5_base(int m, int n) {
    Graph g = Graph::grid(m, n);
    std::vector<long long> lab(g.edge_count(), 1);
    for (int r : {0, m - 1})
        for (int c = 0; c + 1 < n; ++c) lab[h_index(g, r, c)] = (c == 1) ? 1 : 2;
    for (int r = 0; r + 1 < m; ++r)
        for (int c = 0; c < n; ++c) {
            long long w = 1;
            if (c == 0 || c == n - 1)
                w = (r % 2 == 0) ? 3 : 1;
            else if (c == 1 || c == 2)
                w = (r % 2 == 0) ? 2 : 1;
            else
                w = (r % 2 == 1) ? 2 : 1;
            lab[v_index(g, r, c)] = w;
        }
    return {std::move(g), 5, std::move(lab)};
}

}  // namespace

MagicLabelling gorenstein_witness(WitnessCase wc, int m, int n) {
    switch (wc) {
        case WitnessCase::grid2xn_t3: {
            require(m == 2 && n >= 3, "2xn-t3 requires m=2, n>=3");
            Graph g = Graph::grid(m, n);
            std::vector<long long> lab(g.edge_count(), 1);
            lab[v_index(g, 0, 0)] = 2;
            lab[v_index(g, 0, n - 1)] = 2;
            return {std::move(g), 3, std::move(lab)};
        }
        case WitnessCase::grid3xn_t5: {
            require(m == 3 && n >= 2 && n % 2 == 0, "3xn-t5 requires m=3, n even");
            Graph g = Graph::grid(m, n);
            std::vector<long long> lab(g.edge_count(), 1);
            for (int c = 0; c + 1 < n; ++c) {
                // 1-based horizontal position i = c+1
                long long top = (c % 2 == 0) ? 3 : 1;
                long long mid = (c % 2 == 0) ? 1 : 2;
                lab[h_index(g, 0, c)] = top;
                lab[h_index(g, 1, c)] = mid;
                lab[h_index(g, 2, c)] = top;
            }
            for (int r = 0; r < 2; ++r) {
                lab[v_index(g, r, 0)] = 2;
                lab[v_index(g, r, n - 1)] = 2;
            }
            return {std::move(g), 5, std::move(lab)};
        }
        case WitnessCase::grid4x4_t4: {
            require(m == 4 && n == 4, "4x4-t4 requires m=n=4");
            Graph g = Graph::grid(m, n);
            std::vector<long long> lab(g.edge_count(), 1);
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.degree(v) == 2)
                    for (int ei : g.incident(v)) lab[ei] = 2;
            return {std::move(g), 4, std::move(lab)};
        }
        case WitnessCase::even_even_t4: {
            require(m >= 2 && n >= 2 && m % 2 == 0 && n % 2 == 0,
                    "even-even-t4 requires m, n even");
            Graph g = Graph::grid(m, n);
            std::vector<long long> lab(g.edge_count(), 1);
            for (int r : {0, m - 1})
                for (int c = 0; c + 1 < n; c += 2) lab[h_index(g, r, c)] = 2;
            for (int c : {0, n - 1})
                for (int r = 0; r + 1 < m; r += 2) lab[v_index(g, r, c)] = 2;
            return {std::move(g), 4, std::move(lab)};
        }
        case WitnessCase::even_even_t5: {
            require(m >= 2 && n >= 4 && m % 2 == 0 && n % 2 == 0,
                    "even-even-t5 requires m even, n even >= 4");
            Graph g = Graph::grid(m, n);
            std::vector<long long> lab(g.edge_count(), 1);
            for (int r : {0, m - 1})
                for (int c = 0; c + 1 < n; ++c)
                    lab[h_index(g, r, c)] = (c == 0 || c == n - 2 || c % 2 == 1) ? 2 : 1;
            for (int r = 0; r + 1 < m; ++r)
                for (int c = 0; c < n; ++c) {
                    long long w = 1;
                    if (c == 0 || c == n - 1)
                        w = (r % 2 == 0) ? 3 : 1;
                    else if (c == 1 || c == n - 2)
                        w = (r % 2 == 1) ? 2 : 1;
                    else
                        w = (r % 2 == 0) ? 2 : 1;
                    lab[v_index(g, r, c)] = w;
                }
            return {std::move(g), 5, std::move(lab)};
        }
        case WitnessCase::even_odd_t5: {
            require(m >= 4 && m % 2 == 0 && n >= 5 && n % 2 == 1,
                    "even-odd-t5 requires m even >= 4, n odd >= 5");
            return even_odd_t5_base(m, n);
        }
        case WitnessCase::even_odd_t5_flipped: {
            require(m >= 4 && m % 2 == 0 && n >= 5 && n % 2 == 1,
                    "even-odd-t5-flipped requires m even >= 4, n odd >= 5");
            MagicLabelling base = even_odd_t5_base(m, n);
            const Graph& g = base.graph;
            std::vector<long long> lab(g.edge_count());
            for (int r = 0; r < m; ++r)
                for (int c = 0; c + 1 < n; ++c)
                    lab[h_index(g, r, c)] = base.labels[h_index(g, r, n - 2 - c)];
            for (int r = 0; r + 1 < m; ++r)
                for (int c = 0; c < n; ++c)
                    lab[v_index(g, r, c)] = base.labels[v_index(g, r, n - 1 - c)];
            return {base.graph, 5, std::move(lab)};
        }
    }
    throw std::invalid_argument("bad witness case");
}

bool check_difflemma(const MagicLabelling& l) {
    const Graph& g = l.graph;
    if (g.topology() != Topology::grid || g.rows() != 3 || g.cols() % 2 != 0)
        throw domain_error("difference lemma applies to grid(3, n) with n even");
    long long t = l.sum;
    for (int c = 0; c + 1 < g.cols(); ++c) {
        long long a = l.labels[h_index(g, 0, c)];
        long long b = l.labels[h_index(g, 1, c)];
        long long cc = l.labels[h_index(g, 2, c)];
        int i = c + 1;  // the lemma's 1-based position
        long long expected = (i % 2 == 0) ? b - a : t - a + b;
        if (cc != expected) return false;
    }
    return true;
}

}  // namespace gridmagic
