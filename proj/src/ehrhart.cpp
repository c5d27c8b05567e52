#include "gridmagic/ehrhart.hpp"

#include "gridmagic/parallel.hpp"

#include <algorithm>

namespace gridmagic {

namespace {

// Incremental row-echelon basis over Q for affine rank computation.
class RationalBasis {
public:
    explicit RationalBasis(std::size_t width) : width_(width) {}

    // Inserts v, reduced against the basis; returns true if it enlarged it.
    bool insert(std::vector<Rat> v) {
        for (const auto& row : rows_) {
            const Rat& x = v[row.pivot];
            if (x != 0) {
                Rat f = x;  // rows are normalized to pivot 1
                for (std::size_t j = row.pivot; j < width_; ++j) v[j] -= f * row.data[j];
            }
        }
        std::size_t p = 0;
        while (p < width_ && v[p] == 0) ++p;
        if (p == width_) return false;
        Rat inv = v[p];
        for (std::size_t j = p; j < width_; ++j) v[j] /= inv;
        rows_.push_back({p, std::move(v)});
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    struct Row {
        std::size_t pivot;
        std::vector<Rat> data;
    };
    std::size_t width_;
    std::vector<Row> rows_;
};

Int count_for(int rows, int cols, Topology topo, long long t, CountMode mode) {
    if (topo == Topology::grid) return count_grid(rows, cols, t, mode).value;
    Graph g = Graph::torus(rows, cols);
    return count_generic(g, t, mode).value;
}

std::vector<Int> counts_upto(int rows, int cols, Topology topo, long long t_max,
                             CountMode mode) {
    std::vector<Int> out(static_cast<std::size_t>(t_max) + 1);
    parallel_for(out.size(),
                 [&](std::size_t t) { out[t] = count_for(rows, cols, topo, (long long)t, mode); });
    return out;
}

}  // namespace

long long dimension_formula(int rows, int cols, Topology topology) {
    if (topology == Topology::grid)
        return static_cast<long long>(rows - 1) * (cols - 1);
    // the torus graph is transpose-symmetric
    long long a = std::min(rows, cols), b = std::max(rows, cols);
    if (a == 1) return b == 2 ? 0 : 1;  // single edge / n-cycle (b even)
    if (a == 2) {
        if (b == 2) return 1;  // 4-cycle
        return b % 2 == 0 ? b + 1 : b;
    }
    return a % 2 == 0 && b % 2 == 0 ? a * b + 1 : a * b;
}

long long dimension(const Graph& g) {
    auto matchings = perfect_matchings(g, config().enumerate_cap);
    if (matchings.empty())
        throw domain_error("empty polytope: the graph has no perfect matching");
    RationalBasis basis(g.edge_count());
    std::vector<Rat> base(g.edge_count(), 0), diff(g.edge_count());
    for (int e : matchings.front()) base[e] = 1;
    for (std::size_t i = 1; i < matchings.size(); ++i) {
        std::fill(diff.begin(), diff.end(), Rat(0));
        for (int e : matchings[i]) diff[e] = 1;
        for (int e = 0; e < g.edge_count(); ++e) diff[e] -= base[e];
        basis.insert(diff);
        if (basis.rank() == static_cast<std::size_t>(g.edge_count())) break;
    }
    long long rank = static_cast<long long>(basis.rank());
    long long formula = dimension_formula(g.rows(), g.cols(), g.topology());
    if (rank != formula)
        throw internal_error("dimension mismatch: affine rank " + std::to_string(rank) +
                             " vs case formula " + std::to_string(formula));
    return rank;
}

Rat evaluate_polynomial(std::span<const Rat> coeffs, const Rat& t) {
    Rat acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
    return acc;
}

namespace {

// Newton interpolation on nodes 0..d, expanded to monomial coefficients.
std::vector<Rat> interpolate_at_integers(std::span<const Int> values, long long d) {
    // forward differences
    std::vector<Rat> delta(values.begin(), values.begin() + d + 1);
    std::vector<Rat> newton(d + 1);
    newton[0] = delta[0];
    for (long long k = 1; k <= d; ++k) {
        for (long long i = 0; i <= d - k; ++i) delta[i] = delta[i + 1] - delta[i];
        newton[k] = delta[0];
    }
    // p(t) = sum_k newton[k]/k! * t(t-1)...(t-k+1)
    std::vector<Rat> coeffs(d + 1, Rat(0));
    std::vector<Rat> falling{Rat(1)};  // product so far
    Rat factorial = 1;
    for (long long k = 0; k <= d; ++k) {
        if (k > 0) {
            factorial *= static_cast<long>(k);
            // multiply falling by (t - (k-1))
            falling.push_back(Rat(0));
            for (std::size_t j = falling.size() - 1; j > 0; --j)
                falling[j] = falling[j - 1] - rat_of(k - 1) * falling[j];
            falling[0] *= rat_of(-(k - 1));
        }
        Rat w = newton[k] / factorial;
        for (std::size_t j = 0; j < falling.size(); ++j) coeffs[j] += w * falling[j];
    }
    return coeffs;
}

}  // namespace

std::vector<Int> h_vector(std::span<const Int> counts, long long d) {
    if (static_cast<long long>(counts.size()) < d + 1)
        throw std::invalid_argument("h_vector needs L(0..d)");
    std::vector<Int> h(d + 1);
    for (long long j = 0; j <= d; ++j) {
        Int acc = 0;
        for (long long i = 0; i <= j; ++i) {
            Int term = binomial(d + 1, i) * counts[j - i];
            if (i % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        if (acc < 0)
            throw domain_error("negative h-vector entry h_" + std::to_string(j) +
                               ": input counts are not the Ehrhart counts of a degree-" +
                               std::to_string(d) + " lattice polytope");
        h[j] = acc;
    }
    while (h.size() > 1 && h.back() == 0) h.pop_back();
    return h;
}

bool is_palindromic(std::span<const Int> h) {
    for (std::size_t j = 0; j < h.size(); ++j)
        if (h[j] != h[h.size() - 1 - j]) return false;
    return true;
}

bool is_unimodal(std::span<const Int> h) {
    std::size_t i = 0;
    while (i + 1 < h.size() && h[i] <= h[i + 1]) ++i;
    while (i + 1 < h.size() && h[i] >= h[i + 1]) ++i;
    return i + 1 >= h.size();
}

namespace {

void require_counting_domain(int rows, int cols, Topology topo) {
    Graph g = topo == Topology::grid ? Graph::grid(rows, cols) : Graph::torus(rows, cols);
    if (!g.is_bipartite())
        throw domain_error(
            "non-bipartite torus: lattice points of dilates differ from magic "
            "labellings (odd-set constraints)");
    if (!has_perfect_matching(g))
        throw domain_error("empty polytope: the graph has no perfect matching");
}

}  // namespace

EhrhartData ehrhart_polynomial(int rows, int cols, Topology topology) {
    require_counting_domain(rows, cols, topology);
    Graph g = topology == Topology::grid ? Graph::grid(rows, cols) : Graph::torus(rows, cols);
    EhrhartData data;
    data.rows = rows;
    data.cols = cols;
    data.topology = topology;
    data.d = dimension(g);
    data.counts = counts_upto(rows, cols, topology, data.d + 2, CountMode::all);
    if (data.counts[0] != 1) throw internal_error("L(0) != 1");
    data.coeffs = interpolate_at_integers(data.counts, data.d);
    for (long long t = data.d + 1; t <= data.d + 2; ++t) {
        Rat v = evaluate_polynomial(data.coeffs, rat_of(t));
        if (v != Rat(data.counts[t]))
            throw internal_error("held-out Ehrhart check failed at t=" + std::to_string(t));
    }
    data.h = h_vector(data.counts, data.d);
    data.gorenstein = is_palindromic(data.h);
    if (data.gorenstein)
        data.gorenstein_index = data.d + 1 - static_cast<long long>(data.h.size() - 1);
    return data;
}

GorensteinMode gorenstein_mode_from_string(const std::string& s) {
    if (s == "hvector") return GorensteinMode::hvector;
    if (s == "functional") return GorensteinMode::functional;
    throw std::invalid_argument("unknown gorenstein mode '" + s + "'");
}

std::string to_string(GorensteinMode m) {
    return m == GorensteinMode::hvector ? "hvector" : "functional";
}

GorensteinResult gorenstein_check(int rows, int cols, Topology topology, GorensteinMode mode,
                                  long long t_max) {
    require_counting_domain(rows, cols, topology);
    GorensteinResult res;
    res.mode = mode;
    if (mode == GorensteinMode::hvector) {
        EhrhartData data = ehrhart_polynomial(rows, cols, topology);
        res.verdict = data.gorenstein;
        res.index = data.gorenstein_index;
        res.h = data.h;
        res.point = data.d == 0;
        res.detail = res.point ? "point polytope" : "h-vector palindromicity";
        return res;
    }
    // functional mode: locate the first dilate with an interior point and
    // check the shifted-count identity on the evidence window.
    if (count_for(rows, cols, topology, 1, CountMode::all) == 1) {
        // a single perfect matching: the polytope is a point
        res.verdict = true;
        res.index = 1;
        res.point = true;
        res.detail = "point polytope";
        return res;
    }
    std::vector<Int> interior = counts_upto(rows, cols, topology, t_max, CountMode::interior);
    long long k = 0;
    for (long long t = 1; t <= t_max; ++t)
        if (interior[t] != 0) {
            k = t;
            break;
        }
    if (k == 0) {
        res.verdict = false;
        res.detail = "no interior point in any dilate up to t_max=" + std::to_string(t_max);
        return res;
    }
    if (t_max < k + 2)
        throw domain_error("t_max=" + std::to_string(t_max) +
                           " gives an insufficient evidence window (need >= k+2 with k=" +
                           std::to_string(k) + ")");
    if (interior[k] != 1) {
        res.verdict = false;
        res.detail = "interior point of " + std::to_string(k) + "P is not unique (count " +
                     interior[k].get_str() + ")";
        return res;
    }
    std::vector<Int> all = counts_upto(rows, cols, topology, t_max - k, CountMode::all);
    for (long long t = k; t <= t_max; ++t) {
        if (interior[t] != all[t - k]) {
            res.verdict = false;
            res.detail = "L_int(" + std::to_string(t) + ") = " + interior[t].get_str() +
                         " != L(" + std::to_string(t - k) + ") = " + all[t - k].get_str();
            return res;
        }
    }
    res.verdict = true;
    res.index = k;
    res.detail = "L_int(t) = L(t-" + std::to_string(k) + ") verified for t <= " +
                 std::to_string(t_max);
    return res;
}

}  // namespace gridmagic
