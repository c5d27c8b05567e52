#include "gridmagic/counting.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <numeric>

namespace gridmagic {

CountMode count_mode_from_string(const std::string& s) {
    if (s == "all") return CountMode::all;
    if (s == "interior") return CountMode::interior;
    throw std::invalid_argument("unknown count mode '" + s + "'");
}

std::string to_string(CountMode m) { return m == CountMode::all ? "all" : "interior"; }

namespace {

struct u64_overflow {};

// Per-cell profile DP. The mixed state holds the outgoing profile below the
// current cell, the incoming profile at and above it, and the forced label
// of the vertical edge just crossed; it is encoded as a base-(t+1) number
// with the carry as the most significant digit.
template <class Acc>
Int dp_count(int m, int n, long long t, CountMode mode) {
    const long long S = t + 1;
    double size_est = 1.0;
    for (int i = 0; i <= m; ++i) size_est *= static_cast<double>(S);
    if (size_est > 4e7)
        throw cap_exceeded("profile DP state space too large: (t+1)^(m+1) > 4e7");
    const std::size_t nstates = static_cast<std::size_t>(size_est);

    std::vector<std::size_t> pw(m + 1);
    pw[0] = 1;
    for (int i = 1; i <= m; ++i) pw[i] = pw[i - 1] * static_cast<std::size_t>(S);

    const long long plo = (mode == CountMode::interior) ? 1 : 0;

    std::vector<Acc> cur(nstates), next(nstates);
    cur[0] = Acc(1);

    for (int col = 0; col < n; ++col) {
        const bool final_boundary = (col + 1 == n);
        const long long wlo = (mode == CountMode::interior && !final_boundary) ? 1 : 0;
        for (int j = 0; j < m; ++j) {
            std::fill(next.begin(), next.end(), Acc(0));
            const std::size_t sj = pw[j], sm = pw[m];
            for (std::size_t idx = 0; idx < nstates; ++idx) {
                if (cur[idx].zero()) continue;
                const long long u = static_cast<long long>(idx / sj % static_cast<std::size_t>(S));
                const long long p = static_cast<long long>(idx / sm);
                const long long K = t - u - p;  // w + p_next
                const std::size_t base = idx - static_cast<std::size_t>(u) * sj -
                                         static_cast<std::size_t>(p) * sm;
                if (j + 1 == m) {
                    // bottom cell: no vertical below, so w is forced by p_m = 0
                    const long long w = K;
                    if (w < 0 || w >= S) continue;
                    if (final_boundary ? (w != 0) : (w < wlo)) continue;
                    next[base + static_cast<std::size_t>(w) * sj].add(cur[idx]);
                } else if (final_boundary) {
                    const long long pn = K;  // w = 0
                    if (pn < plo || pn >= S) continue;
                    next[base + static_cast<std::size_t>(pn) * sm].add(cur[idx]);
                } else {
                    const long long whi = K - plo;  // p_next = K - w >= plo
                    for (long long w = wlo; w <= whi; ++w)
                        next[base + static_cast<std::size_t>(w) * sj +
                             static_cast<std::size_t>(K - w) * sm]
                            .add(cur[idx]);
                }
            }
            cur.swap(next);
        }
    }
    return cur[0].to_int();
}

struct CheckedU64 {
    std::uint64_t v = 0;
    CheckedU64() = default;
    explicit CheckedU64(std::uint64_t x) : v(x) {}
    bool zero() const { return v == 0; }
    void add(const CheckedU64& o) {
        if (__builtin_add_overflow(v, o.v, &v)) throw u64_overflow{};
    }
    Int to_int() const {
        Int r;
        mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
        return r;
    }
};

struct BigAcc {
    Int v = 0;
    BigAcc() = default;
    explicit BigAcc(std::uint64_t x) { v = CheckedU64(x).to_int(); }
    bool zero() const { return v == 0; }
    void add(const BigAcc& o) { v += o.v; }
    Int to_int() const { return v; }
};

// Shared DFS engine for count_generic / enumerate_labellings: assign edge
// labels vertex by vertex (column-major), forcing each vertex's last free
// edge, pruning by the residual capacity of both endpoints.
class LabelSearch {
public:
    LabelSearch(const Graph& g, long long t, CountMode mode)
        : g_(g), lo_(mode == CountMode::interior ? 1 : 0) {
        if (!g.is_bipartite())
            throw domain_error(
                "generic counting requires a bipartite graph (odd-set "
                "constraints are out of scope)");
        for (int c = 0; c < g.cols(); ++c)
            for (int r = 0; r < g.rows(); ++r) order_.push_back(g.vertex_id(r, c));
        labels_.assign(g.edge_count(), -1);
        residual_.assign(g.vertex_count(), t);
        free_deg_.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) free_deg_[v] = g.degree(v);
    }

    // emit() is called with the complete label vector for every labelling.
    template <class Emit>
    void run(Emit&& emit) {
        visit(0, emit);
    }

private:
    template <class Emit>
    void visit(std::size_t pos, Emit& emit) {
        if (pos == order_.size()) {
            emit(labels_);
            return;
        }
        int v = order_[pos];
        std::vector<int> edges;
        for (int ei : g_.incident(v))
            if (labels_[ei] < 0) edges.push_back(ei);
        if (edges.empty()) {
            if (residual_[v] == 0) visit(pos + 1, emit);
            return;
        }
        assign(v, edges, 0, pos, emit);
    }

    template <class Emit>
    void assign(int v, const std::vector<int>& edges, std::size_t k, std::size_t pos,
                Emit& emit) {
        if (k + 1 == edges.size()) {
            // the vertex's last free edge is forced by its residual
            int e = edges[k];
            long long x = residual_[v];
            if (x >= lo_ && fits(e, v, x)) {
                apply(e, v, x);
                visit(pos + 1, emit);
                undo(e, v, x);
            }
            return;
        }
        int e = edges[k];
        long long rest = static_cast<long long>(edges.size() - k - 1);
        long long hi = std::min(residual_[v] - lo_ * rest, cap(e, v));
        for (long long x = lo_; x <= hi; ++x) {
            apply(e, v, x);
            assign(v, edges, k + 1, pos, emit);
            undo(e, v, x);
        }
    }

    // Largest label edge e can carry given the other endpoint's residual and
    // its remaining free edges.
    long long cap(int e, int v) const {
        int o = g_.other_endpoint(e, v);
        return residual_[o] - lo_ * (free_deg_[o] - 1);
    }
    bool fits(int e, int v, long long x) const { return x <= cap(e, v); }

    void apply(int e, int v, long long x) {
        int o = g_.other_endpoint(e, v);
        labels_[e] = x;
        residual_[v] -= x;
        residual_[o] -= x;
        --free_deg_[v];
        --free_deg_[o];
    }
    void undo(int e, int v, long long x) {
        int o = g_.other_endpoint(e, v);
        labels_[e] = -1;
        residual_[v] += x;
        residual_[o] += x;
        ++free_deg_[v];
        ++free_deg_[o];
    }

    const Graph& g_;
    long long lo_;
    std::vector<int> order_;
    std::vector<long long> labels_;
    std::vector<long long> residual_;
    std::vector<int> free_deg_;
};

}  // namespace

CountResult count_grid(int m, int n, long long t, CountMode mode) {
    if (m < 1 || n < 1) throw std::invalid_argument("grid dimensions must be positive");
    if (t < 0) throw std::invalid_argument("sum must be nonnegative");
    Int value;
    try {
        value = dp_count<CheckedU64>(m, n, t, mode);
    } catch (const u64_overflow&) {
        value = dp_count<BigAcc>(m, n, t, mode);
    }
    return {value, mode, m, n, t, Topology::grid};
}

CountResult count_generic(const Graph& g, long long t, CountMode mode) {
    if (t < 0) throw std::invalid_argument("sum must be nonnegative");
    LabelSearch search(g, t, mode);
    std::uint64_t count = 0;
    search.run([&](const std::vector<long long>&) {
        if (__builtin_add_overflow(count, std::uint64_t{1}, &count))
            throw cap_exceeded("generic count exceeds 2^64");
    });
    Int value;
    mpz_import(value.get_mpz_t(), 1, 1, sizeof(count), 0, 0, &count);
    return {value, mode, g.rows(), g.cols(), t, g.topology()};
}

std::vector<MagicLabelling> enumerate_labellings(const Graph& g, long long t, CountMode mode,
                                                 std::uint64_t limit) {
    if (t < 0) throw std::invalid_argument("sum must be nonnegative");
    LabelSearch search(g, t, mode);
    std::vector<std::vector<long long>> vectors;
    search.run([&](const std::vector<long long>& lab) {
        if (vectors.size() >= limit)
            throw cap_exceeded("enumeration cap of " + std::to_string(limit) + " exceeded",
                               limit);
        vectors.push_back(lab);
    });
    std::sort(vectors.begin(), vectors.end());
    std::vector<MagicLabelling> out;
    out.reserve(vectors.size());
    for (auto& vec : vectors) out.emplace_back(g, t, std::move(vec));
    return out;
}

bool has_perfect_matching(const Graph& g) {
    if (g.vertex_count() % 2 != 0) return false;
    std::vector<bool> covered(g.vertex_count(), false);
    std::function<bool(int)> go = [&](int covered_count) -> bool {
        if (covered_count == g.vertex_count()) return true;
        int v = 0;
        while (covered[v]) ++v;
        for (int ei : g.incident(v)) {
            int o = g.other_endpoint(ei, v);
            if (covered[o]) continue;
            covered[v] = covered[o] = true;
            bool found = go(covered_count + 2);
            covered[v] = covered[o] = false;
            if (found) return true;
        }
        return false;
    };
    return go(0);
}

std::vector<std::vector<int>> perfect_matchings(const Graph& g, std::uint64_t limit) {
    std::vector<std::vector<int>> out;
    if (g.vertex_count() % 2 != 0) return out;
    std::vector<bool> covered(g.vertex_count(), false);
    std::vector<int> picked;
    std::function<void(int)> go = [&](int covered_count) {
        if (covered_count == g.vertex_count()) {
            if (out.size() >= limit)
                throw cap_exceeded("matching enumeration cap exceeded", limit);
            std::vector<int> m = picked;
            std::sort(m.begin(), m.end());
            out.push_back(std::move(m));
            return;
        }
        int v = 0;
        while (covered[v]) ++v;
        for (int ei : g.incident(v)) {
            int o = g.other_endpoint(ei, v);
            if (covered[o]) continue;
            covered[v] = covered[o] = true;
            picked.push_back(ei);
            go(covered_count + 2);
            picked.pop_back();
            covered[v] = covered[o] = false;
        }
    };
    go(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gridmagic
