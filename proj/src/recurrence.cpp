#include "gridmagic/recurrence.hpp"

#include "gridmagic/config.hpp"
#include "gridmagic/counting.hpp"

#include <algorithm>
#include <functional>

namespace gridmagic {

TransferMatrix transfer_matrix(int m, long long t) {
    if (m < 1 || t < 0) throw std::invalid_argument("need m >= 1, t >= 0");
    const long long S = t + 1;
    double est = 1.0;
    for (int i = 0; i < m; ++i) est *= static_cast<double>(S);
    if (est > static_cast<double>(config().state_cap))
        throw cap_exceeded("transfer matrix needs (t+1)^m = " + std::to_string(est) +
                           " states, over the cap of " + std::to_string(config().state_cap));
    TransferMatrix a;
    a.m = m;
    a.t = t;
    a.dim = 1;
    for (int i = 0; i < m; ++i) a.dim *= S;
    a.successors.resize(a.dim);

    std::vector<long long> u(m), w(m);
    for (long long s = 0; s < a.dim; ++s) {
        long long rem = s;
        for (int j = m - 1; j >= 0; --j) {  // top entry most significant
            u[j] = rem % S;
            rem /= S;
        }
        // enumerate outgoing profiles entry by entry; the vertical labels
        // telescope, pruning infeasible prefixes early
        std::function<void(int, long long)> gen = [&](int j, long long p) {
            if (j == m - 1) {
                long long wj = t - u[j] - p;  // forced by p_m = 0
                if (wj < 0 || wj >= S) return;
                w[j] = wj;
                long long id = 0;
                for (int i = 0; i < m; ++i) id = id * S + w[i];
                a.successors[s].push_back(static_cast<int>(id));
                return;
            }
            for (long long wj = 0; wj <= t - u[j] - p; ++wj) {
                w[j] = wj;
                gen(j + 1, t - u[j] - wj - p);
            }
        };
        gen(0, 0);
        std::sort(a.successors[s].begin(), a.successors[s].end());
    }
    return a;
}

Int transfer_power_entry00(const TransferMatrix& a, long long n) {
    std::vector<Int> v(a.dim, 0), next(a.dim);
    v[0] = 1;
    for (long long step = 0; step < n; ++step) {
        std::fill(next.begin(), next.end(), Int(0));
        for (long long s = 0; s < a.dim; ++s) {
            if (v[s] == 0) continue;
            for (int w : a.successors[s]) next[w] += v[s];
        }
        v.swap(next);
    }
    return v[0];
}

std::vector<Int> characteristic_polynomial(const TransferMatrix& a) {
    // Faddeev-Leverrier: M_1 = A, c_{d-1} = -tr M_1,
    // M_k = A (M_{k-1} + c_{d-k+1} I), c_{d-k} = -tr(M_k)/k (exact).
    const long long d = a.dim;
    std::vector<Int> coeffs(d + 1, 0);
    coeffs[d] = 1;
    std::vector<std::vector<Int>> mat(d, std::vector<Int>(d, 0)), prod;
    for (long long i = 0; i < d; ++i)
        for (int w : a.successors[i]) mat[i][w] = 1;
    for (long long k = 1; k <= d; ++k) {
        if (k > 1) {
            for (long long i = 0; i < d; ++i) mat[i][i] += coeffs[d - k + 1];
            prod.assign(d, std::vector<Int>(d, 0));
            for (long long i = 0; i < d; ++i)
                for (int mid : a.successors[i])
                    for (long long j = 0; j < d; ++j) prod[i][j] += mat[mid][j];
            mat.swap(prod);
        }
        Int tr = 0;
        for (long long i = 0; i < d; ++i) tr += mat[i][i];
        Int c = -tr;
        if (k > 1) {
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), int_of(k).get_mpz_t());
            if (r != 0) throw internal_error("Faddeev-Leverrier trace not divisible");
            c = q;
        }
        coeffs[d - k] = c;
    }
    return coeffs;
}

std::vector<Int> tiling_sequence(int m, long long t, long long len) {
    std::vector<Int> seq(len);
    for (long long n = 0; n < len; ++n)
        seq[n] = n == 0 ? Int(1) : count_grid(m, static_cast<int>(n), t, CountMode::all).value;
    return seq;
}

namespace {

std::vector<Rat> to_rats(std::span<const Int> seq) {
    std::vector<Rat> out;
    out.reserve(seq.size());
    for (const Int& v : seq) out.emplace_back(v);
    return out;
}

Recurrence make_recurrence(std::vector<Rat> coeffs, std::span<const Rat> seq) {
    Recurrence rec;
    rec.order = static_cast<long long>(coeffs.size());
    rec.coeffs = std::move(coeffs);
    rec.seed_index = 0;
    rec.seed.assign(seq.begin(), seq.begin() + rec.order);
    return rec;
}

// Core Berlekamp-Massey over Q: shortest c_1..c_L with
// s_n = sum_i c_i s_{n-i} for n >= L.
std::vector<Rat> bm_core(std::span<const Rat> s) {
    std::vector<Rat> C{Rat(1)}, B{Rat(1)};
    long long L = 0, shift = 1;
    Rat b = 1;
    for (std::size_t n = 0; n < s.size(); ++n) {
        Rat delta = s[n];
        for (long long i = 1; i <= L; ++i) delta += C[i] * s[n - i];
        if (delta == 0) {
            ++shift;
        } else if (2 * L <= static_cast<long long>(n)) {
            std::vector<Rat> T = C;
            Rat f = delta / b;
            if (C.size() < B.size() + shift) C.resize(B.size() + shift, Rat(0));
            for (std::size_t i = 0; i < B.size(); ++i) C[i + shift] -= f * B[i];
            L = static_cast<long long>(n) + 1 - L;
            B = std::move(T);
            b = delta;
            shift = 1;
        } else {
            Rat f = delta / b;
            if (C.size() < B.size() + shift) C.resize(B.size() + shift, Rat(0));
            for (std::size_t i = 0; i < B.size(); ++i) C[i + shift] -= f * B[i];
            ++shift;
        }
    }
    std::vector<Rat> coeffs(L);
    for (long long i = 1; i <= L; ++i) coeffs[i - 1] = -C[i];
    return coeffs;
}

std::vector<Rat> predict(const std::vector<Rat>& coeffs, std::span<const Rat> history,
                         std::size_t count) {
    std::vector<Rat> window(history.begin(), history.end());
    std::vector<Rat> out;
    for (std::size_t k = 0; k < count; ++k) {
        Rat v = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            v += coeffs[i] * window[window.size() - 1 - i];
        window.push_back(v);
        out.push_back(v);
    }
    return out;
}

}  // namespace

Recurrence berlekamp_massey(std::span<const Rat> seq) {
    if (seq.size() < 2) throw std::invalid_argument("need at least 2 terms");
    std::vector<Rat> coeffs = bm_core(seq);
    if (coeffs.empty()) coeffs.assign(1, Rat(0));  // all-zero sequence
    if (static_cast<std::size_t>(2 * coeffs.size()) > seq.size())
        throw domain_error("no certified linear recurrence at this sequence length");
    // hold out the last quarter: a re-run on the prefix must re-predict it
    std::size_t prefix_len = seq.size() - seq.size() / 4;
    std::vector<Rat> pc = bm_core(seq.first(prefix_len));
    if (pc.empty()) pc.assign(1, Rat(0));
    if (pc.size() > prefix_len)
        throw domain_error("no certified linear recurrence at this sequence length");
    std::vector<Rat> predicted =
        predict(pc, seq.first(prefix_len), seq.size() - prefix_len);
    for (std::size_t k = 0; k < predicted.size(); ++k)
        if (predicted[k] != seq[prefix_len + k])
            throw domain_error(
                "held-out verification failed: sequence is not linearly "
                "recurrent at this length");
    return make_recurrence(std::move(coeffs), seq);
}

std::vector<Rat> extend(const Recurrence& rec, Direction dir, long long count) {
    if (count < 0) throw std::invalid_argument("count must be nonnegative");
    std::vector<Rat> out;
    out.reserve(count);
    if (rec.order == 0) throw std::invalid_argument("empty recurrence");
    if (dir == Direction::forward) {
        std::vector<Rat> window = rec.seed;
        for (long long k = 0; k < count; ++k) {
            Rat v = 0;
            for (long long i = 0; i < rec.order; ++i)
                v += rec.coeffs[i] * window[window.size() - 1 - i];
            window.erase(window.begin());
            window.push_back(v);
            out.push_back(v);
        }
        return out;
    }
    if (rec.coeffs.back() == 0)
        throw domain_error("backward extension undefined for this recurrence (b_0 = 0)");
    std::vector<Rat> window = rec.seed;  // a_{seed_index} .. a_{seed_index+r-1}
    for (long long k = 0; k < count; ++k) {
        // a_{n-r} = (a_n - sum_{i<r} c_i a_{n-i}) / c_r with n = top of window
        Rat v = window.back();
        for (long long i = 1; i < rec.order; ++i)
            v -= rec.coeffs[i - 1] * window[rec.order - 1 - i];
        v /= rec.coeffs[rec.order - 1];
        window.pop_back();
        window.insert(window.begin(), v);
        out.push_back(v);
    }
    return out;
}

Recurrence char_poly_recurrence(const TransferMatrix& a) {
    std::vector<Int> cp = characteristic_polynomial(a);
    const long long d = a.dim;
    Recurrence rec;
    rec.order = d;
    rec.coeffs.resize(d);
    for (long long i = 1; i <= d; ++i) rec.coeffs[i - 1] = Rat(-cp[d - i]);
    rec.seed_index = 0;
    std::vector<Int> seq = tiling_sequence(a.m, a.t, d + 6);
    rec.seed = to_rats(std::span<const Int>(seq.data(), d));
    std::vector<Rat> pred = extend(rec, Direction::forward, 6);
    for (long long k = 0; k < 6; ++k)
        if (pred[k] != Rat(seq[d + k]))
            throw internal_error("characteristic-polynomial recurrence fails to reproduce "
                                 "T(m, n, t) at n=" + std::to_string(d + k));
    return rec;
}

namespace {

long long bm_default_length(int m, long long t, long long n_max) {
    double states = 1.0;
    for (int i = 0; i < m; ++i) states *= static_cast<double>(t + 1);
    if (states > 1e6) throw cap_exceeded("(t+1)^m too large for the default BM length");
    return std::max<long long>(4 * static_cast<long long>(states) + 4, n_max + 2);
}

}  // namespace

ReciprocityReport verify_reciprocity(int m, long long n_max) {
    ReciprocityReport rep;
    rep.m = m;
    rep.ell = (m + 1) / 2;
    long long len = bm_default_length(m, 1, n_max);
    std::vector<Int> seq = tiling_sequence(m, 1, len);
    std::vector<Rat> rseq = to_rats(seq);
    rep.rec = berlekamp_massey(rseq);
    std::vector<Rat> back = extend(rep.rec, Direction::backward, n_max + 2);
    rep.all_pass = true;
    for (long long n = 0; n <= n_max; ++n) {
        ReciprocityRow row;
        row.n = n;
        row.forward = seq[n];
        row.backward = back[n + 1];  // back[j-1] = value at index -j
        row.sign = (rep.ell * n) % 2 == 0 ? 1 : -1;
        row.pass = Rat(row.forward) == Rat(row.sign) * row.backward;
        rep.all_pass = rep.all_pass && row.pass;
        rep.rows.push_back(std::move(row));
    }
    if (m % 4 == 1)
        for (long long n = 1; n <= n_max; n += 2)
            if (seq[n] != 0) rep.odd_zero_check = false;
    rep.all_pass = rep.all_pass && rep.odd_zero_check;
    return rep;
}

PowerReport power_recurrence(int m, long long t, long long n_max) {
    if (t < 1) throw std::invalid_argument("power must be >= 1");
    PowerReport rep;
    rep.m = m;
    rep.t = t;
    long long ell = (m + 1) / 2;
    long long len = bm_default_length(m, t, n_max);
    std::vector<Int> base = tiling_sequence(m, 1, len);
    std::vector<Rat> seq;
    seq.reserve(base.size());
    for (const Int& v : base) seq.emplace_back(pow_int(v, static_cast<unsigned long>(t)));
    rep.rec = berlekamp_massey(seq);
    std::vector<Rat> back = extend(rep.rec, Direction::backward, n_max + 2);
    rep.all_pass = true;
    for (long long n = 0; n <= n_max; ++n) {
        ReciprocityRow row;
        row.n = n;
        row.forward = seq[n].get_num();
        row.backward = back[n + 1];
        row.sign = (t * ell * n) % 2 == 0 ? 1 : -1;
        row.pass = seq[n] == Rat(row.sign) * row.backward;
        rep.all_pass = rep.all_pass && row.pass;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::string format_recurrence(const Recurrence& rec) {
    std::string s = "a(n) =";
    for (long long i = 1; i <= rec.order; ++i) {
        const Rat& c = rec.coeffs[i - 1];
        if (i == 1)
            s += " " + rat_to_string(c);
        else
            s += (c >= 0 ? " + " + rat_to_string(c) : " - " + rat_to_string(-c));
        s += "*a(n-" + std::to_string(i) + ")";
    }
    return s;
}

}  // namespace gridmagic
