#pragma once

#include "gridmagic/common.hpp"

#include <span>
#include <string>
#include <vector>

namespace gridmagic {

// Adjacency of the profile graph for width-m boards at sum t: states are
// the (t+1)^m column-boundary profiles ordered base-(t+1) (top entry most
// significant), with an edge u -> w whenever a column can have u entering
// and w leaving. The (0,0) entry of the n-th power counts T(m, n, t).
struct TransferMatrix {
    int m = 0;
    long long t = 0;
    long long dim = 0;
    std::vector<std::vector<int>> successors;  // sorted, per state
};

// Throws cap_exceeded when (t+1)^m exceeds the configured state cap.
TransferMatrix transfer_matrix(int m, long long t);

Int transfer_power_entry00(const TransferMatrix& a, long long n);

// a_n = coeffs[0] a_{n-1} + ... + coeffs[r-1] a_{n-r};
// seed holds a_{seed_index} .. a_{seed_index + r - 1}.
struct Recurrence {
    long long order = 0;
    std::vector<Rat> coeffs;
    long long seed_index = 0;
    std::vector<Rat> seed;
};

enum class Direction { forward, backward };

// The order-(t+1)^m recurrence read off the characteristic polynomial of
// the transfer matrix (computed exactly by Faddeev-Leverrier), seeded with
// T(m, 0..d-1, t) and verified to reproduce the next six counts.
Recurrence char_poly_recurrence(const TransferMatrix& a);

// Characteristic polynomial coefficients of x^d + b_{d-1} x^{d-1} + ... +
// b_0, returned as (b_0, ..., b_{d-1}, 1).
std::vector<Int> characteristic_polynomial(const TransferMatrix& a);

// Minimal recurrence fitting the whole sequence. Certification: a re-run on
// the first 75% of the terms must re-predict the held-out last 25%;
// a mismatch (sequence not linearly recurrent at this length) throws
// domain_error.
Recurrence berlekamp_massey(std::span<const Rat> seq);

// Values at the `count` indices following (forward) or preceding (backward)
// the seed window. Backward requires the trailing coefficient to be
// nonzero. Backward results are ordered by decreasing index: the j-th entry
// (1-based) is the value at seed_index - j.
std::vector<Rat> extend(const Recurrence& rec, Direction dir, long long count);

// T(m, n, t) for n = 0..len-1 (T(m, 0, t) = 1, the empty board).
std::vector<Int> tiling_sequence(int m, long long t, long long len);

struct ReciprocityRow {
    long long n = 0;
    Int forward;
    Rat backward;  // T(m, -n-2, 1), by running the recurrence backwards
    int sign = 1;  // (-1)^(ceil(m/2) * n)
    bool pass = false;
};

struct ReciprocityReport {
    int m = 0;
    long long ell = 0;  // ceil(m/2)
    Recurrence rec;
    std::vector<ReciprocityRow> rows;
    bool odd_zero_check = true;  // m = 1 mod 4: T(m, n, 1) = 0 for odd n
    bool all_pass = false;
};

// Checks T(m,n,1) = (-1)^(ell n) T(m,-n-2,1) for n = 0..n_max, with the
// backward values produced by the minimal recurrence run backwards.
ReciprocityReport verify_reciprocity(int m, long long n_max);

struct PowerReport {
    int m = 0;
    long long t = 0;
    Recurrence rec;           // minimal recurrence of (T(m,n,1)^t)_n
    std::vector<ReciprocityRow> rows;  // power reciprocity, sign (-1)^(t ell n)
    bool all_pass = false;
};

PowerReport power_recurrence(int m, long long t, long long n_max);

// Kasteleyn's closed form for T(m, n, 1), evaluated factor-by-factor with
// the real three-term recurrence f(k) = 2 cos(j pi/(m+1)) f(k-1) + f(k-2)
// at escalating binary precision until the product rounds to an integer
// with residual < 0.25. Throws cap_exceeded past the precision ceiling.
Int kasteleyn(int m, int n);

std::string format_recurrence(const Recurrence& rec);

}  // namespace gridmagic
