#pragma once

#include "gridmagic/common.hpp"
#include "gridmagic/counting.hpp"
#include "gridmagic/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace gridmagic {

// Dimension of the perfect matching polytope: the affine rank of the set of
// perfect-matching incidence vectors, computed by exact rational
// elimination. The closed-form case formula is asserted against the rank;
// a mismatch raises internal_error. Throws domain_error when the graph has
// no perfect matching.
long long dimension(const Graph& g);

// The case formula alone (grids: (m-1)(n-1); tori by parity cases).
long long dimension_formula(int rows, int cols, Topology topology);

struct EhrhartData {
    int rows = 0, cols = 0;
    Topology topology = Topology::grid;
    long long d = 0;            // polytope dimension
    std::vector<Int> counts;    // L(0..d+2); the last two are held-out checks
    std::vector<Rat> coeffs;    // polynomial, constant term first, d+1 entries
    std::vector<Int> h;         // h-vector, trailing zeros stripped
    bool gorenstein = false;
    std::optional<long long> gorenstein_index;  // d + 1 - deg h, when palindromic
};

// Interpolates the Ehrhart polynomial through L(0..d) and verifies it
// against L(d+1), L(d+2). Throws domain_error for non-bipartite graphs and
// for empty polytopes (no perfect matching); internal_error if a held-out
// point disagrees.
EhrhartData ehrhart_polynomial(int rows, int cols, Topology topology);

// h_j = sum_{i<=j} (-1)^i C(d+1, i) L(j-i); trailing zeros stripped.
// Throws domain_error if any entry is negative (Stanley nonnegativity).
std::vector<Int> h_vector(std::span<const Int> counts, long long d);

bool is_palindromic(std::span<const Int> h);
bool is_unimodal(std::span<const Int> h);

// Exact polynomial evaluation, constant-first coefficients.
Rat evaluate_polynomial(std::span<const Rat> coeffs, const Rat& t);

enum class GorensteinMode { hvector, functional };
GorensteinMode gorenstein_mode_from_string(const std::string& s);
std::string to_string(GorensteinMode m);

struct GorensteinResult {
    bool verdict = false;
    std::optional<long long> index;
    GorensteinMode mode = GorensteinMode::hvector;
    bool point = false;       // dimension-0 polytope (single matching)
    std::vector<Int> h;       // hvector mode only
    std::string detail;
};

// mode hvector: palindromicity of the full h-vector, index d + 1 - deg h.
// mode functional: k = smallest dilate with an interior point; demands a
// unique interior point at k and L_int(t) = L(t-k) up to t_max.
// Throws domain_error if t_max < k + 2 (insufficient evidence window).
GorensteinResult gorenstein_check(int rows, int cols, Topology topology, GorensteinMode mode,
                                  long long t_max);

}  // namespace gridmagic
