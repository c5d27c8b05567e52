#pragma once

#include "gridmagic/graph.hpp"

#include <string>
#include <vector>

namespace gridmagic {

// Nonnegative integer edge labels with a uniform vertex sum. The label
// vector is dense, indexed by canonical edge index, and its length is
// enforced at construction.
struct MagicLabelling {
    MagicLabelling(Graph g, long long sum, std::vector<long long> labels);

    Graph graph;
    long long sum;
    std::vector<long long> labels;
};

struct ValidationReport {
    bool is_magic = false;
    bool is_interior = false;  // magic and every label >= 1
    std::vector<std::string> violations;
};

ValidationReport validate(const MagicLabelling& l);

// The explicit interior points used in the Gorenstein classification.
// Every constructor output validates as magic and interior at the case's
// sum; incompatible (rows, cols) raise domain_error.
enum class WitnessCase {
    grid2xn_t3,       // 2 x n, n >= 3: endverticals 2, rest 1 (sum 3)
    grid3xn_t5,       // 3 x n, n even: sum 5
    grid4x4_t4,       // 4 x 4: corner-incident edges 2, rest 1 (sum 4)
    even_even_t4,     // m, n even: boundary edges alternate 2,1,...,2 (sum 4)
    even_even_t5,     // m even, n even >= 4 (sum 5)
    even_odd_t5,      // m even >= 4, n odd >= 5 (sum 5)
    even_odd_t5_flipped,  // left-right mirror of even_odd_t5
};

WitnessCase witness_case_from_string(const std::string& s);
std::string to_string(WitnessCase c);
const std::vector<WitnessCase>& all_witness_cases();

MagicLabelling gorenstein_witness(WitnessCase c, int rows, int cols);

// For a labelling of grid(3, n) with n even: with a_i, b_i, c_i the i-th
// (1-based) horizontal labels of the top, middle and bottom rows, checks
// c_i = b_i - a_i for i even and c_i = t - a_i + b_i for i odd.
// Throws domain_error unless the graph is a 3 x even grid.
bool check_difflemma(const MagicLabelling& l);

}  // namespace gridmagic
