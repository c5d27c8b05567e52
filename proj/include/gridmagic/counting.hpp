#pragma once

#include "gridmagic/common.hpp"
#include "gridmagic/graph.hpp"
#include "gridmagic/labelling.hpp"

#include <cstdint>
#include <vector>

namespace gridmagic {

enum class CountMode { all, interior };

CountMode count_mode_from_string(const std::string& s);
std::string to_string(CountMode m);

struct CountResult {
    Int value;
    CountMode mode;
    int rows, cols;
    long long sum;
    Topology topology;
};

// Exact number of magic labellings of sum t of grid(m, n) via the profile
// dynamic program: states are the horizontal labels crossing a column
// boundary; vertical labels inside a column are forced by telescoping. In
// interior mode every edge label must be >= 1.
CountResult count_grid(int m, int n, long long t, CountMode mode);

// Exact count on an arbitrary bipartite graph (grids, bipartite tori,
// parallel edges allowed) by depth-first label assignment in column-major
// vertex elimination order with constraint propagation. Throws domain_error
// for non-bipartite input, where magic labellings no longer match lattice
// points of the dilated matching polytope.
CountResult count_generic(const Graph& g, long long t, CountMode mode);

// All magic labellings, in lexicographic order of their label vectors.
// Throws cap_exceeded once more than `limit` labellings are found.
std::vector<MagicLabelling> enumerate_labellings(const Graph& g, long long t, CountMode mode,
                                                 std::uint64_t limit);

// All perfect matchings as sorted edge-index sets, in lexicographic order.
// Valid for any graph (a sum-1 labelling is a perfect matching regardless
// of bipartiteness).
std::vector<std::vector<int>> perfect_matchings(const Graph& g, std::uint64_t limit);

bool has_perfect_matching(const Graph& g);

}  // namespace gridmagic
