#pragma once

#include "gridmagic/graph.hpp"
#include "gridmagic/labelling.hpp"

#include <string>
#include <vector>

namespace gridmagic {

// A perfect matching inside the given edge set (bipartite graphs), found by
// augmenting paths scanned in canonical vertex order with edges tried by
// ascending index. Throws domain_error when none exists; for the support of
// a valid magic labelling of sum >= 1 one always does.
std::vector<int> extract_matching(const Graph& g, const std::vector<bool>& support);

struct Decomposition {
    long long sum = 0;
    std::vector<std::vector<int>> layers;  // sorted edge-index sets, one per unit of sum
};

// Peels a valid magic labelling of sum t into exactly t perfect matchings
// whose incidence vectors re-sum to the labels: extract a matching from the
// positive edges, decrement, repeat. Each residual is revalidated.
Decomposition decompose(const MagicLabelling& l);

// One matching of a grid graph drawn as a domino tiling: every cell is
// marked H or V by the orientation of the domino covering it.
std::string render_tiling(const Graph& g, const std::vector<int>& matching);

}  // namespace gridmagic
