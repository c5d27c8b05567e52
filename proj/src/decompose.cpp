#include "gridmagic/decompose.hpp"

#include "gridmagic/common.hpp"

#include <algorithm>
#include <functional>

namespace gridmagic {

std::vector<int> extract_matching(const Graph& g, const std::vector<bool>& support) {
    if (!g.is_bipartite())
        throw domain_error("matching extraction requires a bipartite graph");
    if (static_cast<int>(support.size()) != g.edge_count())
        throw std::invalid_argument("support size does not match edge count");

    // match_edge[v] = index of the matching edge at v, or -1
    std::vector<int> match_edge(g.vertex_count(), -1);
    std::vector<bool> visited(g.vertex_count());

    std::function<bool(int)> augment = [&](int v) -> bool {
        for (int ei : g.incident(v)) {
            if (!support[ei]) continue;
            int w = g.other_endpoint(ei, v);
            if (visited[w]) continue;
            visited[w] = true;
            if (match_edge[w] == -1 || augment(g.other_endpoint(match_edge[w], w))) {
                match_edge[v] = ei;
                match_edge[w] = ei;
                return true;
            }
        }
        return false;
    };

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.color(v) != 0 || match_edge[v] != -1) continue;
        std::fill(visited.begin(), visited.end(), false);
        if (!augment(v))
            throw domain_error(
                "no perfect matching inside the support: labelling invalid or "
                "graph non-bipartite");
    }
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.color(v) == 0) {
            if (match_edge[v] == -1)
                throw domain_error("no perfect matching inside the support");
            out.push_back(match_edge[v]);
        }
    std::sort(out.begin(), out.end());
    if (2 * out.size() != static_cast<std::size_t>(g.vertex_count()))
        throw domain_error("support matching does not cover every vertex");
    return out;
}

Decomposition decompose(const MagicLabelling& l) {
    ValidationReport rep = validate(l);
    if (!rep.is_magic)
        throw domain_error("not a magic labelling: " +
                           (rep.violations.empty() ? std::string("?") : rep.violations.front()));
    Decomposition dec;
    dec.sum = l.sum;
    MagicLabelling work = l;
    std::vector<bool> support(l.graph.edge_count());
    for (long long layer = l.sum; layer >= 1; --layer) {
        for (int e = 0; e < work.graph.edge_count(); ++e) support[e] = work.labels[e] >= 1;
        std::vector<int> matching = extract_matching(work.graph, support);
        for (int e : matching) --work.labels[e];
        --work.sum;
        ValidationReport check = validate(work);
        if (!check.is_magic)
            throw internal_error("residual after peeling layer is not magic");
        dec.layers.push_back(std::move(matching));
    }
    return dec;
}

std::string render_tiling(const Graph& g, const std::vector<int>& matching) {
    if (g.topology() != Topology::grid)
        throw domain_error("tiling rendering is defined for grid graphs");
    std::vector<char> cell(g.vertex_count(), '.');
    for (int ei : matching) {
        const Edge& e = g.edges()[ei];
        char c = e.kind == EdgeKind::horizontal ? 'H' : 'V';
        cell[g.vertex_id(e.u.row, e.u.col)] = c;
        cell[g.vertex_id(e.v.row, e.v.col)] = c;
    }
    std::string out;
    for (int r = 0; r < g.rows(); ++r) {
        for (int c = 0; c < g.cols(); ++c) out += cell[g.vertex_id(r, c)];
        out += '\n';
    }
    return out;
}

}  // namespace gridmagic
