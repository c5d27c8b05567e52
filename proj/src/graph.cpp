#include "gridmagic/graph.hpp"

#include "gridmagic/common.hpp"

#include <algorithm>
#include <queue>

namespace gridmagic {

std::string to_string(Topology t) {
    return t == Topology::grid ? "grid" : "torus";
}

std::string to_string(EdgeKind k) {
    switch (k) {
        case EdgeKind::horizontal: return "horizontal";
        case EdgeKind::vertical: return "vertical";
        case EdgeKind::wrap_horizontal: return "wrap-horizontal";
        case EdgeKind::wrap_vertical: return "wrap-vertical";
    }
    return "?";
}

Topology topology_from_string(const std::string& s) {
    if (s == "grid") return Topology::grid;
    if (s == "torus") return Topology::torus;
    throw std::invalid_argument("unknown topology '" + s + "'");
}

Graph::Graph(int rows, int cols, Topology t) : rows_(rows), cols_(cols), topology_(t) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("graph dimensions must be positive");
    adjacency_.resize(static_cast<std::size_t>(rows) * cols);
}

void Graph::add_edge(Vertex a, Vertex b, EdgeKind kind) {
    Edge e;
    e.index = static_cast<int>(edges_.size());
    e.u = a;
    e.v = b;
    e.kind = kind;
    edges_.push_back(e);
    adjacency_[vertex_id(a.row, a.col)].push_back(e.index);
    adjacency_[vertex_id(b.row, b.col)].push_back(e.index);
}

void Graph::finish() {
    for (auto& inc : adjacency_) std::sort(inc.begin(), inc.end());
    // 2-colour by BFS; wrap edges can create odd cycles, so parity is not
    // assumed even for grids.
    int nv = vertex_count();
    std::vector<signed char> col(nv, -1);
    bool ok = true;
    for (int s = 0; s < nv && ok; ++s) {
        if (col[s] != -1) continue;
        col[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty() && ok) {
            int v = q.front();
            q.pop();
            for (int ei : adjacency_[v]) {
                int w = other_endpoint(ei, v);
                if (col[w] == -1) {
                    col[w] = static_cast<signed char>(1 - col[v]);
                    q.push(w);
                } else if (col[w] == col[v]) {
                    ok = false;
                    break;
                }
            }
        }
    }
    if (ok) colors_ = std::move(col);
}

Graph Graph::grid(int rows, int cols) {
    Graph g(rows, cols, Topology::grid);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c)
            g.add_edge({r, c}, {r, c + 1}, EdgeKind::horizontal);
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c < cols; ++c)
            g.add_edge({r, c}, {r + 1, c}, EdgeKind::vertical);
    g.finish();
    return g;
}

Graph Graph::torus(int rows, int cols) {
    if (cols < 2)
        throw domain_error("torus requires at least 2 columns");
    Graph g(rows, cols, Topology::torus);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c)
            g.add_edge({r, c}, {r, c + 1}, EdgeKind::horizontal);
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c < cols; ++c)
            g.add_edge({r, c}, {r + 1, c}, EdgeKind::vertical);
    // Wrap edges are sets of endpoints; one that coincides with an existing
    // edge (cols == 2 horizontally, rows == 2 vertically) is the same edge,
    // and a would-be loop (rows == 1) is dropped.
    if (cols > 2)
        for (int r = 0; r < rows; ++r)
            g.add_edge({r, cols - 1}, {r, 0}, EdgeKind::wrap_horizontal);
    if (rows > 2)
        for (int c = 0; c < cols; ++c)
            g.add_edge({rows - 1, c}, {0, c}, EdgeKind::wrap_vertical);
    g.finish();
    return g;
}

int Graph::other_endpoint(int edge_index, int vid) const {
    const Edge& e = edges_[edge_index];
    int a = vertex_id(e.u.row, e.u.col);
    int b = vertex_id(e.v.row, e.v.col);
    return a == vid ? b : a;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> Graph::bipartition() const {
    if (colors_.empty()) return std::nullopt;
    std::vector<int> a, b;
    for (int v = 0; v < vertex_count(); ++v)
        (colors_[v] == 0 ? a : b).push_back(v);
    return std::make_pair(std::move(a), std::move(b));
}

HDescription h_description(const Graph& g) {
    if (!g.is_bipartite())
        throw domain_error(
            "h-description requires a bipartite graph; odd-set constraints "
            "would be needed otherwise");
    HDescription h;
    h.num_edges = g.edge_count();
    h.equalities.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        h.equalities.push_back(g.incident(v));
    return h;
}

}  // namespace gridmagic
