#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gridmagic {

enum class Topology { grid, torus };

enum class EdgeKind { horizontal, vertical, wrap_horizontal, wrap_vertical };

std::string to_string(Topology t);
std::string to_string(EdgeKind k);
Topology topology_from_string(const std::string& s);

struct Vertex {
    int row = 0;
    int col = 0;
    bool operator==(const Vertex&) const = default;
};

struct Edge {
    int index = 0;
    Vertex u, v;
    EdgeKind kind = EdgeKind::horizontal;
    // Distinguishes parallel edges. Always 0 in the graphs constructed here:
    // wrap edges that would coincide with an existing edge are coalesced and
    // wrap loops are dropped, which is what gives a torus with m=2 its 3n
    // edges (and the n-cycle for m=1). Downstream algorithms work purely by
    // edge index, so genuine multigraphs would be handled transparently.
    int slot = 0;
};

// An m x n grid or torus with canonical, rebuild-stable vertex and edge
// indexing: vertices are row-major (id = row*cols + col); edges are all
// horizontals in row-major order, then verticals, then wrap-horizontals,
// then wrap-verticals.
class Graph {
public:
    static Graph grid(int rows, int cols);
    static Graph torus(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Topology topology() const { return topology_; }
    int vertex_count() const { return rows_ * cols_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    int vertex_id(int r, int c) const { return r * cols_ + c; }
    Vertex vertex(int id) const { return {id / cols_, id % cols_}; }

    // Incident edge indices, ascending.
    const std::vector<int>& incident(int vertex_id) const { return adjacency_[vertex_id]; }
    int other_endpoint(int edge_index, int vertex_id) const;

    int degree(int vertex_id) const { return static_cast<int>(adjacency_[vertex_id].size()); }

    bool is_bipartite() const { return !colors_.empty(); }
    // The two colour classes (vertex ids, ascending), or nullopt if an odd
    // cycle exists.
    std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition() const;
    // 0/1 colour of a vertex; only valid when is_bipartite().
    int color(int vertex_id) const { return colors_[vertex_id]; }

    bool operator==(const Graph& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && topology_ == o.topology_;
    }

private:
    Graph(int rows, int cols, Topology t);
    void add_edge(Vertex a, Vertex b, EdgeKind kind);
    void finish();

    int rows_, cols_;
    Topology topology_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<signed char> colors_;  // empty when not bipartite
};

// Edmonds' inequality description of the perfect matching polytope for a
// bipartite graph: one equality x(edges at v) = t per vertex, x_e >= 0 per
// edge; the odd-set constraints are redundant and therefore omitted.
// Throws domain_error for non-bipartite input.
struct HDescription {
    int num_edges = 0;
    std::vector<std::vector<int>> equalities;  // per vertex: incident edge indices
    bool odd_set_omitted = true;
};

HDescription h_description(const Graph& g);

}  // namespace gridmagic
