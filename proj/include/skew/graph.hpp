#ifndef SKEW_GRAPH_HPP
#define SKEW_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skew {

/// Unordered vertex pair, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
    bool operator<(const Edge& o) const { return u != o.u ? u < o.u : v < o.v; }
};

/// Immutable simple undirected graph. Edges are kept sorted
/// lexicographically so every downstream output is deterministic.
/// Vertices may carry optional symbolic labels (u_i, v_i, x_j, ...).
class Graph {
  public:
    Graph() = default;
    Graph(int vertex_count, std::vector<Edge> edges,
          std::vector<std::string> labels = {});

    static Graph from_pairs(int vertex_count,
                            const std::vector<std::pair<int, int>>& pairs,
                            std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;

    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
    /// Index of {u,v} in the canonical edge order, or -1.
    int edge_index(int u, int v) const;

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const;
    /// Vertex with the given label, or -1.
    int vertex_by_label(const std::string& name) const;

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && edges_ == o.edges_ && labels_ == o.labels_;
    }

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

/// Subset of the edges of some host graph, canonically sorted.
struct EdgeSubset {
    std::vector<Edge> edges;

    EdgeSubset() = default;
    explicit EdgeSubset(std::vector<Edge> e);

    /// Validates membership in g; throws naming the offending pair.
    static EdgeSubset of(const Graph& g, const std::vector<std::pair<int, int>>& pairs);

    int size() const { return static_cast<int>(edges.size()); }
    bool contains(const Edge& e) const;
    bool operator==(const EdgeSubset& o) const { return edges == o.edges; }
};

Graph delete_edges(const Graph& g, const EdgeSubset& s);
Graph add_edges(const Graph& g, const EdgeSubset& s);
Graph delete_vertices(const Graph& g, const std::vector<int>& vs);

/// Repeatedly replaces degree-2 vertices by an edge joining their
/// neighbors until none remain. Throws if a suppression would create a
/// self-loop or parallel edge (the reductions this supports rely on
/// exact homeomorphic structure, so merging would be a silent bug).
Graph suppress_degree2(const Graph& g);

struct IsoResult {
    bool isomorphic = false;
    std::vector<int> mapping;  // a -> b vertex map when isomorphic
};

/// Edge-preserving bijection test via iterated degree/neighborhood
/// refinement plus backtracking. Intended for graphs up to ~200 vertices.
/// The returned mapping is validated in both directions before returning.
IsoResult is_isomorphic(const Graph& a, const Graph& b);

/// Non-increasing degree sequence.
std::vector<int> degree_sequence(const Graph& g);
/// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Parse failure with 1-based location information.
struct ParseError {
    int line = 0;
    int column = 0;
    std::string message;
};

/// Edge-list text format: "graph <V>", optional "# label <i> <name>"
/// lines, then one "u v" line per edge, 0-indexed and sorted.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);
void write_dot(const Graph& g, std::ostream& out);

}  // namespace skew

#endif
