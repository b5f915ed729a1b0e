#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ramsey {

/// Position of an edge in the sorted edge sequence of its graph.
using EdgeId = std::uint32_t;

/// Undirected edge, always stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    constexpr auto operator<=>(const Edge&) const = default;

    constexpr bool touches(int x) const { return u == x || v == x; }
};

/// Builds the canonical (min, max) edge and rejects loops.
Edge make_edge(int a, int b);

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept in lexicographic order, which is the fixed total order of
/// E(K_n) used by focus sets and profiles. The adjacency matrix is stored as
/// one bit row per vertex so neighbourhood intersections are word operations.
/// Values are immutable after construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Throws std::invalid_argument on loops, out-of-range endpoints or
    /// repeated edges. Edge orientation and order are normalised.
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_[id]; }

    bool adjacent(int u, int v) const;
    bool contains(const Edge& e) const { return adjacent(e.u, e.v); }
    std::optional<EdgeId> edge_id(int u, int v) const;

    std::size_t words_per_row() const { return words_; }
    std::span<const std::uint64_t> row(int v) const;
    int degree(int v) const;
    std::vector<int> neighbours(int v) const;

    /// Induced subgraph on `vertices`, relabelled 0..k-1 in the given order.
    Graph induced(std::span<const int> vertices) const;
    /// Same vertex set, edge `id` removed.
    Graph without_edge(EdgeId id) const;
    /// Same vertex set, edge added (no-op if present).
    Graph with_edge(Edge e) const;
    /// Number of edges with both endpoints in `vertices` (treated as a set).
    std::size_t induced_edge_count(std::span<const int> vertices) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adj_;
};

/// Edge-set union on a common vertex count.
Graph graph_union(const Graph& a, const Graph& b);

/// True iff every edge of `sub` is an edge of `super` (same vertex count).
bool is_subgraph(const Graph& sub, const Graph& super);

/// Edges with both endpoints in U.
std::size_t edge_count_between(const Graph& g, std::span<const int> U);
/// Edges with one endpoint in U and one in W; U and W must be disjoint.
std::size_t edge_count_between(const Graph& g, std::span<const int> U, std::span<const int> W);

/// Whether the graph admits a proper 2-colouring.
bool is_bipartite(const Graph& g);

namespace named {
Graph empty(int n);
Graph complete(int n);
Graph cycle(int k);
/// Path on k vertices.
Graph path(int k);
/// K_k minus the edge {0,1}.
Graph complete_minus_edge(int k);
Graph complete_bipartite(int a, int b);
/// Star K_{1,k} with centre 0.
Graph star(int k);
}  // namespace named

/// Parses "K5", "C7", "P4", "K4-e", "K2,3" into a graph; throws on anything else.
Graph parse_named_graph(const std::string& name);
bool is_named_graph(const std::string& name);

}  // namespace ramsey
