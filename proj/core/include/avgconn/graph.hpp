#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace avgconn {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1, immutable after construction.
///
/// Adjacency is stored twice: sorted neighbor lists for iteration and a
/// per-vertex bitmask for O(1) edge tests. Duplicate input edges are
/// collapsed; loops and out-of-range endpoints throw std::invalid_argument.
class Graph {
public:
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int u, int v) const;
    int degree(int v) const;

    /// Canonical edge list: each edge as (u, v) with u < v, lexicographically sorted.
    const std::vector<Edge>& edges() const { return edges_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    int mask_words_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> mask_;  // n_ rows of mask_words_ words each
    std::vector<Edge> edges_;

    void check_vertex(int v) const;
};

/// Two sides of a bipartition; every edge runs between side_x and side_y.
struct PartiteSplit {
    std::vector<int> side_x;
    std::vector<int> side_y;
};

/// Ordered list of disjoint non-empty vertex blocks covering 0..n-1.
struct VertexPartition {
    std::vector<std::vector<int>> blocks;
};

bool is_valid_partition(int n, const VertexPartition& p);
bool is_valid_split(const Graph& g, const PartiteSplit& split);

Graph build_graph(int n, const std::vector<Edge>& edges);
Graph empty_graph(int n);
Graph complete(int n);
Graph cycle(int n);   // n >= 3
Graph path(int n);
Graph star(int n);    // K_{1,n-1}: center 0, leaves 1..n-1

struct BipartiteGraph {
    Graph graph;
    PartiteSplit split;
};
BipartiteGraph complete_bipartite(int a, int b);  // side_x = 0..a-1, side_y = a..a+b-1

/// Disjoint union plus all edges between the two vertex sets.
/// Vertices of g2 are shifted by g1.vertex_count().
Graph join(const Graph& g1, const Graph& g2);

/// Vertex-disjoint union; g2 ids shifted by g1.vertex_count().
Graph disjoint_union(const Graph& g1, const Graph& g2);

bool is_connected(const Graph& g);

/// 2-coloring. For connected graphs the split is unique up to swapping
/// sides; the component's smallest vertex always lands in side_x. Returns
/// nullopt when the graph has an odd cycle.
std::optional<PartiteSplit> bipartition(const Graph& g);

int degree(const Graph& g, int v);

}  // namespace avgconn
