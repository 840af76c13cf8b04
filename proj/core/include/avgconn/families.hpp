#pragma once

#include <vector>

#include "avgconn/graph.hpp"

namespace avgconn {

/// K_s joined to a disjoint union of cliques: K_s v (K_{n1} u ... u K_{nq}).
/// Vertex layout: the join clique occupies 0..s-1, the parts follow in
/// order. Requires s >= 1, every part >= 1, and s + sum(parts) == n.
Graph split_family(int n, int s, const std::vector<int>& part_sizes);

/// Natural partition of split_family: {join clique, part 1, ..., part q}.
VertexPartition split_family_partition(int s, const std::vector<int>& part_sizes);

/// G1 = K_1 v (K_{n-t-1} u t*K_1). Requires t >= 2, n >= t+2.
Graph g1_family(int n, int t);

/// Three blocks: {apex}, {clique}, {independent set}.
VertexPartition g1_family_partition(int n, int t);

/// G2 = K_{(n-t)/2} v empty((n+t)/2). Requires t >= 2, n >= t+2, n = t mod 2.
Graph g2_family(int n, int t);

/// Two blocks: {clique}, {independent set}.
VertexPartition g2_family_partition(int n, int t);

/// Bipartite graph with X = S u (X-S) and Y = N(S) u (Y-N(S)); complete
/// bipartite connections S x N(S), (X-S) x N(S), (X-S) x (Y-N(S)), and no
/// edges between S and Y-N(S). Its matching number is x - s + n_s whenever
/// s >= n_s.
///
/// Vertex layout: S = [0, s), X-S = [s, x), N(S) = [x, x+n_s),
/// Y-N(S) = [x+n_s, x+y). Requires 1 <= s <= x, 1 <= n_s <= y, x <= y.
struct GStarGraph {
    Graph graph;
    PartiteSplit split;       // side_x = X, side_y = Y
    VertexPartition blocks;   // {S, N(S), X-S, Y-N(S)}, empty blocks omitted
};
GStarGraph gstar_family(int s, int n_s, int x, int y);

/// Partite partition of complete_bipartite(a, b): {side_x, side_y}.
VertexPartition complete_bipartite_partition(int a, int b);

}  // namespace avgconn
