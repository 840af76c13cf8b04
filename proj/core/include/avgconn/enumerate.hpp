#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "avgconn/graph.hpp"

namespace avgconn {

/// C(n,2)
std::uint64_t pair_count(int n);

/// Number of labeled simple graphs on n vertices, 2^C(n,2).
std::uint64_t edge_subset_count(int n);

/// Column-order index of the pair (i, j) with i < j: x(0,1), x(0,2),
/// x(1,2), x(0,3), ... This is the same bit order graph6 uses.
int pair_index(int i, int j);

/// Graph whose edge set is the bits of `mask` under pair_index ordering.
Graph graph_from_edge_mask(int n, std::uint64_t mask);

/// Connectivity test straight on the edge mask; avoids building a Graph.
bool edge_mask_connected(int n, std::uint64_t mask);

/// Bipartiteness test straight on the edge mask.
bool edge_mask_bipartite(int n, std::uint64_t mask);

/// Streams every labeled connected simple graph on n vertices exactly once
/// (all 2^C(n,2) edge subsets, connected ones kept; no isomorphism
/// reduction). Requires 2 <= n <= 8.
class ConnectedGraphEnumerator {
public:
    explicit ConnectedGraphEnumerator(int n);
    std::optional<Graph> next();

private:
    int n_;
    std::uint64_t mask_ = 0;
    std::uint64_t end_ = 0;
};

void for_each_connected(int n, const std::function<void(const Graph&, std::uint64_t mask)>& fn);

std::uint64_t connected_graph_count(int n);

}  // namespace avgconn
