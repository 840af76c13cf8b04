#include "avgconn/enumerate.hpp"

#include <stdexcept>

namespace avgconn {

namespace {

void check_enum_range(int n) {
    if (n < 2 || n > 8) throw std::invalid_argument("enumerate_connected: need 2 <= n <= 8");
}

// Per-vertex adjacency rows for a mask; n <= 8 so a byte per row suffices.
void mask_rows(int n, std::uint64_t mask, unsigned rows[8]) {
    for (int v = 0; v < n; ++v) rows[v] = 0;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1) {
                rows[i] |= 1u << j;
                rows[j] |= 1u << i;
            }
}

}  // namespace

std::uint64_t pair_count(int n) { return static_cast<std::uint64_t>(n) * (n - 1) / 2; }

std::uint64_t edge_subset_count(int n) { return std::uint64_t{1} << pair_count(n); }

int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1) edges.emplace_back(i, j);
    return Graph(n, edges);
}

bool edge_mask_connected(int n, std::uint64_t mask) {
    unsigned rows[8];
    mask_rows(n, mask, rows);
    unsigned reached = 1u;
    unsigned frontier = 1u;
    const unsigned all = (1u << n) - 1;
    while (frontier != 0) {
        unsigned next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1) next |= rows[v];
        frontier = next & ~reached;
        reached |= frontier;
        if (reached == all) return true;
    }
    return reached == all;
}

bool edge_mask_bipartite(int n, std::uint64_t mask) {
    unsigned rows[8];
    mask_rows(n, mask, rows);
    int color[8];
    for (int v = 0; v < n; ++v) color[v] = -1;
    for (int start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        int stack[8];
        int top = 0;
        stack[top++] = start;
        while (top > 0) {
            const int v = stack[--top];
            for (int w = 0; w < n; ++w) {
                if (!((rows[v] >> w) & 1)) continue;
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack[top++] = w;
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

ConnectedGraphEnumerator::ConnectedGraphEnumerator(int n) : n_(n) {
    check_enum_range(n);
    end_ = edge_subset_count(n);
}

std::optional<Graph> ConnectedGraphEnumerator::next() {
    while (mask_ < end_) {
        const std::uint64_t m = mask_++;
        if (edge_mask_connected(n_, m)) return graph_from_edge_mask(n_, m);
    }
    return std::nullopt;
}

void for_each_connected(int n, const std::function<void(const Graph&, std::uint64_t)>& fn) {
    check_enum_range(n);
    const std::uint64_t end = edge_subset_count(n);
    for (std::uint64_t mask = 0; mask < end; ++mask)
        if (edge_mask_connected(n, mask)) fn(graph_from_edge_mask(n, mask), mask);
}

std::uint64_t connected_graph_count(int n) {
    check_enum_range(n);
    const std::uint64_t end = edge_subset_count(n);
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < end; ++mask)
        if (edge_mask_connected(n, mask)) ++count;
    return count;
}

}  // namespace avgconn
