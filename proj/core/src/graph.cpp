#include "avgconn/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace avgconn {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("Graph: vertex count must be at least 1");
    mask_words_ = (n + 63) / 64;
    adj_.resize(n);
    mask_.assign(static_cast<std::size_t>(n) * mask_words_, 0);

    std::vector<Edge> canon;
    canon.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: loop edge rejected");
        if (u > v) std::swap(u, v);
        canon.emplace_back(u, v);
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    edges_ = std::move(canon);

    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        mask_[static_cast<std::size_t>(u) * mask_words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        mask_[static_cast<std::size_t>(v) * mask_words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (mask_[static_cast<std::size_t>(u) * mask_words_ + v / 64] >> (v % 64)) & 1u;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool is_valid_partition(int n, const VertexPartition& p) {
    std::vector<char> seen(n, 0);
    for (const auto& block : p.blocks) {
        if (block.empty()) return false;
        for (int v : block) {
            if (v < 0 || v >= n || seen[v]) return false;
            seen[v] = 1;
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool is_valid_split(const Graph& g, const PartiteSplit& split) {
    const int n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (int v : split.side_x) {
        if (v < 0 || v >= n || side[v] != -1) return false;
        side[v] = 0;
    }
    for (int v : split.side_y) {
        if (v < 0 || v >= n || side[v] != -1) return false;
        side[v] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (side[v] == -1) return false;
    for (auto [u, v] : g.edges())
        if (side[u] == side[v]) return false;
    return true;
}

Graph build_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

Graph empty_graph(int n) { return Graph(n, {}); }

Graph complete(int n) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph star(int n) {
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph(n, edges);
}

BipartiteGraph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: sides must be non-empty");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(a) * b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    PartiteSplit split;
    for (int i = 0; i < a; ++i) split.side_x.push_back(i);
    for (int j = 0; j < b; ++j) split.side_y.push_back(a + j);
    return BipartiteGraph{Graph(a + b, edges), std::move(split)};
}

Graph join(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count();
    const int n2 = g2.vertex_count();
    std::vector<Edge> edges = g1.edges();
    for (auto [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) edges.emplace_back(u, n1 + v);
    return Graph(n1 + n2, edges);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count();
    std::vector<Edge> edges = g1.edges();
    for (auto [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
    return Graph(n1 + g2.vertex_count(), edges);
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> visited(n, 0);
    std::queue<int> q;
    q.push(0);
    visited[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (!visited[w]) {
                visited[w] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == n;
}

std::optional<PartiteSplit> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    PartiteSplit split;
    for (int start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;  // smallest id in the component goes to side_x
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v)
        (color[v] == 0 ? split.side_x : split.side_y).push_back(v);
    return split;
}

int degree(const Graph& g, int v) { return g.degree(v); }

}  // namespace avgconn
