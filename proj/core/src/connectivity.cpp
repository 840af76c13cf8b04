#include "avgconn/connectivity.hpp"

#include <algorithm>
#include <stdexcept>

#include "avgconn/enumerate.hpp"
#include "avgconn/parallel.hpp"

namespace avgconn {

namespace {

// Dinic blocking-flow solver; unit capacities throughout.
class FlowNetwork {
public:
    explicit FlowNetwork(int nodes) : adj_(nodes), level_(nodes), iter_(nodes) {}

    void add_arc(int from, int to, int cap) {
        adj_[from].push_back({to, static_cast<int>(adj_[to].size()), cap});
        adj_[to].push_back({from, static_cast<int>(adj_[from].size()) - 1, 0});
    }

    int max_flow(int source, int sink) {
        int flow = 0;
        while (bfs(source, sink)) {
            std::fill(iter_.begin(), iter_.end(), 0);
            while (int pushed = dfs(source, sink, 1 << 30)) flow += pushed;
        }
        return flow;
    }

private:
    struct Arc {
        int to;
        int rev;
        int cap;
    };

    bool bfs(int source, int sink) {
        std::fill(level_.begin(), level_.end(), -1);
        queue_.clear();
        queue_.push_back(source);
        level_[source] = 0;
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const int v = queue_[head];
            for (const Arc& a : adj_[v]) {
                if (a.cap > 0 && level_[a.to] < 0) {
                    level_[a.to] = level_[v] + 1;
                    queue_.push_back(a.to);
                }
            }
        }
        return level_[sink] >= 0;
    }

    int dfs(int v, int sink, int limit) {
        if (v == sink) return limit;
        for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
            Arc& a = adj_[v][i];
            if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
            const int pushed = dfs(a.to, sink, std::min(limit, a.cap));
            if (pushed > 0) {
                a.cap -= pushed;
                adj_[a.to][a.rev].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<Arc>> adj_;
    std::vector<int> level_;
    std::vector<int> iter_;
    std::vector<int> queue_;
};

// Vertex-split network: w_in = 2w, w_out = 2w+1. Internal unit arcs only
// for w outside {u, v}; source u_out, sink v_in, so an edge uv contributes
// the direct arc u_out -> v_in.
int flow_connectivity(const Graph& g, int u, int v) {
    const int n = g.vertex_count();
    FlowNetwork net(2 * n);
    for (int w = 0; w < n; ++w)
        if (w != u && w != v) net.add_arc(2 * w, 2 * w + 1, 1);
    for (auto [a, b] : g.edges()) {
        net.add_arc(2 * a + 1, 2 * b, 1);
        net.add_arc(2 * b + 1, 2 * a, 1);
    }
    return net.max_flow(2 * u + 1, 2 * v);
}

long long pair_total(const std::vector<std::vector<int>>& kappa) {
    long long total = 0;
    const int n = static_cast<int>(kappa.size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) total += kappa[u][v];
    return total;
}

void require_order(const Graph& g) {
    if (g.vertex_count() < 2) throw std::invalid_argument("connectivity: need n >= 2");
}

}  // namespace

int local_connectivity(const Graph& g, int u, int v) {
    const int n = g.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("local_connectivity: vertex out of range");
    if (u == v) throw std::invalid_argument("local_connectivity: u and v must differ");
    return flow_connectivity(g, u, v);
}

std::vector<std::vector<int>> all_pairs_connectivity(const Graph& g, unsigned threads) {
    require_order(g);
    const int n = g.vertex_count();
    std::vector<std::vector<int>> kappa(n, std::vector<int>(n, 0));
    std::vector<Edge> pairs;
    pairs.reserve(pair_count(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    parallel_chunks(pairs.size(), threads, [&](std::size_t begin, std::size_t end, unsigned) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto [u, v] = pairs[i];
            const int k = flow_connectivity(g, u, v);
            kappa[u][v] = kappa[v][u] = k;
        }
    });
    return kappa;
}

ConnectivityProfile connectivity_profile(const Graph& g, unsigned threads) {
    require_order(g);
    ConnectivityProfile profile;
    profile.n = g.vertex_count();
    profile.kappa = all_pairs_connectivity(g, threads);
    const double pairs = static_cast<double>(pair_count(profile.n));
    profile.kappa_bar = static_cast<double>(pair_total(profile.kappa)) / pairs;
    profile.transmissions.resize(profile.n);
    for (int v = 0; v < profile.n; ++v) {
        long long row = 0;
        for (int w = 0; w < profile.n; ++w) row += profile.kappa[v][w];
        profile.transmissions[v] = static_cast<double>(row) / pairs;
    }
    profile.transmission_max = *std::max_element(profile.transmissions.begin(), profile.transmissions.end());
    return profile;
}

SymmetricMatrix connectivity_matrix_scaled(const Graph& g, unsigned threads) {
    require_order(g);
    if (!is_connected(g))
        throw std::invalid_argument("connectivity_matrix_scaled: graph must be connected");
    const auto kappa = all_pairs_connectivity(g, threads);
    const int n = g.vertex_count();
    SymmetricMatrix m(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) m.set(u, v, static_cast<double>(kappa[u][v]));
    return m;
}

SymmetricMatrix avg_connectivity_matrix(const Graph& g, unsigned threads) {
    require_order(g);
    if (!is_connected(g))
        throw std::invalid_argument("avg_connectivity_matrix: graph must be connected");
    const auto kappa = all_pairs_connectivity(g, threads);
    const int n = g.vertex_count();
    const double pairs = static_cast<double>(pair_count(n));
    SymmetricMatrix m(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) m.set(u, v, static_cast<double>(kappa[u][v]) / pairs);
    return m;
}

double average_connectivity(const Graph& g, unsigned threads) {
    require_order(g);
    const auto kappa = all_pairs_connectivity(g, threads);
    return static_cast<double>(pair_total(kappa)) / static_cast<double>(pair_count(g.vertex_count()));
}

double transmission(const Graph& g, int v) {
    require_order(g);
    const int n = g.vertex_count();
    if (v < 0 || v >= n) throw std::invalid_argument("transmission: vertex out of range");
    long long row = 0;
    for (int w = 0; w < n; ++w)
        if (w != v) row += flow_connectivity(g, v, w);
    return static_cast<double>(row) / static_cast<double>(pair_count(n));
}

double graph_transmission(const Graph& g, unsigned threads) {
    return connectivity_profile(g, threads).transmission_max;
}

std::optional<int> uniform_connectivity(const Graph& g) {
    require_order(g);
    if (!is_connected(g)) throw std::invalid_argument("uniform_connectivity: graph must be connected");
    const int n = g.vertex_count();
    const auto kappa = all_pairs_connectivity(g);
    int r = -1;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            if (r == -1) r = kappa[u][v];
            else if (kappa[u][v] != r) return std::nullopt;
        }
    }
    // complete graph: no non-adjacent pairs, vacuous case
    return r == -1 ? n - 1 : r;
}

std::optional<int> uniform_connectivity_strict(const Graph& g) {
    require_order(g);
    if (!is_connected(g))
        throw std::invalid_argument("uniform_connectivity_strict: graph must be connected");
    const int n = g.vertex_count();
    const auto kappa = all_pairs_connectivity(g);
    const int r = kappa[0][1];
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (kappa[u][v] != r) return std::nullopt;
    return r;
}

}  // namespace avgconn
