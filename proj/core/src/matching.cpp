#include "avgconn/matching.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace avgconn {

namespace {

// Classic blossom algorithm: BFS for an augmenting path from each exposed
// root, contracting odd cycles onto their base vertex as they appear.
class BlossomMatcher {
public:
    explicit BlossomMatcher(const Graph& g)
        : g_(g), n_(g.vertex_count()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

    std::vector<int> run() {
        // Greedy seed matching; the search below only augments.
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            for (int w : g_.neighbors(v)) {
                if (match_[w] == -1) {
                    match_[v] = w;
                    match_[w] = v;
                    break;
                }
            }
        }
        for (int root = 0; root < n_; ++root) {
            if (match_[root] != -1) continue;
            const int leaf = find_augmenting_path(root);
            if (leaf != -1) augment(leaf);
        }
        return match_;
    }

private:
    int find_augmenting_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    // Two even-level vertices meet: contract the blossom.
                    const int cur_base = lowest_common_ancestor(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i) {
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur_base;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    int lowest_common_ancestor(int a, int b) {
        std::vector<char> on_path(n_, 0);
        int v = a;
        for (;;) {
            v = base_[v];
            on_path[v] = 1;
            if (match_[v] == -1) break;
            v = parent_[match_[v]];
        }
        v = b;
        while (!on_path[base_[v]]) v = parent_[match_[base_[v]]];
        return base_[v];
    }

    void mark_path(int v, int until_base, int child) {
        while (base_[v] != until_base) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    void augment(int leaf) {
        int v = leaf;
        while (v != -1) {
            const int pv = parent_[v];
            const int next = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, in_blossom_;
};

// Lexicographic order on equal-size vertex sets encoded as bitmasks: the
// set owning the smallest element of the symmetric difference comes first.
bool lex_less_mask(unsigned a, unsigned b) {
    const unsigned diff = a ^ b;
    if (diff == 0) return false;
    return (a >> __builtin_ctz(diff)) & 1u;
}

std::vector<int> mask_to_vertices(unsigned mask) {
    std::vector<int> out;
    for (int v = 0; mask != 0; ++v, mask >>= 1)
        if (mask & 1u) out.push_back(v);
    return out;
}

struct SplitIndex {
    std::vector<int> side;      // 0 for X, 1 for Y
    std::vector<int> x_index;   // position within side_x, -1 otherwise
    std::vector<int> y_index;
};

SplitIndex index_split(const Graph& g, const PartiteSplit& split) {
    if (!is_valid_split(g, split))
        throw std::invalid_argument("matching: split is not a valid bipartition");
    const int n = g.vertex_count();
    SplitIndex idx;
    idx.side.assign(n, -1);
    idx.x_index.assign(n, -1);
    idx.y_index.assign(n, -1);
    for (std::size_t i = 0; i < split.side_x.size(); ++i) {
        idx.side[split.side_x[i]] = 0;
        idx.x_index[split.side_x[i]] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < split.side_y.size(); ++i) {
        idx.side[split.side_y[i]] = 1;
        idx.y_index[split.side_y[i]] = static_cast<int>(i);
    }
    return idx;
}

// Hopcroft-Karp; returns pair_x (matched y-index per x-index, -1 if free).
std::vector<int> hopcroft_karp(const Graph& g, const PartiteSplit& split, const SplitIndex& idx) {
    const int nx = static_cast<int>(split.side_x.size());
    std::vector<int> pair_x(nx, -1), pair_y(split.side_y.size(), -1);
    std::vector<int> dist(nx);
    constexpr int kInf = 1 << 30;

    auto bfs = [&]() {
        std::queue<int> q;
        for (int xi = 0; xi < nx; ++xi) {
            if (pair_x[xi] == -1) {
                dist[xi] = 0;
                q.push(xi);
            } else {
                dist[xi] = kInf;
            }
        }
        bool reachable_free = false;
        while (!q.empty()) {
            const int xi = q.front();
            q.pop();
            for (int w : g.neighbors(split.side_x[xi])) {
                const int yi = idx.y_index[w];
                const int nxt = pair_y[yi];
                if (nxt == -1) {
                    reachable_free = true;
                } else if (dist[nxt] == kInf) {
                    dist[nxt] = dist[xi] + 1;
                    q.push(nxt);
                }
            }
        }
        return reachable_free;
    };

    std::function<bool(int)> dfs = [&](int xi) {
        for (int w : g.neighbors(split.side_x[xi])) {
            const int yi = idx.y_index[w];
            const int nxt = pair_y[yi];
            if (nxt == -1 || (dist[nxt] == dist[xi] + 1 && dfs(nxt))) {
                pair_x[xi] = yi;
                pair_y[yi] = xi;
                return true;
            }
        }
        dist[xi] = kInf;
        return false;
    };

    while (bfs())
        for (int xi = 0; xi < nx; ++xi)
            if (pair_x[xi] == -1) dfs(xi);
    return pair_x;
}

}  // namespace

MatchingResult maximum_matching(const Graph& g) {
    const int n = g.vertex_count();
    const std::vector<int> match = BlossomMatcher(g).run();

    MatchingResult result;
    for (int v = 0; v < n; ++v)
        if (match[v] > v) result.edges.emplace_back(v, match[v]);
    result.alpha_prime = static_cast<int>(result.edges.size());
    result.deficiency = n - 2 * result.alpha_prime;
    if (n <= 20) result.witness = berge_tutte_deficiency(g).second;
    return result;
}

int bipartite_matching(const Graph& g, const PartiteSplit& split) {
    const SplitIndex idx = index_split(g, split);
    const auto pair_x = hopcroft_karp(g, split, idx);
    return static_cast<int>(std::count_if(pair_x.begin(), pair_x.end(), [](int p) { return p != -1; }));
}

int odd_component_count(const Graph& g, const std::vector<int>& s) {
    const int n = g.vertex_count();
    std::vector<char> removed(n, 0);
    for (int v : s) {
        if (v < 0 || v >= n) throw std::invalid_argument("odd_component_count: vertex out of range");
        removed[v] = 1;
    }
    std::vector<char> visited(n, 0);
    int odd = 0;
    for (int start = 0; start < n; ++start) {
        if (removed[start] || visited[start]) continue;
        int size = 0;
        std::queue<int> q;
        q.push(start);
        visited[start] = 1;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            ++size;
            for (int w : g.neighbors(v))
                if (!removed[w] && !visited[w]) {
                    visited[w] = 1;
                    q.push(w);
                }
        }
        if (size % 2 == 1) ++odd;
    }
    return odd;
}

std::pair<int, std::vector<int>> berge_tutte_deficiency(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("berge_tutte_deficiency: exhaustive search limited to n <= 20");

    int best_dfc = -n - 1;
    int best_size = 0;
    unsigned best_mask = 0;
    const unsigned total = 1u << n;
    std::vector<int> subset;
    for (unsigned mask = 0; mask < total; ++mask) {
        subset = mask_to_vertices(mask);
        const int dfc = odd_component_count(g, subset) - static_cast<int>(subset.size());
        const int size = static_cast<int>(subset.size());
        if (dfc > best_dfc ||
            (dfc == best_dfc && (size < best_size || (size == best_size && lex_less_mask(mask, best_mask))))) {
            best_dfc = dfc;
            best_size = size;
            best_mask = mask;
        }
    }
    return {best_dfc, mask_to_vertices(best_mask)};
}

std::vector<int> hall_witness(const Graph& g, const PartiteSplit& split) {
    const SplitIndex idx = index_split(g, split);
    const auto pair_x = hopcroft_karp(g, split, idx);
    const int nx = static_cast<int>(split.side_x.size());

    std::vector<int> pair_y(split.side_y.size(), -1);
    for (int xi = 0; xi < nx; ++xi)
        if (pair_x[xi] != -1) pair_y[pair_x[xi]] = xi;

    // Alternating reachability from unmatched X-vertices: X -> Y along
    // non-matching edges, Y -> X along matching edges. S = reachable
    // X-vertices; then |N(S)| = reachable Y and alpha' = |X| - |S| + |N(S)|.
    std::vector<char> seen_x(nx, 0), seen_y(split.side_y.size(), 0);
    std::queue<int> q;
    for (int xi = 0; xi < nx; ++xi)
        if (pair_x[xi] == -1) {
            seen_x[xi] = 1;
            q.push(xi);
        }
    while (!q.empty()) {
        const int xi = q.front();
        q.pop();
        for (int w : g.neighbors(split.side_x[xi])) {
            const int yi = idx.y_index[w];
            if (seen_y[yi]) continue;
            seen_y[yi] = 1;
            const int back = pair_y[yi];
            if (back != -1 && !seen_x[back]) {
                seen_x[back] = 1;
                q.push(back);
            }
        }
    }

    std::vector<int> witness;
    for (int xi = 0; xi < nx; ++xi)
        if (seen_x[xi]) witness.push_back(split.side_x[xi]);
    std::sort(witness.begin(), witness.end());
    return witness;
}

}  // namespace avgconn
