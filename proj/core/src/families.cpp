#include "avgconn/families.hpp"

#include <numeric>
#include <stdexcept>

namespace avgconn {

namespace {

std::vector<int> range_block(int begin, int end) {
    std::vector<int> block(end - begin);
    std::iota(block.begin(), block.end(), begin);
    return block;
}

}  // namespace

Graph split_family(int n, int s, const std::vector<int>& part_sizes) {
    if (s < 1) throw std::invalid_argument("split_family: need s >= 1");
    if (part_sizes.empty()) throw std::invalid_argument("split_family: need at least one part");
    int total = s;
    for (int p : part_sizes) {
        if (p < 1) throw std::invalid_argument("split_family: every part must be >= 1");
        total += p;
    }
    if (total != n) throw std::invalid_argument("split_family: sizes do not sum to n");

    Graph rest = complete(part_sizes.front());
    for (std::size_t i = 1; i < part_sizes.size(); ++i)
        rest = disjoint_union(rest, complete(part_sizes[i]));
    return join(complete(s), rest);
}

VertexPartition split_family_partition(int s, const std::vector<int>& part_sizes) {
    VertexPartition p;
    p.blocks.push_back(range_block(0, s));
    int off = s;
    for (int size : part_sizes) {
        p.blocks.push_back(range_block(off, off + size));
        off += size;
    }
    return p;
}

Graph g1_family(int n, int t) {
    if (t < 2) throw std::invalid_argument("g1_family: need t >= 2");
    if (n < t + 2) throw std::invalid_argument("g1_family: need n >= t + 2");
    std::vector<int> parts{n - t - 1};
    parts.insert(parts.end(), t, 1);
    return split_family(n, 1, parts);
}

VertexPartition g1_family_partition(int n, int t) {
    VertexPartition p;
    p.blocks.push_back({0});
    p.blocks.push_back(range_block(1, n - t));
    p.blocks.push_back(range_block(n - t, n));
    return p;
}

Graph g2_family(int n, int t) {
    if (t < 2) throw std::invalid_argument("g2_family: need t >= 2");
    if (n < t + 2) throw std::invalid_argument("g2_family: need n >= t + 2");
    if ((n - t) % 2 != 0) throw std::invalid_argument("g2_family: need n = t (mod 2)");
    return split_family(n, (n - t) / 2, std::vector<int>((n + t) / 2, 1));
}

VertexPartition g2_family_partition(int n, int t) {
    const int a = (n - t) / 2;
    VertexPartition p;
    p.blocks.push_back(range_block(0, a));
    p.blocks.push_back(range_block(a, n));
    return p;
}

GStarGraph gstar_family(int s, int n_s, int x, int y) {
    if (s < 1 || n_s < 1) throw std::invalid_argument("gstar_family: need s >= 1 and n_s >= 1");
    if (s > x || n_s > y) throw std::invalid_argument("gstar_family: need s <= x and n_s <= y");
    if (x > y) throw std::invalid_argument("gstar_family: need x <= y");

    const int n = x + y;
    std::vector<Edge> edges;
    for (int u = 0; u < s; ++u)                       // S x N(S)
        for (int w = x; w < x + n_s; ++w) edges.emplace_back(u, w);
    for (int u = s; u < x; ++u)                       // (X-S) x Y
        for (int w = x; w < n; ++w) edges.emplace_back(u, w);

    GStarGraph out{Graph(n, edges), {}, {}};
    out.split.side_x = range_block(0, x);
    out.split.side_y = range_block(x, n);
    out.blocks.blocks.push_back(range_block(0, s));
    out.blocks.blocks.push_back(range_block(x, x + n_s));
    if (x > s) out.blocks.blocks.push_back(range_block(s, x));
    if (y > n_s) out.blocks.blocks.push_back(range_block(x + n_s, n));
    return out;
}

VertexPartition complete_bipartite_partition(int a, int b) {
    VertexPartition p;
    p.blocks.push_back(range_block(0, a));
    p.blocks.push_back(range_block(a, a + b));
    return p;
}

}  // namespace avgconn
