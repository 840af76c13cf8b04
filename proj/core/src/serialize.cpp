#include "avgconn/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace avgconn {

namespace {
constexpr int kOffset = 63;
}

std::string write_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("write_graph6: only n <= 62 supported");
    std::string out;
    out.push_back(static_cast<char>(kOffset + n));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kOffset + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(kOffset + (acc << (6 - filled))));
    return out;
}

Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_graph6: empty input");
    const unsigned char header = static_cast<unsigned char>(text[0]);
    if (header == 126) throw std::invalid_argument("parse_graph6: multi-byte sizes (n > 62) not supported");
    if (header < kOffset || header > kOffset + 62)
        throw std::invalid_argument("parse_graph6: malformed header byte");
    const int n = header - kOffset;
    if (n < 1) throw std::invalid_argument("parse_graph6: graph must have at least one vertex");

    const int nbits = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() < 1 + need) throw std::invalid_argument("parse_graph6: truncated input");
    if (text.size() > 1 + need) throw std::invalid_argument("parse_graph6: trailing garbage");

    std::vector<Edge> edges;
    int bit = 0;
    for (std::size_t p = 1; p < text.size(); ++p) {
        const unsigned char c = static_cast<unsigned char>(text[p]);
        if (c < kOffset || c > kOffset + 63)
            throw std::invalid_argument("parse_graph6: data byte out of range");
        const int v6 = c - kOffset;
        for (int b = 5; b >= 0; --b, ++bit) {
            const int on = (v6 >> b) & 1;
            if (bit >= nbits) {
                if (on) throw std::invalid_argument("parse_graph6: non-zero padding bits");
                continue;
            }
            if (on) {
                // invert the column-order index: bit -> pair (i, j), i < j
                int j = 1;
                while ((j + 1) * j / 2 <= bit) ++j;
                const int i = bit - j * (j - 1) / 2;
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph(n, edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("parse_edge_list: missing \"n m\" header");
    if (m < 0) throw std::invalid_argument("parse_edge_list: negative edge count");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("parse_edge_list: truncated edge list");
        edges.emplace_back(u, v);
    }
    std::string rest;
    if (in >> rest) throw std::invalid_argument("parse_edge_list: trailing garbage");
    return Graph(n, edges);
}

}  // namespace avgconn
