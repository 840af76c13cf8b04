#pragma once

#include <string>

#include "avgconn/graph.hpp"

namespace avgconn {

/// graph6 encoding, restricted to 1 <= n <= 62 (single-byte size header).
/// Header byte is n+63; the upper-triangle bits x(0,1), x(0,2), x(1,2),
/// x(0,3), ... are packed big-endian six to a byte, each byte offset by 63.
std::string write_graph6(const Graph& g);

/// Strict parser: rejects multi-byte sizes, bad byte ranges, truncated
/// input, trailing bytes, and non-zero padding bits.
Graph parse_graph6(const std::string& text);

/// Edge-list text format: a "n m" header line followed by m lines "u v",
/// 0-indexed, whitespace-separated.
std::string write_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

}  // namespace avgconn
