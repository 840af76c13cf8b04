#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "avgconn/graph.hpp"

namespace avgconn {

struct MatchingResult {
    std::vector<Edge> edges;          // pairwise disjoint, |edges| = alpha_prime
    int alpha_prime = 0;
    int deficiency = 0;               // n - 2 * alpha_prime
    // A set S achieving max_S o(G-S) - |S| = deficiency. Found by subset
    // enumeration, so only filled for n <= 20.
    std::optional<std::vector<int>> witness;
};

/// Maximum matching in a general graph via the blossom (contract-and-
/// augment) algorithm; maximality is certified by the absence of
/// augmenting paths and, for n <= 20, by the Berge-Tutte witness.
MatchingResult maximum_matching(const Graph& g);

/// alpha'(G) for a bipartite graph via Hopcroft-Karp. Throws when the
/// split is not a valid bipartition of g.
int bipartite_matching(const Graph& g, const PartiteSplit& split);

/// Number of odd-order components of G - S.
int odd_component_count(const Graph& g, const std::vector<int>& s);

/// (max_S o(G-S) - |S|, argmax S) by exhaustive subset search; ties broken
/// by smallest |S|, then lexicographic vertex order. Requires n <= 20.
std::pair<int, std::vector<int>> berge_tutte_deficiency(const Graph& g);

/// S subseteq X with alpha'(G) = |X| - |S| + |N(S)|, computed from a
/// maximum matching by alternating reachability from unmatched X-vertices.
/// Returns the empty set when a matching saturates X. X is side_x of the
/// split; the identity holds for either side designation.
std::vector<int> hall_witness(const Graph& g, const PartiteSplit& split);

}  // namespace avgconn
