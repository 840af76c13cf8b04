#pragma once

#include <optional>
#include <vector>

#include "avgconn/graph.hpp"
#include "avgconn/spectral.hpp"

namespace avgconn {

/// kappa(u, v): the maximum number of internally vertex-disjoint u,v-paths,
/// computed as unit-capacity max flow on the vertex-split digraph. Returns
/// 0 when u and v lie in different components. Throws when u == v.
int local_connectivity(const Graph& g, int u, int v);

/// Symmetric integer matrix of kappa(u, v) with zero diagonal. The C(n,2)
/// flow computations are independent; threads > 1 maps them in parallel
/// with a private flow network per work item.
std::vector<std::vector<int>> all_pairs_connectivity(const Graph& g, unsigned threads = 1);

struct ConnectivityProfile {
    int n = 0;
    std::vector<std::vector<int>> kappa;
    double kappa_bar = 0.0;
    std::vector<double> transmissions;   // T(v) = row sum of the scaled matrix / C(n,2)
    double transmission_max = 0.0;       // T(G)
};
ConnectivityProfile connectivity_profile(const Graph& g, unsigned threads = 1);

/// The average connectivity matrix: (u,v)-entry kappa(u,v) / C(n,2).
/// Requires a connected graph on n >= 2 vertices; every off-diagonal entry
/// is then strictly positive, so the matrix is irreducible.
SymmetricMatrix avg_connectivity_matrix(const Graph& g, unsigned threads = 1);

/// Integer-scaled companion matrix with entries kappa(u,v); its spectral
/// radius is C(n,2) times that of avg_connectivity_matrix. Kept exact for
/// equality-case detection.
SymmetricMatrix connectivity_matrix_scaled(const Graph& g, unsigned threads = 1);

/// Sum of kappa(u, v) over unordered pairs divided by C(n,2).
double average_connectivity(const Graph& g, unsigned threads = 1);

double transmission(const Graph& g, int v);
double graph_transmission(const Graph& g, unsigned threads = 1);

/// Literal reading: r such that kappa(u,v) = r for every non-adjacent
/// pair; complete graphs return n-1 (no non-adjacent pairs). Requires a
/// connected graph.
std::optional<int> uniform_connectivity(const Graph& g);

/// Strict variant: r such that kappa(u,v) = r for every pair. Exactly the
/// graphs whose scaled matrix has constant row sum r(n-1).
std::optional<int> uniform_connectivity_strict(const Graph& g);

}  // namespace avgconn
