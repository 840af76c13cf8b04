#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "avgconn/graph.hpp"

namespace avgconn {

struct EqualityFlags {
    bool thm12_lower = false;          // rho = 2*kappa_bar/n
    bool thm12_upper = false;          // rho = T(G)
    bool thm13 = false;                // kappa_bar = 2*alpha'  (exact integer test)
    bool thm14 = false;                // rho = 4*alpha'/n
    std::optional<bool> thm15;         // rho = bipartite bound; bipartite graphs only
};

struct BoundReport {
    double thm12_lower = 0.0;          // 2*kappa_bar/n
    double thm12_upper = 0.0;          // T(G)
    double thm13_bound = 0.0;          // 2*alpha'
    double thm14_bound = 0.0;          // 4*alpha'/n
    std::optional<double> thm15_bound; // (n-alpha')(4*alpha'-2)/(n(n-1))
    double rho = 0.0;
    EqualityFlags equality_flags;
};

struct AnalysisReport {
    int n = 0;
    int m = 0;
    bool bipartite = false;
    int alpha_prime = 0;
    int deficiency = 0;
    double kappa_bar = 0.0;
    double rho = 0.0;
    double transmission_max = 0.0;
    BoundReport bounds;
    EqualityFlags equality_flags;
};

/// Full per-graph report. Deterministic given g. Requires a connected
/// graph on n >= 2 vertices.
AnalysisReport analyze(const Graph& g, unsigned threads = 1);

struct BoundViolation {
    std::string graph6;
    std::string bound;   // which inequality failed
    double margin = 0.0; // bound minus rho (negative when violated)
};

/// Checks every bound inequality of the report at tolerance tol; an empty
/// result certifies the report.
std::vector<BoundViolation> bound_violations(const AnalysisReport& report, const std::string& graph6,
                                             double tol = 1e-9);

struct SweepEqualityCases {
    std::vector<std::string> thm12_lower;
    std::vector<std::string> thm12_upper;
    std::vector<std::string> thm13;
    std::vector<std::string> thm14;
    std::vector<std::string> thm15;
};

struct AlphaMaximizer {
    std::string graph6;
    double rho = 0.0;
};

struct SweepSummary {
    int n = 0;
    bool bipartite_only = false;
    std::uint64_t graphs_checked = 0;
    std::vector<BoundViolation> violations;       // must be empty on release runs
    SweepEqualityCases equality_cases;
    std::map<int, AlphaMaximizer> max_rho_by_alpha;
};

/// Runs analyze over every labeled connected (optionally bipartite) graph
/// on n vertices, 2 <= n <= 7. Graphs are visited in edge-mask order;
/// results are merged deterministically regardless of the thread count.
/// When csv is non-null, one CSV row per graph is written in mask order.
SweepSummary sweep_exhaustive(int n, bool bipartite_only, unsigned threads = 0,
                              std::ostream* csv = nullptr);

const char* sweep_csv_header();

struct ClaimResult {
    std::string name;
    bool pass = false;
    double worst_margin = 0.0;  // smallest slack seen; negative means violated
    std::string detail;
};

/// Parameter-grid and monotonicity checks for every closed-form claim:
/// strict extremal-family bounds, closed-form vs numeric agreement,
/// quotient/equitable-partition radius matching, vertex-move monotonicity
/// and row-sum bounds. tol applies to the agreement checks; monotonicity
/// margins and exact identities use their own pinned tolerances.
std::vector<ClaimResult> verify_claims(double tol = 1e-9, unsigned threads = 0);

std::string to_json(const AnalysisReport& report);
std::string to_json(const SweepSummary& summary);
std::string to_json(const std::vector<ClaimResult>& results);

}  // namespace avgconn
