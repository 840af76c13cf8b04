#include "avgconn/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "avgconn/bounds.hpp"
#include "avgconn/connectivity.hpp"
#include "avgconn/enumerate.hpp"
#include "avgconn/families.hpp"
#include "avgconn/matching.hpp"
#include "avgconn/parallel.hpp"
#include "avgconn/serialize.hpp"
#include "avgconn/spectral.hpp"

namespace avgconn {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

void append_json_string(std::string& out, const std::string& s) {
    out.push_back('"');
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    out.push_back('"');
}

// Equality between the integer-scaled radius and an integer-scaled bound,
// relative tolerance 1e-9; avoids false positives from float division.
bool scaled_equal(double rho_scaled, double bound_scaled) {
    return std::abs(rho_scaled - bound_scaled) <= 1e-9 * std::max(1.0, std::abs(bound_scaled));
}

double numeric_rho(const Graph& g) {
    return eigen_symmetric(connectivity_matrix_scaled(g, 1)).eigenvalues.front() /
           static_cast<double>(pair_count(g.vertex_count()));
}

}  // namespace

AnalysisReport analyze(const Graph& g, unsigned threads) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("analyze: need n >= 2");
    if (!is_connected(g)) throw std::invalid_argument("analyze: graph is disconnected");

    const auto kappa = all_pairs_connectivity(g, threads);
    const double pairs = static_cast<double>(pair_count(n));
    const long long pairs_int = static_cast<long long>(pair_count(n));

    long long kappa_total = 0;
    long long max_row = 0;
    SymmetricMatrix scaled(n);
    for (int u = 0; u < n; ++u) {
        long long row = 0;
        for (int v = 0; v < n; ++v) {
            row += kappa[u][v];
            if (v > u) {
                kappa_total += kappa[u][v];
                scaled.set(u, v, static_cast<double>(kappa[u][v]));
            }
        }
        max_row = std::max(max_row, row);
    }

    const double rho_scaled = eigen_symmetric(scaled).eigenvalues.front();
    const MatchingResult matching = maximum_matching(g);
    const int alpha = matching.alpha_prime;
    const bool bip = bipartition(g).has_value();

    AnalysisReport report;
    report.n = n;
    report.m = g.edge_count();
    report.bipartite = bip;
    report.alpha_prime = alpha;
    report.deficiency = matching.deficiency;
    report.kappa_bar = static_cast<double>(kappa_total) / pairs;
    report.rho = rho_scaled / pairs;
    report.transmission_max = static_cast<double>(max_row) / pairs;

    BoundReport& b = report.bounds;
    b.thm12_lower = 2.0 * report.kappa_bar / n;
    b.thm12_upper = report.transmission_max;
    b.thm13_bound = 2.0 * alpha;
    b.thm14_bound = 4.0 * static_cast<double>(alpha) / n;
    if (bip) b.thm15_bound = (n - alpha) * (4.0 * alpha - 2.0) / (static_cast<double>(n) * (n - 1));
    b.rho = report.rho;

    EqualityFlags eq;
    eq.thm12_lower = scaled_equal(rho_scaled, 2.0 * static_cast<double>(kappa_total) / n);
    eq.thm12_upper = scaled_equal(rho_scaled, static_cast<double>(max_row));
    eq.thm13 = (kappa_total == 2LL * alpha * pairs_int);  // exact integers on both sides
    eq.thm14 = scaled_equal(rho_scaled, 2.0 * alpha * (n - 1.0));
    if (bip) eq.thm15 = scaled_equal(rho_scaled, static_cast<double>((n - alpha)) * (2.0 * alpha - 1.0));
    b.equality_flags = eq;
    report.equality_flags = eq;
    return report;
}

std::vector<BoundViolation> bound_violations(const AnalysisReport& r, const std::string& graph6, double tol) {
    std::vector<BoundViolation> out;
    const auto check = [&](const char* name, double margin) {
        if (margin < -tol) out.push_back({graph6, name, margin});
    };
    check("thm12_lower", r.rho - r.bounds.thm12_lower);
    check("thm12_upper", r.bounds.thm12_upper - r.rho);
    check("thm13", r.bounds.thm13_bound - r.kappa_bar);
    check("thm14", r.bounds.thm14_bound - r.rho);
    if (r.bounds.thm15_bound) check("thm15", *r.bounds.thm15_bound - r.rho);
    return out;
}

const char* sweep_csv_header() {
    return "graph6,n,m,alpha_prime,kappa_bar,rho,T_G,thm14_bound,thm15_bound,"
           "eq_thm12_lower,eq_thm12_upper,eq_thm13,eq_thm14,eq_thm15";
}

SweepSummary sweep_exhaustive(int n, bool bipartite_only, unsigned threads, std::ostream* csv) {
    if (n < 2 || n > 7) throw std::invalid_argument("sweep_exhaustive: need 2 <= n <= 7");

    SweepSummary summary;
    summary.n = n;
    summary.bipartite_only = bipartite_only;
    if (csv) *csv << sweep_csv_header() << '\n';

    struct Row {
        std::string graph6;
        AnalysisReport report;
    };

    const std::uint64_t end = edge_subset_count(n);
    const std::uint64_t block = std::uint64_t{1} << 15;
    std::vector<std::optional<Row>> slots;
    for (std::uint64_t base = 0; base < end; base += block) {
        const std::size_t count = static_cast<std::size_t>(std::min(block, end - base));
        slots.assign(count, std::nullopt);
        parallel_chunks(count, threads, [&](std::size_t lo, std::size_t hi, unsigned) {
            for (std::size_t i = lo; i < hi; ++i) {
                const std::uint64_t mask = base + i;
                if (!edge_mask_connected(n, mask)) continue;
                if (bipartite_only && !edge_mask_bipartite(n, mask)) continue;
                const Graph g = graph_from_edge_mask(n, mask);
                slots[i] = Row{write_graph6(g), analyze(g, 1)};
            }
        });
        for (const auto& slot : slots) {
            if (!slot) continue;
            const Row& row = *slot;
            ++summary.graphs_checked;
            auto bad = bound_violations(row.report, row.graph6);
            summary.violations.insert(summary.violations.end(), bad.begin(), bad.end());
            const EqualityFlags& eq = row.report.equality_flags;
            if (eq.thm12_lower) summary.equality_cases.thm12_lower.push_back(row.graph6);
            if (eq.thm12_upper) summary.equality_cases.thm12_upper.push_back(row.graph6);
            if (eq.thm13) summary.equality_cases.thm13.push_back(row.graph6);
            if (eq.thm14) summary.equality_cases.thm14.push_back(row.graph6);
            if (eq.thm15 && *eq.thm15) summary.equality_cases.thm15.push_back(row.graph6);

            auto [it, inserted] = summary.max_rho_by_alpha.try_emplace(
                row.report.alpha_prime, AlphaMaximizer{row.graph6, row.report.rho});
            if (!inserted && row.report.rho > it->second.rho)
                it->second = AlphaMaximizer{row.graph6, row.report.rho};

            if (csv) {
                const AnalysisReport& r = row.report;
                *csv << row.graph6 << ',' << r.n << ',' << r.m << ',' << r.alpha_prime << ','
                     << fmt(r.kappa_bar) << ',' << fmt(r.rho) << ',' << fmt(r.transmission_max) << ','
                     << fmt(r.bounds.thm14_bound) << ','
                     << (r.bounds.thm15_bound ? fmt(*r.bounds.thm15_bound) : std::string()) << ','
                     << (eq.thm12_lower ? 1 : 0) << ',' << (eq.thm12_upper ? 1 : 0) << ','
                     << (eq.thm13 ? 1 : 0) << ',' << (eq.thm14 ? 1 : 0) << ','
                     << (eq.thm15 ? std::string(*eq.thm15 ? "1" : "0") : std::string()) << '\n';
            }
        }
    }
    return summary;
}

namespace {

struct WorstCase {
    double margin = std::numeric_limits<double>::infinity();
    std::string detail;

    void update(double m, const std::string& d) {
        if (m < margin) {
            margin = m;
            detail = d;
        }
    }
};

ClaimResult finish(const std::string& name, const WorstCase& w, double threshold, std::size_t cases) {
    ClaimResult r;
    r.name = name;
    r.pass = w.margin >= threshold;
    r.worst_margin = w.margin;
    r.detail = w.detail + " (" + std::to_string(cases) + " cases)";
    return r;
}

// One slot of grid work shared by the closed-form, strict-bound, and
// equitable-quotient claims: numeric radius plus quotient diagnostics.
struct FamilyProbe {
    double closed_err = 0.0;
    double strict_margin = std::numeric_limits<double>::infinity();
    double quotient_err = 0.0;
    bool equitable = true;
    std::string label;
};

FamilyProbe probe_family(const Graph& g, const VertexPartition& partition, double closed_form,
                         std::optional<double> strict_bound, const std::string& label) {
    const double pairs = static_cast<double>(pair_count(g.vertex_count()));
    const SymmetricMatrix scaled = connectivity_matrix_scaled(g, 1);
    const double rho_num = eigen_symmetric(scaled).eigenvalues.front() / pairs;

    FamilyProbe probe;
    probe.label = label;
    probe.closed_err = std::abs(closed_form - rho_num);
    if (strict_bound) probe.strict_margin = *strict_bound - closed_form;
    probe.equitable = is_equitable(scaled, partition, 1e-9);
    const QuotientMatrix q = quotient_matrix(scaled, partition);
    probe.quotient_err = std::abs(spectral_radius(q, 1e-13) / pairs - rho_num);
    return probe;
}

}  // namespace

std::vector<ClaimResult> verify_claims(double tol, unsigned threads) {
    std::vector<ClaimResult> results;

    // --- grids over the closed-form families -----------------------------
    struct FamilyJob {
        Graph graph;
        VertexPartition partition;
        double closed_form;
        std::optional<double> strict_bound;
        std::string label;
        int family;  // 0 = K_n, 1 = K_{k,n-k}, 2 = G1, 3 = G2
    };
    std::vector<FamilyJob> jobs;

    for (int n = 2; n <= 50; ++n) {
        VertexPartition whole;
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        whole.blocks.push_back(all);
        jobs.push_back({complete(n), whole, rho_complete(n), std::nullopt, "K_" + std::to_string(n), 0});
    }
    for (int n = 2; n <= 50; ++n)
        for (int k = 1; k <= n - 1; ++k)
            jobs.push_back({complete_bipartite(k, n - k).graph, complete_bipartite_partition(k, n - k),
                            rho_complete_bipartite(n, k), std::nullopt,
                            "K_{" + std::to_string(k) + "," + std::to_string(n - k) + "}", 1});
    for (int t = 2; t <= 40; ++t)
        for (int n = 3 * t + 2; n <= 40; ++n) {
            if ((n - t) % 2 != 0) continue;
            jobs.push_back({g1_family(n, t), g1_family_partition(n, t), rho_g1(n, t),
                            2.0 * (n - t) / n, "G1(n=" + std::to_string(n) + ",t=" + std::to_string(t) + ")", 2});
        }
    for (int t = 2; t <= 40; ++t)
        for (int n = t + 2; n <= std::min(3 * t, 40); ++n) {
            if ((n - t) % 2 != 0) continue;
            jobs.push_back({g2_family(n, t), g2_family_partition(n, t), rho_g2(n, t),
                            2.0 * (n - t) / n, "G2(n=" + std::to_string(n) + ",t=" + std::to_string(t) + ")", 3});
        }

    std::vector<FamilyProbe> probes(jobs.size());
    parallel_chunks(jobs.size(), threads, [&](std::size_t lo, std::size_t hi, unsigned) {
        for (std::size_t i = lo; i < hi; ++i)
            probes[i] = probe_family(jobs[i].graph, jobs[i].partition, jobs[i].closed_form,
                                     jobs[i].strict_bound, jobs[i].label);
    });

    WorstCase kn_err, kab_err, g1_err, g1_strict, g2_err, g2_strict, quot_err;
    std::size_t counts[4] = {0, 0, 0, 0};
    bool all_equitable = true;
    std::string inequitable_label;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const FamilyProbe& p = probes[i];
        ++counts[jobs[i].family];
        switch (jobs[i].family) {
            case 0: kn_err.update(1e-10 - p.closed_err, p.label); break;
            case 1: kab_err.update(tol - p.closed_err, p.label); break;
            case 2:
                g1_err.update(tol - p.closed_err, p.label);
                g1_strict.update(p.strict_margin, p.label);
                break;
            case 3:
                g2_err.update(tol - p.closed_err, p.label);
                g2_strict.update(p.strict_margin, p.label);
                break;
        }
        quot_err.update(tol - p.quotient_err, p.label);
        if (!p.equitable && all_equitable) {
            all_equitable = false;
            inequitable_label = p.label;
        }
    }

    results.push_back(finish("kn_closed_form", kn_err, 0.0, counts[0]));
    results.push_back(finish("kab_closed_form", kab_err, 0.0, counts[1]));

    // balanced K_{n/2,n/2}: closed form and the bipartite bound coincide
    WorstCase balanced;
    std::size_t balanced_cases = 0;
    for (int n = 2; n <= 50; n += 2) {
        const double diff = std::abs(rho_complete_bipartite(n, n / 2) - bound_bipartite(n, n / 2));
        balanced.update(1e-12 - diff, "n=" + std::to_string(n));
        ++balanced_cases;
    }
    results.push_back(finish("kab_balanced_identity", balanced, 0.0, balanced_cases));

    // 2k/n <= rho(K_{k,n-k}) <= (n-k)(4k-2)/(n(n-1)) for k <= n/2
    WorstCase sandwich;
    std::size_t sandwich_cases = 0;
    for (int n = 2; n <= 50; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            const double rho = rho_complete_bipartite(n, k);
            const std::string label = "n=" + std::to_string(n) + ",k=" + std::to_string(k);
            sandwich.update(rho - 2.0 * k / n, label + " (lower)");
            sandwich.update(bound_bipartite(n, k) - rho, label + " (upper)");
            ++sandwich_cases;
        }
    results.push_back(finish("kab_sandwich", sandwich, -1e-12, sandwich_cases));

    results.push_back(finish("g1_closed_form", g1_err, 0.0, counts[2]));
    results.push_back(finish("g1_strict_bound", g1_strict, 0.0, counts[2]));
    results.push_back(finish("g2_closed_form", g2_err, 0.0, counts[3]));
    results.push_back(finish("g2_strict_bound", g2_strict, 0.0, counts[3]));

    // --- vertex-move monotonicity grids ----------------------------------
    struct MoveJob {
        Graph before;
        Graph after;
        std::string label;
    };
    std::vector<MoveJob> moves;

    // split family: move 2 vertices from the last clique to the first;
    // every configuration with s <= 4, q <= 6, odd parts >= 3, n <= 30.
    {
        std::vector<int> parts;
        const std::function<void(int, int, int)> enumerate_parts = [&](int s, int budget, int max_part) {
            if (parts.size() >= 2) {
                std::vector<int> moved = parts;
                moved.front() += 2;
                moved.back() -= 2;  // parts are odd >= 3, so this stays >= 1
                int total = s;
                for (int p : parts) total += p;
                std::string label = "s=" + std::to_string(s) + ",parts=";
                for (std::size_t i = 0; i < parts.size(); ++i)
                    label += (i ? "+" : "") + std::to_string(parts[i]);
                moves.push_back({split_family(total, s, parts), split_family(total, s, moved), label});
            }
            if (parts.size() == 6) return;
            for (int p = 3; p <= std::min(budget, max_part); p += 2) {
                parts.push_back(p);
                enumerate_parts(s, budget - p, p);
                parts.pop_back();
            }
        };
        for (int s = 1; s <= 4; ++s) enumerate_parts(s, 30 - s, 29);
    }

    // gstar: move one vertex from S to Y-N(S); case 1 with s > n_s.
    std::size_t gstar_move_first = moves.size();
    for (int s = 2; s <= 5; ++s)
        for (int n_s = 1; n_s < s; ++n_s)
            for (int x = s + n_s; x <= s + n_s + 3; ++x)
                for (int y = x; y <= x + 3 && x + y <= 26; ++y) {
                    const std::string label = "s=" + std::to_string(s) + ",ns=" + std::to_string(n_s) +
                                              ",x=" + std::to_string(x) + ",y=" + std::to_string(y);
                    moves.push_back({gstar_family(s, n_s, x, y).graph,
                                     gstar_family(s - 1, n_s, x - 1, y + 1).graph, label});
                }

    std::vector<double> move_margin(moves.size());
    parallel_chunks(moves.size(), threads, [&](std::size_t lo, std::size_t hi, unsigned) {
        for (std::size_t i = lo; i < hi; ++i)
            move_margin[i] = numeric_rho(moves[i].after) - numeric_rho(moves[i].before);
    });

    WorstCase split_move, gstar_move;
    for (std::size_t i = 0; i < moves.size(); ++i)
        (i < gstar_move_first ? split_move : gstar_move).update(move_margin[i], moves[i].label);
    results.push_back(finish("split_move_monotonicity", split_move, -1e-12, gstar_move_first));
    results.push_back(finish("gstar_move_monotonicity", gstar_move, -1e-12, moves.size() - gstar_move_first));

    // --- case-2 quotient row sums vs 2k/n ---------------------------------
    WorstCase rowsum;
    std::size_t rowsum_cases = 0;
    for (int s = 2; s <= 6; ++s)
        for (int n_s = 2; n_s <= 6; ++n_s)
            for (int x = s + 1; x - s < n_s; ++x)
                for (int y = std::max({x, n_s + 1, s + 1}); y <= x + 4; ++y) {
                    const int n = x + y;
                    const int k = x - s + n_s;
                    const QuotientMatrix q = quotient_gstar(s, n_s, x, y, 2);
                    const double limit = 2.0 * k / n;
                    const std::string label = "s=" + std::to_string(s) + ",ns=" + std::to_string(n_s) +
                                              ",x=" + std::to_string(x) + ",y=" + std::to_string(y);
                    rowsum.update(limit - q.max_row_sum(), label);
                    ++rowsum_cases;
                }
    results.push_back(finish("gstar_case2_row_sums", rowsum, -1e-12, rowsum_cases));

    // --- equitable partitions share the radius ----------------------------
    ClaimResult quotient_claim = finish("equitable_quotient_radius", quot_err, 0.0, jobs.size());
    if (!all_equitable) {
        quotient_claim.pass = false;
        quotient_claim.detail = "partition not equitable at " + inequitable_label;
    }
    results.push_back(quotient_claim);

    return results;
}

std::string to_json(const AnalysisReport& r) {
    std::string out = "{";
    out += "\"n\":" + std::to_string(r.n);
    out += ",\"m\":" + std::to_string(r.m);
    out += ",\"bipartite\":" + std::string(r.bipartite ? "true" : "false");
    out += ",\"alpha_prime\":" + std::to_string(r.alpha_prime);
    out += ",\"deficiency\":" + std::to_string(r.deficiency);
    out += ",\"kappa_bar\":" + fmt(r.kappa_bar);
    out += ",\"rho\":" + fmt(r.rho);
    out += ",\"transmission_max\":" + fmt(r.transmission_max);
    out += ",\"bounds\":{";
    out += "\"thm12_lower\":" + fmt(r.bounds.thm12_lower);
    out += ",\"thm12_upper\":" + fmt(r.bounds.thm12_upper);
    out += ",\"thm13_bound\":" + fmt(r.bounds.thm13_bound);
    out += ",\"thm14_bound\":" + fmt(r.bounds.thm14_bound);
    out += ",\"thm15_bound\":" + (r.bounds.thm15_bound ? fmt(*r.bounds.thm15_bound) : "null");
    out += ",\"rho\":" + fmt(r.bounds.rho);
    out += "},\"equality_flags\":{";
    const EqualityFlags& eq = r.equality_flags;
    out += "\"thm12_lower\":" + std::string(eq.thm12_lower ? "true" : "false");
    out += ",\"thm12_upper\":" + std::string(eq.thm12_upper ? "true" : "false");
    out += ",\"thm13\":" + std::string(eq.thm13 ? "true" : "false");
    out += ",\"thm14\":" + std::string(eq.thm14 ? "true" : "false");
    out += ",\"thm15\":" + (eq.thm15 ? std::string(*eq.thm15 ? "true" : "false") : "null");
    out += "}}";
    return out;
}

std::string to_json(const SweepSummary& s) {
    std::string out = "{";
    out += "\"n\":" + std::to_string(s.n);
    out += ",\"bipartite_only\":" + std::string(s.bipartite_only ? "true" : "false");
    out += ",\"graphs_checked\":" + std::to_string(s.graphs_checked);
    out += ",\"violations\":[";
    for (std::size_t i = 0; i < s.violations.size(); ++i) {
        if (i) out += ",";
        out += "{\"graph6\":";
        append_json_string(out, s.violations[i].graph6);
        out += ",\"bound\":";
        append_json_string(out, s.violations[i].bound);
        out += ",\"margin\":" + fmt(s.violations[i].margin) + "}";
    }
    out += "],\"equality_cases\":{";
    const auto emit_list = [&](const char* name, const std::vector<std::string>& list, bool first) {
        if (!first) out += ",";
        out += "\"" + std::string(name) + "\":[";
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (i) out += ",";
            append_json_string(out, list[i]);
        }
        out += "]";
    };
    emit_list("thm12_lower", s.equality_cases.thm12_lower, true);
    emit_list("thm12_upper", s.equality_cases.thm12_upper, false);
    emit_list("thm13", s.equality_cases.thm13, false);
    emit_list("thm14", s.equality_cases.thm14, false);
    emit_list("thm15", s.equality_cases.thm15, false);
    out += "},\"max_rho_by_alpha\":{";
    bool first = true;
    for (const auto& [alpha, best] : s.max_rho_by_alpha) {
        if (!first) out += ",";
        first = false;
        out += "\"" + std::to_string(alpha) + "\":{\"graph6\":";
        append_json_string(out, best.graph6);
        out += ",\"rho\":" + fmt(best.rho) + "}";
    }
    out += "}}";
    return out;
}

std::string to_json(const std::vector<ClaimResult>& results) {
    std::string out = "[";
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (i) out += ",";
        out += "{\"name\":";
        append_json_string(out, results[i].name);
        out += ",\"pass\":" + std::string(results[i].pass ? "true" : "false");
        out += ",\"worst_margin\":" + fmt(results[i].worst_margin);
        out += ",\"detail\":";
        append_json_string(out, results[i].detail);
        out += "}";
    }
    out += "]";
    return out;
}

}  // namespace avgconn
