// avgconn command line front end:
//   analyze   per-graph report from graph6 or edge-list input
//   sweep     exhaustive bound verification over all labeled connected graphs
//   extremal  build a named family graph and analyze it
//   verify    closed-form, monotonicity, and quotient claim grids
//
// Exit codes: 0 success, 1 bound/claim violation, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "avgconn/analysis.hpp"
#include "avgconn/bounds.hpp"
#include "avgconn/families.hpp"
#include "avgconn/graph.hpp"
#include "avgconn/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string strip_line(std::string line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    return line;
}

void print_human(const avgconn::AnalysisReport& r) {
    std::printf("n=%d m=%d bipartite=%s\n", r.n, r.m, r.bipartite ? "yes" : "no");
    std::printf("alpha_prime=%d deficiency=%d\n", r.alpha_prime, r.deficiency);
    std::printf("kappa_bar=%.12g rho=%.12g T(G)=%.12g\n", r.kappa_bar, r.rho, r.transmission_max);
    std::printf("bounds: 2*kbar/n=%.12g <= rho <= T(G)=%.12g%s\n", r.bounds.thm12_lower,
                r.bounds.thm12_upper, r.equality_flags.thm12_upper ? "  [tight]" : "");
    std::printf("        kappa_bar <= 2*alpha' = %.12g%s\n", r.bounds.thm13_bound,
                r.equality_flags.thm13 ? "  [tight]" : "");
    std::printf("        rho <= 4*alpha'/n = %.12g%s\n", r.bounds.thm14_bound,
                r.equality_flags.thm14 ? "  [tight]" : "");
    if (r.bounds.thm15_bound)
        std::printf("        rho <= bipartite bound = %.12g%s\n", *r.bounds.thm15_bound,
                    r.equality_flags.thm15 && *r.equality_flags.thm15 ? "  [tight]" : "");
}

// Reports per line; returns the worst exit code seen.
int run_analyze(const std::string& input, std::string format, bool json, unsigned threads) {
    std::ifstream file(input);
    if (!file) {
        std::cerr << "analyze: cannot open " << input << "\n";
        return kExitUsage;
    }
    if (format == "auto") {
        const auto dot = input.rfind('.');
        const std::string ext = dot == std::string::npos ? "" : input.substr(dot + 1);
        format = (ext == "el" || ext == "edgelist" || ext == "txt") ? "edgelist" : "graph6";
    }

    int exit_code = kExitOk;
    const auto handle = [&](const avgconn::Graph& g) {
        const auto report = avgconn::analyze(g, threads);
        if (json)
            std::cout << avgconn::to_json(report) << "\n";
        else
            print_human(report);
        const auto bad = avgconn::bound_violations(report, avgconn::write_graph6(g));
        for (const auto& v : bad)
            std::cerr << "BOUND VIOLATION " << v.bound << " margin=" << v.margin
                      << " graph6=" << v.graph6 << "\n";
        if (!bad.empty()) exit_code = kExitViolation;
    };

    if (format == "edgelist") {
        std::stringstream buffer;
        buffer << file.rdbuf();
        handle(avgconn::parse_edge_list(buffer.str()));
    } else {
        std::string line;
        bool any = false;
        while (std::getline(file, line)) {
            line = strip_line(line);
            if (line.empty()) continue;
            any = true;
            handle(avgconn::parse_graph6(line));
        }
        if (!any) {
            std::cerr << "analyze: no graphs in " << input << "\n";
            return kExitUsage;
        }
    }
    return exit_code;
}

int run_sweep(int n, bool bipartite_only, const std::string& csv_path, bool json, unsigned threads) {
    std::ofstream csv;
    std::ostream* csv_out = nullptr;
    if (!csv_path.empty()) {
        csv.open(csv_path);
        if (!csv) {
            std::cerr << "sweep: cannot open " << csv_path << " for writing\n";
            return kExitUsage;
        }
        csv_out = &csv;
    }
    const auto summary = avgconn::sweep_exhaustive(n, bipartite_only, threads, csv_out);
    if (json) {
        std::cout << avgconn::to_json(summary) << "\n";
    } else {
        std::printf("n=%d%s: %llu connected graphs checked, %zu violations\n", summary.n,
                    summary.bipartite_only ? " (bipartite only)" : "",
                    static_cast<unsigned long long>(summary.graphs_checked), summary.violations.size());
        std::printf("equality cases: 2kbar/n=%zu T(G)=%zu kbar=2a'=%zu 4a'/n=%zu bipartite=%zu\n",
                    summary.equality_cases.thm12_lower.size(), summary.equality_cases.thm12_upper.size(),
                    summary.equality_cases.thm13.size(), summary.equality_cases.thm14.size(),
                    summary.equality_cases.thm15.size());
        for (const auto& [alpha, best] : summary.max_rho_by_alpha)
            std::printf("  alpha'=%d: max rho %.12g at %s\n", alpha, best.rho, best.graph6.c_str());
    }
    for (const auto& v : summary.violations)
        std::cerr << "BOUND VIOLATION " << v.bound << " margin=" << v.margin << " graph6=" << v.graph6
                  << "\n";
    return summary.violations.empty() ? kExitOk : kExitViolation;
}

std::map<std::string, std::string> parse_params(const std::string& params) {
    std::map<std::string, std::string> out;
    std::stringstream in(params);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw CLI::ValidationError("--params", "expected key=value, got \"" + item + "\"");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

int need_int(const std::map<std::string, std::string>& kv, const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw CLI::ValidationError("--params", "missing parameter \"" + key + "\"");
    return std::stoi(it->second);
}

avgconn::Graph build_family(const std::string& family, const std::map<std::string, std::string>& kv) {
    if (family == "kn") return avgconn::complete(need_int(kv, "n"));
    if (family == "kab") return avgconn::complete_bipartite(need_int(kv, "a"), need_int(kv, "b")).graph;
    if (family == "g1") return avgconn::g1_family(need_int(kv, "n"), need_int(kv, "t"));
    if (family == "g2") return avgconn::g2_family(need_int(kv, "n"), need_int(kv, "t"));
    if (family == "split") {
        const auto it = kv.find("parts");
        if (it == kv.end()) throw CLI::ValidationError("--params", "split needs parts=a+b+...");
        std::vector<int> parts;
        std::stringstream in(it->second);
        std::string tok;
        while (std::getline(in, tok, '+')) parts.push_back(std::stoi(tok));
        return avgconn::split_family(need_int(kv, "n"), need_int(kv, "s"), parts);
    }
    if (family == "gstar")
        return avgconn::gstar_family(need_int(kv, "s"), need_int(kv, "ns"), need_int(kv, "x"),
                                     need_int(kv, "y"))
            .graph;
    throw CLI::ValidationError("--family", "unknown family \"" + family + "\"");
}

int run_extremal(const std::string& family, const std::string& params, bool json, unsigned threads) {
    const avgconn::Graph g = build_family(family, parse_params(params));
    const auto report = avgconn::analyze(g, threads);
    if (json)
        std::cout << avgconn::to_json(report) << "\n";
    else {
        std::printf("family=%s graph6=%s\n", family.c_str(), avgconn::write_graph6(g).c_str());
        print_human(report);
    }
    const auto bad = avgconn::bound_violations(report, avgconn::write_graph6(g));
    for (const auto& v : bad)
        std::cerr << "BOUND VIOLATION " << v.bound << " margin=" << v.margin << " graph6=" << v.graph6
                  << "\n";
    return bad.empty() ? kExitOk : kExitViolation;
}

int run_verify(double tol, bool json, unsigned threads) {
    const auto results = avgconn::verify_claims(tol, threads);
    if (json) {
        std::cout << avgconn::to_json(results) << "\n";
    } else {
        for (const auto& r : results)
            std::printf("%-28s %s  worst_margin=%.3e  %s\n", r.name.c_str(),
                        r.pass ? "PASS" : "FAIL", r.worst_margin, r.detail.c_str());
    }
    const bool all_pass =
        std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
    return all_pass ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"average connectivity matrix toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --threads appear after the subcommand
    unsigned threads = 0;  // 0 = hardware concurrency
    app.add_option("--threads", threads, "worker threads (0 = auto)");

    auto* analyze_cmd = app.add_subcommand("analyze", "analyze graphs from a file");
    std::string input, format = "auto";
    bool analyze_json = false;
    analyze_cmd->add_option("--input", input, "input file")->required();
    analyze_cmd->add_option("--format", format, "graph6|edgelist|auto")
        ->check(CLI::IsMember({"graph6", "edgelist", "auto"}));
    analyze_cmd->add_flag("--json", analyze_json, "emit one JSON report per graph");

    auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive sweep over labeled connected graphs");
    int sweep_n = 0;
    bool bipartite_only = false, sweep_json = false;
    std::string csv_path;
    sweep_cmd->add_option("--n", sweep_n, "vertex count, 2..7")->required();
    sweep_cmd->add_flag("--bipartite-only", bipartite_only, "restrict to bipartite graphs");
    sweep_cmd->add_option("--csv", csv_path, "write one CSV row per graph");
    sweep_cmd->add_flag("--json", sweep_json, "emit the summary as JSON");

    auto* extremal_cmd = app.add_subcommand("extremal", "analyze a named extremal family graph");
    std::string family, params;
    bool extremal_json = false;
    extremal_cmd->add_option("--family", family, "kn|kab|g1|g2|split|gstar")->required();
    extremal_cmd->add_option("--params", params,
                             "comma separated, e.g. n=8,t=2 or n=7,s=1,parts=3+1+1+1")
        ->required();
    extremal_cmd->add_flag("--json", extremal_json, "emit the report as JSON");

    auto* verify_cmd = app.add_subcommand("verify", "run every closed-form claim grid");
    double tol = 1e-9;
    bool verify_json = false;
    verify_cmd->add_option("--tol", tol, "agreement tolerance (default 1e-9)");
    verify_cmd->add_flag("--json", verify_json, "emit results as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*analyze_cmd) return run_analyze(input, format, analyze_json, threads);
        if (*sweep_cmd) return run_sweep(sweep_n, bipartite_only, csv_path, sweep_json, threads);
        if (*extremal_cmd) return run_extremal(family, params, extremal_json, threads);
        if (*verify_cmd) return run_verify(tol, verify_json, threads);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
