#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "avgconn/analysis.hpp"
#include "avgconn/bounds.hpp"
#include "avgconn/connectivity.hpp"
#include "avgconn/enumerate.hpp"
#include "avgconn/families.hpp"
#include "avgconn/graph.hpp"
#include "avgconn/serialize.hpp"

using namespace avgconn;

TEST_CASE("analyze spot reports") {
    const AnalysisReport k5 = analyze(complete(5));
    CHECK(k5.rho == doctest::Approx(1.6).epsilon(1e-12));
    CHECK(k5.bounds.thm14_bound == doctest::Approx(1.6).epsilon(1e-15));
    CHECK(k5.equality_flags.thm14);
    CHECK(k5.equality_flags.thm13);
    CHECK(k5.alpha_prime == 2);
    CHECK(k5.deficiency == 1);

    const AnalysisReport kab = analyze(complete_bipartite(2, 3).graph);
    CHECK(kab.bipartite);
    CHECK(kab.rho == doctest::Approx((std::sqrt(97.0) + 7.0) / 20.0).epsilon(1e-12));
    REQUIRE(kab.bounds.thm15_bound.has_value());
    CHECK(*kab.bounds.thm15_bound == doctest::Approx(0.9).epsilon(1e-15));
    REQUIRE(kab.equality_flags.thm15.has_value());
    CHECK(!*kab.equality_flags.thm15);

    const AnalysisReport p5 = analyze(path(5));
    CHECK(p5.rho == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(p5.bounds.thm14_bound == doctest::Approx(1.6).epsilon(1e-15));
    CHECK(p5.kappa_bar == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(analyze(build_graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
    CHECK_THROWS_AS(analyze(complete(1)), std::invalid_argument);
}

TEST_CASE("analyze emits byte-identical JSON") {
    const Graph g = g1_family(7, 3);
    const std::string a = to_json(analyze(g));
    const std::string b = to_json(analyze(g, 2));
    CHECK(a == b);
    CHECK(a.find("\"n\":7") != std::string::npos);
    CHECK(a.find("\"thm15_bound\":null") != std::string::npos);
}

TEST_CASE("bound violations are empty for honest reports") {
    const AnalysisReport r = analyze(cycle(6));
    CHECK(bound_violations(r, "graph").empty());

    AnalysisReport fudged = r;
    fudged.rho = fudged.bounds.thm14_bound + 1.0;
    const auto bad = bound_violations(fudged, "graph");
    CHECK(std::any_of(bad.begin(), bad.end(), [](const auto& v) { return v.bound == "thm14"; }));
}

TEST_CASE("sweep n=4 checks all 38 graphs with zero violations") {
    const SweepSummary s = sweep_exhaustive(4, false);
    CHECK(s.graphs_checked == 38);
    CHECK(s.violations.empty());
    CHECK(s.equality_cases.thm14.empty());  // no odd complete graph on 4 vertices
    CHECK_THROWS_AS(sweep_exhaustive(8, false), std::invalid_argument);
}

TEST_CASE("sweep n=5 equality cases") {
    const SweepSummary s = sweep_exhaustive(5, false);
    CHECK(s.graphs_checked == 728);
    CHECK(s.violations.empty());
    // the single labeled K_5 is the only 4a'/n equality and kbar=2a' equality
    REQUIRE(s.equality_cases.thm14.size() == 1);
    CHECK(s.equality_cases.thm14.front() == write_graph6(complete(5)));
    REQUIRE(s.equality_cases.thm13.size() == 1);
    CHECK(s.equality_cases.thm13.front() == write_graph6(complete(5)));
}

TEST_CASE("sweep n=3 equality cases include K_3") {
    const SweepSummary s = sweep_exhaustive(3, false);
    CHECK(s.graphs_checked == 4);
    REQUIRE(s.equality_cases.thm14.size() == 1);
    CHECK(s.equality_cases.thm14.front() == write_graph6(complete(3)));
}

TEST_CASE("bipartite sweep equality cases: balanced complete bipartite plus stars") {
    // K_{2,2} has 3 labelings; the star K_{1,3} has 4 and also attains the
    // bipartite bound exactly (rho = 2/n at alpha' = 1).
    const SweepSummary s = sweep_exhaustive(4, true);
    CHECK(s.violations.empty());
    CHECK(s.equality_cases.thm15.size() == 7);

    int balanced = 0, stars = 0;
    for (const auto& g6 : s.equality_cases.thm15) {
        const Graph g = parse_graph6(g6);
        if (g.edge_count() == 4) ++balanced;          // C_4 = K_{2,2}
        if (g.edge_count() == 3) ++stars;             // trees with alpha' = 1
    }
    CHECK(balanced == 3);
    CHECK(stars == 4);
}

TEST_CASE("sweep results are independent of the thread count") {
    const SweepSummary a = sweep_exhaustive(5, false, 1);
    const SweepSummary b = sweep_exhaustive(5, false, 4);
    CHECK(a.graphs_checked == b.graphs_checked);
    CHECK(a.equality_cases.thm14 == b.equality_cases.thm14);
    CHECK(a.equality_cases.thm15 == b.equality_cases.thm15);
    CHECK(to_json(a) == to_json(b));
}

TEST_CASE("sweep CSV has one row per graph") {
    std::ostringstream csv;
    const SweepSummary s = sweep_exhaustive(4, false, 0, &csv);
    std::istringstream in(csv.str());
    std::string line;
    std::uint64_t rows = 0;
    std::getline(in, line);
    CHECK(line == sweep_csv_header());
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == s.graphs_checked);
}

TEST_CASE("per-alpha maximizers never exceed the main bound") {
    for (int n = 3; n <= 5; ++n) {
        const SweepSummary s = sweep_exhaustive(n, false);
        for (const auto& [alpha, best] : s.max_rho_by_alpha)
            CHECK(best.rho <= bound_main(n, alpha) + 1e-9);
    }
}

TEST_CASE("strict uniform connectivity implies both sandwich equalities") {
    for (int n = 2; n <= 5; ++n) {
        for_each_connected(n, [&](const Graph& g, std::uint64_t) {
            if (!uniform_connectivity_strict(g)) return;
            const AnalysisReport r = analyze(g);
            CHECK(r.equality_flags.thm12_lower);
            CHECK(r.equality_flags.thm12_upper);
        });
    }
}

TEST_CASE("sandwich bounds hold across the n=5 corpus") {
    for_each_connected(5, [&](const Graph& g, std::uint64_t) {
        const AnalysisReport r = analyze(g);
        CHECK(r.bounds.thm12_lower <= r.rho + 1e-9);
        CHECK(r.rho <= r.bounds.thm12_upper + 1e-9);
        CHECK(r.kappa_bar <= r.bounds.thm13_bound + 1e-9);
        CHECK(r.rho <= r.bounds.thm14_bound + 1e-9);
    });
}
