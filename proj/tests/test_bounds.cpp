#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "avgconn/bounds.hpp"
#include "avgconn/connectivity.hpp"
#include "avgconn/families.hpp"
#include "avgconn/graph.hpp"
#include "avgconn/spectral.hpp"

using namespace avgconn;

namespace {

double numeric_rho(const Graph& g) {
    return eigen_symmetric(avg_connectivity_matrix(g)).eigenvalues.front();
}

}  // namespace

TEST_CASE("scalar bound functions") {
    CHECK(bound_main(5, 2) == doctest::Approx(1.6).epsilon(1e-15));
    CHECK(bound_main(4, 2) == 2.0);
    CHECK_THROWS_AS(bound_main(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(bound_main(5, 0), std::invalid_argument);

    CHECK(bound_bipartite(6, 3) == 1.0);
    CHECK(bound_bipartite(5, 2) == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(bound_bipartite(4, 2) == 1.0);

    CHECK(bound_ko(2) == 4.0);
    CHECK_THROWS_AS(bound_ko(0), std::invalid_argument);
}

TEST_CASE("bound equality spot cases") {
    // K_5: rho = 8/5 meets 4 alpha'/n
    CHECK(numeric_rho(complete(5)) == doctest::Approx(bound_main(5, 2)).epsilon(1e-12));
    // K_4: strictly below
    CHECK(numeric_rho(complete(4)) < bound_main(4, 2));
    // K_{3,3} meets the bipartite bound, K_{2,3} stays below
    CHECK(numeric_rho(complete_bipartite(3, 3).graph) == doctest::Approx(bound_bipartite(6, 3)).epsilon(1e-12));
    CHECK(numeric_rho(complete_bipartite(2, 3).graph) < bound_bipartite(5, 2));
    // kappa_bar = 2 alpha' exactly at odd complete graphs
    CHECK(average_connectivity(complete(5)) == bound_ko(2));
    CHECK(average_connectivity(complete(4)) < bound_ko(2));
}

TEST_CASE("rho_complete") {
    CHECK(rho_complete(4) == 1.5);
    CHECK(rho_complete(2) == 1.0);
    for (int n = 2; n <= 12; ++n)
        CHECK(std::abs(rho_complete(n) - numeric_rho(complete(n))) < 1e-12);
}

TEST_CASE("rho_complete_bipartite") {
    CHECK(rho_complete_bipartite(5, 2) == doctest::Approx((std::sqrt(97.0) + 7.0) / 20.0).epsilon(1e-15));
    CHECK(rho_complete_bipartite(6, 3) == 1.0);
    // the WLOG normalization: K_{k,n-k} and K_{n-k,k} are the same graph
    CHECK(rho_complete_bipartite(6, 4) == rho_complete_bipartite(6, 2));
    CHECK(std::abs(rho_complete_bipartite(6, 4) - numeric_rho(complete_bipartite(4, 2).graph)) < 1e-12);
    CHECK_THROWS_AS(rho_complete_bipartite(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(rho_complete_bipartite(5, 5), std::invalid_argument);

    for (int n = 2; n <= 14; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(std::abs(rho_complete_bipartite(n, k) - numeric_rho(complete_bipartite(k, n - k).graph)) <
                  1e-11);

    // balanced case coincides with the bipartite bound exactly
    for (int n = 2; n <= 50; n += 2)
        CHECK(rho_complete_bipartite(n, n / 2) == bound_bipartite(n, n / 2));
}

TEST_CASE("rho_g1 / rho_g2 closed forms") {
    // outside the claim range the formula still evaluates and matches
    CHECK(rho_g1(7, 3) == doctest::Approx((5.5 + std::sqrt(97.0) / 2.0) / 21.0).epsilon(1e-15));
    CHECK(std::abs(rho_g1(7, 3) - numeric_rho(g1_family(7, 3))) < 1e-12);
    CHECK(!rho_g1_in_claim_range(7, 3));
    CHECK(rho_g1_in_claim_range(11, 3));

    // n = 8 > 3t = 6: outside the claim range, but the formula still
    // evaluates and matches the quotient closed form
    CHECK(rho_g2(8, 2) == doctest::Approx((13.0 + std::sqrt(8704.0) / 8.0) / 28.0).epsilon(1e-15));
    CHECK(rho_g2(8, 2) == doctest::Approx((26.0 + std::sqrt(544.0)) / 56.0).epsilon(1e-15));
    CHECK(!rho_g2_in_claim_range(8, 2));
    CHECK(rho_g2_in_claim_range(8, 4));
    CHECK(!rho_g2_in_claim_range(14, 2));

    for (int t = 2; t <= 5; ++t)
        for (int n = t + 2; n <= 20; ++n) {
            if ((n - t) % 2 != 0) continue;
            CHECK(std::abs(rho_g1(n, t) - numeric_rho(g1_family(n, t))) < 1e-11);
            CHECK(std::abs(rho_g2(n, t) - numeric_rho(g2_family(n, t))) < 1e-11);
        }

    CHECK_THROWS_AS(rho_g1(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(rho_g2(7, 2), std::invalid_argument);
}

TEST_CASE("closed quotient matrices match the generated graphs") {
    // Q1(7,3) * 21 is the printed integer matrix
    const QuotientMatrix q1 = quotient_q1(7, 3);
    const double expected_q1[3][3] = {{0, 9, 3}, {3, 6, 3}, {1, 3, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(q1.at(i, j) * 21 == doctest::Approx(expected_q1[i][j]).epsilon(1e-12));

    // Q2(8,2) * 28 = [[14,15],[9,12]]
    const QuotientMatrix q2 = quotient_q2(8, 2);
    CHECK(q2.at(0, 0) * 28 == doctest::Approx(14).epsilon(1e-12));
    CHECK(q2.at(0, 1) * 28 == doctest::Approx(15).epsilon(1e-12));
    CHECK(q2.at(1, 0) * 28 == doctest::Approx(9).epsilon(1e-12));
    CHECK(q2.at(1, 1) * 28 == doctest::Approx(12).epsilon(1e-12));

    // formula matrices equal block-averaged matrices of the real graphs
    const auto check_against_graph = [](const QuotientMatrix& formula, const Graph& g) {
        const QuotientMatrix direct = quotient_matrix(avg_connectivity_matrix(g), formula.partition);
        REQUIRE(direct.order == formula.order);
        for (int i = 0; i < formula.order; ++i)
            for (int j = 0; j < formula.order; ++j)
                CHECK(formula.at(i, j) == doctest::Approx(direct.at(i, j)).epsilon(1e-12));
    };

    check_against_graph(quotient_q1(9, 4), g1_family(9, 4));
    check_against_graph(quotient_q2(10, 4), g2_family(10, 4));
    check_against_graph(quotient_bipartite(5, 2), complete_bipartite(2, 3).graph);
    check_against_graph(quotient_bipartite(9, 4), complete_bipartite(4, 5).graph);
    for (const auto& [s, t] : {std::pair{2, 2}, {3, 2}, {2, 3}})
        check_against_graph(quotient_q0(12, s, t),
                            split_family(12, s, [&] {
                                std::vector<int> parts{12 - 2 * s - t + 1};
                                parts.insert(parts.end(), t + s - 1, 1);
                                return parts;
                            }()));

    check_against_graph(quotient_gstar(2, 1, 3, 4, 1), gstar_family(2, 1, 3, 4).graph);
    check_against_graph(quotient_gstar(3, 2, 6, 7, 1), gstar_family(3, 2, 6, 7).graph);
    check_against_graph(quotient_gstar(3, 3, 5, 6, 2), gstar_family(3, 3, 5, 6).graph);
    check_against_graph(quotient_gstar_moved(2, 1, 4, 4), gstar_family(1, 1, 3, 5).graph);
    check_against_graph(quotient_gstar_moved(3, 2, 6, 7), gstar_family(2, 2, 5, 8).graph);
}

TEST_CASE("bipartite quotient matches the hand value for K_{2,3}") {
    const QuotientMatrix q = quotient_bipartite(5, 2);
    CHECK(q.at(0, 0) * 10 == doctest::Approx(3).epsilon(1e-12));
    CHECK(q.at(0, 1) * 10 == doctest::Approx(6).epsilon(1e-12));
    CHECK(q.at(1, 0) * 10 == doctest::Approx(4).epsilon(1e-12));
    CHECK(q.at(1, 1) * 10 == doctest::Approx(4).epsilon(1e-12));
    CHECK_THROWS_AS(quotient_bipartite(5, 3), std::invalid_argument);
}

TEST_CASE("gstar quotient difference matrix") {
    // Q2tilde - Q1tilde for (2,1,3,4) is (1/21) [[-1,0,0,1] x4 rows pattern]
    const QuotientMatrix before = quotient_gstar(2, 1, 3, 4, 1);
    const QuotientMatrix after = quotient_gstar_moved(2, 1, 3, 4);
    const double n_s = 1, xs = 1;  // x - s
    const double expected[4][4] = {
        {-n_s, 0, 0, n_s},
        {-n_s, -(n_s - 1), 0, xs},
        {-n_s, 0, xs - 1, xs},
        {-n_s, 0, 0, xs},
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK((after.at(i, j) - before.at(i, j)) * 21 ==
                  doctest::Approx(expected[i][j]).epsilon(1e-12));
}

TEST_CASE("gstar quotient case validation") {
    CHECK_THROWS_AS(quotient_gstar(2, 1, 3, 4, 2), std::invalid_argument);  // n_s <= x-s is case 1
    CHECK_THROWS_AS(quotient_gstar(3, 3, 5, 6, 1), std::invalid_argument);  // n_s > x-s is case 2
    CHECK_THROWS_AS(quotient_gstar(2, 1, 2, 4, 1), std::invalid_argument);  // empty X-S
    CHECK_THROWS_AS(quotient_gstar_moved(1, 1, 3, 4), std::invalid_argument);  // s must be >= 2
}

TEST_CASE("quotient radii equal graph radii across small grids") {
    for (int t = 2; t <= 4; ++t)
        for (int n = t + 2; n <= 16; ++n) {
            if ((n - t) % 2 != 0) continue;
            CHECK(std::abs(spectral_radius(quotient_q1(n, t)) - numeric_rho(g1_family(n, t))) < 1e-9);
            CHECK(std::abs(spectral_radius(quotient_q2(n, t)) - numeric_rho(g2_family(n, t))) < 1e-9);
        }
    for (int n = 4; n <= 12; ++n)
        for (int k = 1; 2 * k <= n; ++k)
            CHECK(std::abs(spectral_radius(quotient_bipartite(n, k)) -
                           numeric_rho(complete_bipartite(k, n - k).graph)) < 1e-9);
}

TEST_CASE("monotonicity samples") {
    // split family: moving 2 vertices to the first clique never lowers rho
    const struct {
        int n, s;
        std::vector<int> before, after;
    } moves[] = {
        {14, 1, {5, 5, 3}, {7, 5, 1}},
        {16, 2, {5, 3, 3, 3}, {7, 3, 3, 1}},
        {15, 3, {3, 3, 3, 3}, {5, 3, 3, 1}},
    };
    for (const auto& m : moves) {
        CHECK(numeric_rho(split_family(m.n, m.s, m.after)) >=
              numeric_rho(split_family(m.n, m.s, m.before)) - 1e-12);
    }

    // gstar: moving one vertex from S to Y-N(S) never lowers rho
    CHECK(numeric_rho(gstar_family(1, 1, 3, 5).graph) >=
          numeric_rho(gstar_family(2, 1, 4, 4).graph) - 1e-12);
    CHECK(numeric_rho(gstar_family(2, 1, 4, 6).graph) >=
          numeric_rho(gstar_family(3, 1, 5, 5).graph) - 1e-12);
}

TEST_CASE("case-2 row sums stay below 2k/n") {
    for (const auto& [s, n_s, x, y] :
         {std::tuple{3, 3, 5, 6}, {4, 3, 6, 7}, {2, 2, 3, 5}, {5, 4, 7, 9}}) {
        const QuotientMatrix q = quotient_gstar(s, n_s, x, y, 2);
        const int n = x + y;
        const int k = x - s + n_s;
        CHECK(q.max_row_sum() <= 2.0 * k / n + 1e-12);
    }
}
