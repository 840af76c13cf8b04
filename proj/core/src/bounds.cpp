#include "avgconn/bounds.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace avgconn {

namespace {

double choose2(int n) { return 0.5 * n * (n - 1.0); }

std::vector<int> range_block(int begin, int end) {
    std::vector<int> block(end - begin);
    std::iota(block.begin(), block.end(), begin);
    return block;
}

QuotientMatrix make_quotient(std::vector<std::vector<double>> rows, VertexPartition partition, double divisor) {
    QuotientMatrix q;
    q.order = static_cast<int>(rows.size());
    q.partition = std::move(partition);
    q.entries.reserve(static_cast<std::size_t>(q.order) * q.order);
    for (const auto& row : rows)
        for (double v : row) q.entries.push_back(v / divisor);
    return q;
}

void check_alpha(int n, int alpha) {
    if (n < 2) throw std::invalid_argument("bound: need n >= 2");
    if (alpha < 1 || 2 * alpha > n) throw std::invalid_argument("bound: need 1 <= alpha <= n/2");
}

}  // namespace

double bound_main(int n, int alpha) {
    check_alpha(n, alpha);
    return 4.0 * alpha / n;
}

double bound_bipartite(int n, int alpha) {
    check_alpha(n, alpha);
    return (n - alpha) * (4.0 * alpha - 2.0) / (static_cast<double>(n) * (n - 1));
}

double bound_ko(int alpha) {
    if (alpha < 1) throw std::invalid_argument("bound_ko: need alpha >= 1");
    return 2.0 * alpha;
}

double rho_complete(int n) {
    if (n < 2) throw std::invalid_argument("rho_complete: need n >= 2");
    return 2.0 * (n - 1) / n;
}

double rho_complete_bipartite(int n, int k) {
    if (n < 2 || k < 1 || k > n - 1)
        throw std::invalid_argument("rho_complete_bipartite: need 1 <= k <= n-1");
    const double kk = std::min(k, n - k);
    const double nn = n;
    const double radicand = nn * nn + 4.0 * nn * kk * kk * kk - 4.0 * nn * kk - 4.0 * kk * kk * kk * kk + 4.0 * kk * kk;
    return (std::sqrt(radicand) + 2.0 * nn * kk - nn - 2.0 * kk * kk) / (nn * (nn - 1.0));
}

double rho_g1(int n, int t) {
    if (t < 2 || n < t + 2) throw std::invalid_argument("rho_g1: need t >= 2 and n >= t+2");
    const double N = n, T = t;
    const double radicand = N * N * N * N - 4.0 * N * N * N * T - 4.0 * N * N * N + 6.0 * N * N * T * T +
                            10.0 * N * N * T + 8.0 * N * N - 4.0 * N * T * T * T - 8.0 * N * T * T -
                            8.0 * N * T - 8.0 * N + T * T * T * T + 2.0 * T * T * T + T * T + 4.0 * T + 4.0;
    return (1.5 * T - N - N * T + 0.5 * N * N + 0.5 * T * T + 0.5 * std::sqrt(radicand)) / choose2(n);
}

double rho_g2(int n, int t) {
    if (t < 2 || n < t + 2) throw std::invalid_argument("rho_g2: need t >= 2 and n >= t+2");
    if ((n - t) % 2 != 0) throw std::invalid_argument("rho_g2: need n = t (mod 2)");
    const double N = n, T = t;
    const double radicand = 5.0 * N * N * N * N - 12.0 * N * N * N * T - 8.0 * N * N * N + 6.0 * N * N * T * T +
                            16.0 * N * N * T + 24.0 * N * N + 4.0 * N * T * T * T - 8.0 * N * T * T -
                            16.0 * N * T - 32.0 * N - 3.0 * T * T * T * T + 8.0 * T * T + 16.0;
    return (0.5 * T - N - 0.25 * N * T + 0.375 * N * N - 0.125 * T * T + 0.5 + 0.125 * std::sqrt(radicand)) /
           choose2(n);
}

bool rho_g1_in_claim_range(int n, int t) { return t >= 2 && n >= 3 * t + 2; }

bool rho_g2_in_claim_range(int n, int t) {
    return t >= 2 && n >= t + 2 && n <= 3 * t && (n - t) % 2 == 0;
}

QuotientMatrix quotient_q0(int n, int s, int t) {
    if (s < 1 || t < 2) throw std::invalid_argument("quotient_q0: need s >= 1 and t >= 2");
    const int n1 = n - 2 * s - t + 1;
    if (n1 < 1) throw std::invalid_argument("quotient_q0: need n >= 2s + t");
    const double N = n, S = s, T = t;
    VertexPartition p;
    p.blocks.push_back(range_block(0, s));
    p.blocks.push_back(range_block(s, s + n1));
    p.blocks.push_back(range_block(s + n1, n));
    return make_quotient(
        {{(N - 1) * (S - 1), (N - S - T) * (N - 2 * S - T + 1), S * (S + T - 1)},
         {(N - S - T) * S, (N - S - T) * (N - 2 * S - T), S * (S + T - 1)},
         {S * S, S * (N - 2 * S - T + 1), S * (S + T - 2)}},
        std::move(p), choose2(n));
}

QuotientMatrix quotient_q1(int n, int t) {
    if (t < 2 || n < t + 2) throw std::invalid_argument("quotient_q1: need t >= 2 and n >= t+2");
    const double N = n, T = t;
    VertexPartition p;
    p.blocks.push_back({0});
    p.blocks.push_back(range_block(1, n - t));
    p.blocks.push_back(range_block(n - t, n));
    return make_quotient(
        {{0.0, (N - T - 1) * (N - T - 1), T},
         {N - T - 1, (N - T - 1) * (N - T - 2), T},
         {1.0, N - T - 1, T - 1}},
        std::move(p), choose2(n));
}

QuotientMatrix quotient_q2(int n, int t) {
    if (t < 2 || n < t + 2) throw std::invalid_argument("quotient_q2: need t >= 2 and n >= t+2");
    if ((n - t) % 2 != 0) throw std::invalid_argument("quotient_q2: need n = t (mod 2)");
    const double N = n, T = t;
    const int a = (n - t) / 2;
    VertexPartition p;
    p.blocks.push_back(range_block(0, a));
    p.blocks.push_back(range_block(a, n));
    return make_quotient(
        {{(N - 1) * (N - T - 2) / 2.0, (N * N - T * T) / 4.0},
         {(N - T) * (N - T) / 4.0, (N - T) * (N + T - 2) / 4.0}},
        std::move(p), choose2(n));
}

QuotientMatrix quotient_bipartite(int n, int k) {
    if (k < 1 || 2 * k > n) throw std::invalid_argument("quotient_bipartite: need 1 <= k <= n/2");
    const double N = n, K = k;
    VertexPartition p;
    p.blocks.push_back(range_block(0, k));
    p.blocks.push_back(range_block(k, n));
    return make_quotient(
        {{(N - K) * (K - 1), K * (N - K)},
         {K * K, K * (N - K - 1)}},
        std::move(p), choose2(n));
}

namespace {

void check_gstar_params(int s, int n_s, int x, int y) {
    if (s < 1 || n_s < 1) throw std::invalid_argument("quotient_gstar: need s >= 1 and n_s >= 1");
    if (x - s < 1) throw std::invalid_argument("quotient_gstar: need x > s (non-empty X-S block)");
    if (y - n_s < 1) throw std::invalid_argument("quotient_gstar: need y > n_s (non-empty Y-N(S) block)");
    if (x > y) throw std::invalid_argument("quotient_gstar: need x <= y");
}

VertexPartition gstar_partition(int s, int n_s, int x, int y) {
    VertexPartition p;
    p.blocks.push_back(range_block(0, s));
    p.blocks.push_back(range_block(x, x + n_s));
    p.blocks.push_back(range_block(s, x));
    p.blocks.push_back(range_block(x + n_s, x + y));
    return p;
}

}  // namespace

QuotientMatrix quotient_gstar(int s, int n_s, int x, int y, int which_case) {
    check_gstar_params(s, n_s, x, y);
    if (which_case != 1 && which_case != 2)
        throw std::invalid_argument("quotient_gstar: case must be 1 or 2");
    if (which_case == 1 && n_s > x - s)
        throw std::invalid_argument("quotient_gstar: case 1 requires n_s <= x - s");
    if (which_case == 2 && n_s <= x - s)
        throw std::invalid_argument("quotient_gstar: case 2 requires n_s > x - s");

    const int n = x + y;
    const double S = s, NS = n_s, X = x, Y = y;
    const double m = which_case == 1 ? NS : X - S;  // min(n_s, x-s)
    return make_quotient(
        {{(S - 1) * NS, NS * NS, (X - S) * NS, (Y - NS) * m},
         {S * NS, (NS - 1) * X, (X - S) * (NS + X - S - 1), (Y - NS) * (X - S)},
         {S * NS, NS * (X - S + NS - 1), (X - S - 1) * Y, (Y - NS) * (X - S)},
         {S * m, NS * (X - S), (X - S) * (X - S), (Y - NS - 1) * (X - S)}},
        gstar_partition(s, n_s, x, y), choose2(n));
}

QuotientMatrix quotient_gstar_moved(int s, int n_s, int x, int y) {
    check_gstar_params(s, n_s, x, y);
    if (s < 2) throw std::invalid_argument("quotient_gstar_moved: need s >= 2");
    if (n_s > x - s) throw std::invalid_argument("quotient_gstar_moved: case 1 requires n_s <= x - s");

    const int n = x + y;
    const double S = s, NS = n_s, X = x, Y = y;
    // Partition follows the moved graph gstar_family(s-1, n_s, x-1, y+1).
    return make_quotient(
        {{(S - 2) * NS, NS * NS, (X - S) * NS, (Y - NS + 1) * NS},
         {(S - 1) * NS, (NS - 1) * (X - 1), (X - S) * (NS + X - S - 1), (Y - NS + 1) * (X - S)},
         {(S - 1) * NS, NS * (X - S + NS - 1), (X - S - 1) * (Y + 1), (Y - NS + 1) * (X - S)},
         {(S - 1) * NS, NS * (X - S), (X - S) * (X - S), (Y - NS) * (X - S)}},
        gstar_partition(s - 1, n_s, x - 1, y + 1), choose2(n));
}

}  // namespace avgconn
