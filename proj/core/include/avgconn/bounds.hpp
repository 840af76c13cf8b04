#pragma once

#include "avgconn/spectral.hpp"

namespace avgconn {

/// 4*alpha/n, the general spectral-radius bound in terms of the matching
/// number. Requires n >= 2 and 1 <= alpha <= n/2.
double bound_main(int n, int alpha);

/// (n - alpha)(4*alpha - 2) / (n(n-1)), the sharper bipartite bound.
double bound_bipartite(int n, int alpha);

/// 2*alpha, the average-connectivity bound.
double bound_ko(int alpha);

/// rho of the average connectivity matrix of K_n: 2(n-1)/n.
double rho_complete(int n);

/// Closed-form rho of the average connectivity matrix of K_{k,n-k}.
/// The radical formula is derived for k <= n-k; other k are mapped through
/// the isomorphism K_{k,n-k} = K_{n-k,k}. Requires 1 <= k <= n-1.
double rho_complete_bipartite(int n, int k);

/// Closed-form rho for G1 = K_1 v (K_{n-t-1} u t*K_1) and
/// G2 = K_{(n-t)/2} v empty((n+t)/2). Well-defined whenever the family
/// graph exists (t >= 2, n >= t+2; G2 additionally n = t mod 2); the
/// *_in_claim_range predicates flag the parameter regimes in which each
/// family is extremal and its radius provably stays below 2(n-t)/n.
double rho_g1(int n, int t);
double rho_g2(int n, int t);
bool rho_g1_in_claim_range(int n, int t);  // n >= 3t + 2
bool rho_g2_in_claim_range(int n, int t);  // t + 2 <= n <= 3t, n = t mod 2

/// Quotient of K_s v (K_{n-2s-t+1} u (t+s-1)*K_1) over the partition
/// {join clique, inner clique, independent set}; 3x3, divided by C(n,2).
QuotientMatrix quotient_q0(int n, int s, int t);

/// quotient_q0 with s = 1 (family G1); 3x3.
QuotientMatrix quotient_q1(int n, int t);

/// Quotient of G2 over {clique, independent set}; 2x2.
QuotientMatrix quotient_q2(int n, int t);

/// Quotient of K_{k,n-k} over the partite sets; 2x2. Requires 2k <= n.
QuotientMatrix quotient_bipartite(int n, int k);

/// 4x4 quotient of gstar_family(s, n_s, x, y) over {S, N(S), X-S, Y-N(S)}.
/// `which_case` selects the printed matrix: 1 when n_s <= x-s, 2 when
/// n_s > x-s; passing the case inconsistent with the parameters throws.
QuotientMatrix quotient_gstar(int s, int n_s, int x, int y, int which_case);

/// Quotient of the graph obtained from gstar_family(s, n_s, x, y) by
/// moving one vertex from S to Y-N(S); case-1 parameters only, s >= 2.
QuotientMatrix quotient_gstar_moved(int s, int n_s, int x, int y);

}  // namespace avgconn
