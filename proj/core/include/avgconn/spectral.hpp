#pragma once

#include <optional>
#include <vector>

#include "avgconn/graph.hpp"

namespace avgconn {

/// Dense order-n real symmetric matrix; symmetric by construction
/// (set(i,j) writes both triangles).
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(int order);

    int order() const { return order_; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * order_ + j]; }
    void set(int i, int j, double value);

    double frobenius_norm() const;
    double row_sum(int i) const;
    double max_row_sum() const;
    bool is_nonnegative() const;

private:
    int order_;
    std::vector<double> a_;
};

struct EigenResult {
    std::vector<double> eigenvalues;  // non-increasing
    double spectral_radius = 0.0;     // max |lambda_i|
    // Entrywise-positive unit eigenvector for lambda_1; present only when
    // the input is non-negative and irreducible.
    std::optional<std::vector<double>> perron_vector;
};

/// Block-averaged row sums of a symmetric matrix over a vertex partition.
/// Not symmetric in general.
struct QuotientMatrix {
    int order = 0;
    std::vector<double> entries;  // row-major
    VertexPartition partition;

    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * order + j]; }
    double row_sum(int i) const;
    double max_row_sum() const;
};

/// Full spectrum via cyclic Jacobi rotations. Converges when the
/// off-diagonal Frobenius norm drops below 1e-13 * ||M||_F; throws after
/// 100 sweeps without convergence.
EigenResult eigen_symmetric(const SymmetricMatrix& m);

/// Power iteration on M + cI with shift c = max row sum, so the target
/// eigenvalue is strictly dominant in magnitude even for bipartite-like
/// spectra. Requires entrywise non-negative input; iteration cap 1e5.
double spectral_radius(const SymmetricMatrix& m, double tol = 1e-12);

/// Perron root of a non-negative quotient matrix via the same shifted
/// power iteration, with Collatz-Wielandt ratio bounds as the stop rule.
double spectral_radius(const QuotientMatrix& q, double tol = 1e-12);

/// Largest real root of the characteristic polynomial, directly bracketed
/// and bisected. Only for order <= 3; companion cross-check for the small
/// closed-form quotients.
double largest_real_eigenvalue_small(const QuotientMatrix& q);

/// Entrywise positive unit vector x with ||Mx - rho x||_inf <= 1e-10.
/// Requires non-negative irreducible input (checked via reachability on
/// the support pattern).
std::vector<double> perron_vector(const SymmetricMatrix& m);

double rayleigh_quotient(const SymmetricMatrix& m, const std::vector<double>& x);

QuotientMatrix quotient_matrix(const SymmetricMatrix& m, const VertexPartition& p);

/// True iff within every block pair (i,j) all rows of the submatrix A_{i,j}
/// share the same sum to within tol.
bool is_equitable(const SymmetricMatrix& m, const VertexPartition& p, double tol = 1e-9);

/// max_i |m(i,i)| + sum_{j != i} |m(i,j)|; bounds every eigenvalue magnitude.
double gershgorin_bound(const SymmetricMatrix& m);

/// True iff a(i,j) >= |b(i,j)| entrywise; implies rho(a) >= rho(b) for
/// non-negative irreducible a.
bool dominance_holds(const SymmetricMatrix& a, const SymmetricMatrix& b);

}  // namespace avgconn
