#include "avgconn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace avgconn {

namespace {

constexpr int kJacobiMaxSweeps = 100;
constexpr int kPowerMaxIterations = 100000;

bool support_connected(const SymmetricMatrix& m) {
    const int n = m.order();
    if (n == 1) return true;
    std::vector<char> visited(n, 0);
    std::queue<int> q;
    q.push(0);
    visited[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w = 0; w < n; ++w) {
            if (w == v || visited[w] || m(v, w) == 0.0) continue;
            visited[w] = 1;
            ++reached;
            q.push(w);
        }
    }
    return reached == n;
}

}  // namespace

SymmetricMatrix::SymmetricMatrix(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("SymmetricMatrix: order must be >= 1");
    a_.assign(static_cast<std::size_t>(order) * order, 0.0);
}

void SymmetricMatrix::set(int i, int j, double value) {
    if (i < 0 || i >= order_ || j < 0 || j >= order_)
        throw std::invalid_argument("SymmetricMatrix: index out of range");
    a_[static_cast<std::size_t>(i) * order_ + j] = value;
    a_[static_cast<std::size_t>(j) * order_ + i] = value;
}

double SymmetricMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (double v : a_) sum += v * v;
    return std::sqrt(sum);
}

double SymmetricMatrix::row_sum(int i) const {
    double sum = 0.0;
    for (int j = 0; j < order_; ++j) sum += (*this)(i, j);
    return sum;
}

double SymmetricMatrix::max_row_sum() const {
    double best = row_sum(0);
    for (int i = 1; i < order_; ++i) best = std::max(best, row_sum(i));
    return best;
}

bool SymmetricMatrix::is_nonnegative() const {
    return std::all_of(a_.begin(), a_.end(), [](double v) { return v >= 0.0; });
}

double QuotientMatrix::row_sum(int i) const {
    double sum = 0.0;
    for (int j = 0; j < order; ++j) sum += at(i, j);
    return sum;
}

double QuotientMatrix::max_row_sum() const {
    double best = row_sum(0);
    for (int i = 1; i < order; ++i) best = std::max(best, row_sum(i));
    return best;
}

EigenResult eigen_symmetric(const SymmetricMatrix& m) {
    const int n = m.order();
    const double scale = m.frobenius_norm();

    // Working copy plus accumulated rotations.
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    std::vector<std::vector<double>> vec(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        vec[i][i] = 1.0;
        for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
    }

    if (scale > 0.0) {
        bool converged = false;
        for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
            for (int p = 0; p < n - 1; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    const double apq = a[p][q];
                    if (apq == 0.0) continue;
                    const double tau = (a[q][q] - a[p][p]) / (2.0 * apq);
                    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    a[p][p] -= t * apq;
                    a[q][q] += t * apq;
                    a[p][q] = a[q][p] = 0.0;
                    for (int i = 0; i < n; ++i) {
                        if (i != p && i != q) {
                            const double aip = a[i][p];
                            const double aiq = a[i][q];
                            a[i][p] = a[p][i] = c * aip - s * aiq;
                            a[i][q] = a[q][i] = s * aip + c * aiq;
                        }
                        const double vip = vec[i][p];
                        const double viq = vec[i][q];
                        vec[i][p] = c * vip - s * viq;
                        vec[i][q] = s * vip + c * viq;
                    }
                }
            }
            double off = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) off += 2.0 * a[i][j] * a[i][j];
            converged = std::sqrt(off) < 1e-13 * scale;
        }
        if (!converged) throw std::runtime_error("eigen_symmetric: Jacobi did not converge in 100 sweeps");
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return a[x][x] > a[y][y]; });

    EigenResult result;
    result.eigenvalues.reserve(n);
    for (int idx : order) result.eigenvalues.push_back(a[idx][idx]);
    result.spectral_radius = std::max(std::abs(result.eigenvalues.front()), std::abs(result.eigenvalues.back()));

    if (m.is_nonnegative() && support_connected(m)) {
        std::vector<double> x(n);
        double norm = 0.0;
        for (int i = 0; i < n; ++i) {
            x[i] = vec[i][order[0]];
            norm += x[i] * x[i];
        }
        norm = std::sqrt(norm);
        const int peak = static_cast<int>(std::max_element(x.begin(), x.end(), [](double l, double r) {
                                              return std::abs(l) < std::abs(r);
                                          }) -
                                          x.begin());
        const double sign = x[peak] < 0.0 ? -1.0 : 1.0;
        for (double& v : x) v = sign * v / norm;
        result.perron_vector = std::move(x);
    }
    return result;
}

double spectral_radius(const SymmetricMatrix& m, double tol) {
    if (!m.is_nonnegative()) throw std::invalid_argument("spectral_radius: matrix has negative entries");
    const int n = m.order();
    const double shift = m.max_row_sum();
    if (shift == 0.0) return 0.0;

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    double prev = 0.0;
    int stable = 0;
    for (int iter = 0; iter < kPowerMaxIterations; ++iter) {
        for (int i = 0; i < n; ++i) {
            double acc = shift * x[i];
            for (int j = 0; j < n; ++j) acc += m(i, j) * x[j];
            y[i] = acc;
        }
        double lambda = 0.0;
        double norm = 0.0;
        for (int i = 0; i < n; ++i) {
            lambda += x[i] * y[i];
            norm += y[i] * y[i];
        }
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
        if (std::abs(lambda - prev) <= tol * std::max(1.0, std::abs(lambda))) {
            if (++stable >= 2) return lambda - shift;
        } else {
            stable = 0;
        }
        prev = lambda;
    }
    throw std::runtime_error("spectral_radius: power iteration cap exceeded");
}

double spectral_radius(const QuotientMatrix& q, double tol) {
    const int n = q.order;
    for (double v : q.entries)
        if (v < 0.0) throw std::invalid_argument("spectral_radius: quotient matrix has negative entries");
    const double shift = q.max_row_sum();
    if (shift == 0.0) return 0.0;

    std::vector<double> x(n, 1.0);
    std::vector<double> y(n);
    for (int iter = 0; iter < kPowerMaxIterations; ++iter) {
        double peak = 0.0;
        for (int i = 0; i < n; ++i) {
            double acc = shift * x[i];
            for (int j = 0; j < n; ++j) acc += q.at(i, j) * x[j];
            y[i] = acc;
            peak = std::max(peak, acc);
        }
        // Collatz-Wielandt bounds: min_i y_i/x_i <= rho + shift <= max_i y_i/x_i
        double lo = y[0] / x[0];
        double hi = lo;
        for (int i = 1; i < n; ++i) {
            const double r = y[i] / x[i];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        for (int i = 0; i < n; ++i) x[i] = y[i] / peak;
        if (hi - lo <= tol * std::max(1.0, hi)) return 0.5 * (lo + hi) - shift;
    }
    throw std::runtime_error("spectral_radius: power iteration cap exceeded (quotient)");
}

double largest_real_eigenvalue_small(const QuotientMatrix& q) {
    const int n = q.order;
    if (n > 3) throw std::invalid_argument("largest_real_eigenvalue_small: order must be <= 3");
    if (n == 1) return q.at(0, 0);
    if (n == 2) {
        const double a = q.at(0, 0), b = q.at(0, 1), c = q.at(1, 0), d = q.at(1, 1);
        const double disc = (a - d) * (a - d) + 4.0 * b * c;
        if (disc < 0.0) throw std::runtime_error("largest_real_eigenvalue_small: no real eigenvalue");
        return 0.5 * (a + d + std::sqrt(disc));
    }

    // Monic characteristic polynomial p(x) = x^3 - c2 x^2 + c1 x - c0.
    const double c2 = q.at(0, 0) + q.at(1, 1) + q.at(2, 2);
    const double c1 = q.at(0, 0) * q.at(1, 1) - q.at(0, 1) * q.at(1, 0) +
                      q.at(0, 0) * q.at(2, 2) - q.at(0, 2) * q.at(2, 0) +
                      q.at(1, 1) * q.at(2, 2) - q.at(1, 2) * q.at(2, 1);
    const double c0 = q.at(0, 0) * (q.at(1, 1) * q.at(2, 2) - q.at(1, 2) * q.at(2, 1)) -
                      q.at(0, 1) * (q.at(1, 0) * q.at(2, 2) - q.at(1, 2) * q.at(2, 0)) +
                      q.at(0, 2) * (q.at(1, 0) * q.at(2, 1) - q.at(1, 1) * q.at(2, 0));
    const auto p = [&](double x) { return ((x - c2) * x + c1) * x - c0; };

    double bound = 1.0;
    for (int i = 0; i < 3; ++i) {
        double abs_row = 0.0;
        for (int j = 0; j < 3; ++j) abs_row += std::abs(q.at(i, j));
        bound = std::max(bound, abs_row + 1.0);
    }

    // Breakpoints at the critical points of p; p is monotone in between.
    std::vector<double> pts{-bound, bound};
    const double da = 3.0, db = -2.0 * c2, dc = c1;
    const double ddisc = db * db - 4.0 * da * dc;
    if (ddisc >= 0.0) {
        const double r = std::sqrt(ddisc);
        for (double root : {(-db - r) / (2.0 * da), (-db + r) / (2.0 * da)})
            if (root > -bound && root < bound) pts.push_back(root);
    }
    std::sort(pts.begin(), pts.end());

    double best = -bound;
    bool found = false;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        double lo = pts[k], hi = pts[k + 1];
        double flo = p(lo), fhi = p(hi);
        if (flo == 0.0) { best = std::max(best, lo); found = true; }
        if (fhi == 0.0) { best = std::max(best, hi); found = true; }
        if (flo * fhi >= 0.0) continue;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = p(mid);
            if ((fm < 0.0) == (flo < 0.0)) { lo = mid; flo = fm; } else { hi = mid; }
        }
        best = std::max(best, 0.5 * (lo + hi));
        found = true;
    }
    if (!found) throw std::runtime_error("largest_real_eigenvalue_small: no real root located");
    return best;
}

std::vector<double> perron_vector(const SymmetricMatrix& m) {
    if (!m.is_nonnegative()) throw std::invalid_argument("perron_vector: matrix has negative entries");
    if (!support_connected(m)) throw std::invalid_argument("perron_vector: matrix is reducible");
    const int n = m.order();
    const double shift = m.max_row_sum();
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    if (shift == 0.0) return x;  // zero matrix of order 1

    std::vector<double> y(n);
    for (int iter = 0; iter < 10 * kPowerMaxIterations; ++iter) {
        for (int i = 0; i < n; ++i) {
            double acc = shift * x[i];
            for (int j = 0; j < n; ++j) acc += m(i, j) * x[j];
            y[i] = acc;
        }
        double norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;

        // rho = Rayleigh quotient of the unshifted matrix at x
        double rho = 0.0;
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) acc += m(i, j) * x[j];
            y[i] = acc;
            rho += x[i] * acc;
        }
        double resid = 0.0;
        for (int i = 0; i < n; ++i) resid = std::max(resid, std::abs(y[i] - rho * x[i]));
        if (resid <= 1e-10) return x;
    }
    throw std::runtime_error("perron_vector: power iteration cap exceeded");
}

double rayleigh_quotient(const SymmetricMatrix& m, const std::vector<double>& x) {
    const int n = m.order();
    if (static_cast<int>(x.size()) != n) throw std::invalid_argument("rayleigh_quotient: size mismatch");
    double xx = 0.0;
    for (double v : x) xx += v * v;
    if (xx == 0.0) throw std::invalid_argument("rayleigh_quotient: zero vector");
    double xmx = 0.0;
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += m(i, j) * x[j];
        xmx += x[i] * acc;
    }
    return xmx / xx;
}

QuotientMatrix quotient_matrix(const SymmetricMatrix& m, const VertexPartition& p) {
    if (!is_valid_partition(m.order(), p))
        throw std::invalid_argument("quotient_matrix: invalid partition");
    const int q = static_cast<int>(p.blocks.size());
    QuotientMatrix out;
    out.order = q;
    out.partition = p;
    out.entries.assign(static_cast<std::size_t>(q) * q, 0.0);
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            double sum = 0.0;
            for (int u : p.blocks[i])
                for (int v : p.blocks[j]) sum += m(u, v);
            out.entries[static_cast<std::size_t>(i) * q + j] = sum / static_cast<double>(p.blocks[i].size());
        }
    }
    return out;
}

bool is_equitable(const SymmetricMatrix& m, const VertexPartition& p, double tol) {
    if (!is_valid_partition(m.order(), p))
        throw std::invalid_argument("is_equitable: invalid partition");
    for (const auto& bi : p.blocks) {
        for (const auto& bj : p.blocks) {
            double first = 0.0;
            bool have_first = false;
            for (int u : bi) {
                double sum = 0.0;
                for (int v : bj) sum += m(u, v);
                if (!have_first) {
                    first = sum;
                    have_first = true;
                } else if (std::abs(sum - first) > tol) {
                    return false;
                }
            }
        }
    }
    return true;
}

double gershgorin_bound(const SymmetricMatrix& m) {
    const int n = m.order();
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        double disc = std::abs(m(i, i));
        for (int j = 0; j < n; ++j)
            if (j != i) disc += std::abs(m(i, j));
        best = std::max(best, disc);
    }
    return best;
}

bool dominance_holds(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    if (a.order() != b.order()) throw std::invalid_argument("dominance_holds: order mismatch");
    const int n = a.order();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a(i, j) < std::abs(b(i, j))) return false;
    return true;
}

}  // namespace avgconn
