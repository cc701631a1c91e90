#include "xxchain/spectral.hpp"

#include "xxchain/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace xxchain {

namespace {

// Implicit-shift QL for a symmetric tridiagonal matrix, the classic tql2
// scheme with Wilkinson shifts. d holds the diagonal, e the subdiagonal
// (e[i] couples i and i+1, entry n-1 is workspace). z accumulates the
// rotations; pass the identity to get eigenvectors of the tridiagonal.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, Mat& z) {
    const int n = static_cast<int>(d.size());
    if (n == 1) return;
    e.push_back(0.0);
    constexpr double eps = std::numeric_limits<double>::epsilon();

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == 50)
                    throw ConvergenceFailure("tridiagonal QL failed at index " +
                                             std::to_string(l));
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    for (int k = 0; k < n; ++k) {
                        f = z(k, i + 1);
                        z(k, i + 1) = s * z(k, i) + c * f;
                        z(k, i) = c * z(k, i) - s * f;
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    e.pop_back();
}

void sort_ascending(Vec& values, Mat& vectors) {
    const int n = static_cast<int>(values.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return values[a] < values[b]; });
    Vec v(n);
    Mat m(n, n);
    for (int k = 0; k < n; ++k) {
        v[k] = values[order[k]];
        m.col(k) = vectors.col(order[k]);
    }
    values = std::move(v);
    vectors = std::move(m);
}

} // namespace

void eigh_tridiagonal(const std::vector<double>& diag, const std::vector<double>& off,
                      Vec& values, Mat& vectors) {
    const int n = static_cast<int>(diag.size());
    if (static_cast<int>(off.size()) != n - 1)
        throw LengthMismatch("off-diagonal must have diag.size()-1 entries");
    std::vector<double> d = diag;
    std::vector<double> e = off;
    vectors = Mat::Identity(n, n);
    ql_implicit(d, e, vectors);
    values = Eigen::Map<const Vec>(d.data(), n);
    sort_ascending(values, vectors);
}

SpectralData diagonalize(const Chain& chain) {
    SpectralData sd;
    eigh_tridiagonal(chain.B, chain.J, sd.omegas, sd.phi);

    const int n = chain.sites();
    for (int k = 0; k < n; ++k) {
        double lead = sd.phi(0, k);
        for (int i = 1; lead == 0.0 && i < n; ++i) lead = sd.phi(i, k);
        if (lead < 0.0) sd.phi.col(k) = -sd.phi.col(k);
    }
    for (int k = 0; k + 1 < n; ++k) {
        if (!(sd.omegas[k + 1] > sd.omegas[k]))
            throw ConvergenceFailure("eigenvalues not strictly ascending at index " +
                                     std::to_string(k));
    }
    return sd;
}

double orthonormality_residual(const SpectralData& sd) {
    const int n = sd.modes();
    Mat g = sd.phi.transpose() * sd.phi - Mat::Identity(n, n);
    return g.cwiseAbs().maxCoeff();
}

double eigen_equation_residual(const Chain& chain, const SpectralData& sd) {
    Mat lambda = jacobi_matrix(chain);
    Mat r = lambda * sd.phi - sd.phi * sd.omegas.asDiagonal();
    return r.cwiseAbs().maxCoeff();
}

Mat jacobi_matrix(const Chain& chain) {
    const int n = chain.sites();
    Mat lambda = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) lambda(i, i) = chain.B[i];
    for (int i = 0; i + 1 < n; ++i) {
        lambda(i, i + 1) = chain.J[i];
        lambda(i + 1, i) = chain.J[i];
    }
    return lambda;
}

} // namespace xxchain
