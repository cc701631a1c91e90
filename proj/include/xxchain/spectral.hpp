#pragma once

#include "xxchain/chain.hpp"

#include <Eigen/Dense>

#include <vector>

namespace xxchain {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// Full spectral decomposition of the one-excitation Jacobi matrix.
// omegas are strictly ascending; phi(n, k) = phi_n(omega_k) with orthonormal
// columns and the gauge phi_0(omega_k) > 0 (the first component of a Jacobi
// eigenvector never vanishes).
struct SpectralData {
    Vec omegas;
    Mat phi;

    int modes() const { return static_cast<int>(omegas.size()); }
};

// Eigendecomposition of a symmetric tridiagonal matrix by implicit-shift QL,
// eigenvalues ascending with matching eigenvector columns. No gauge is
// applied. `off` couples i and i+1 and has diag.size()-1 entries.
// Throws ConvergenceFailure (with the offending index) after 50 sweeps.
void eigh_tridiagonal(const std::vector<double>& diag, const std::vector<double>& off,
                      Vec& values, Mat& vectors);

SpectralData diagonalize(const Chain& chain);

// max-norm of phi^T phi - I.
double orthonormality_residual(const SpectralData& sd);

// max over modes of || Lambda phi_k - omega_k phi_k ||_inf; test diagnostic.
double eigen_equation_residual(const Chain& chain, const SpectralData& sd);

Mat jacobi_matrix(const Chain& chain);

} // namespace xxchain
