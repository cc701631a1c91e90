#pragma once

#include "xxchain/chain.hpp"
#include "xxchain/spectral.hpp"

#include <vector>

namespace xxchain {

// Ground-state two-point function C_mn = sum_{k<=K} phi_m(w_k) phi_n(w_k)
// restricted to a site list. K is the highest occupied mode (Fermi sea
// modes 0..K). Over the full chain C is the rank-(K+1) projector.
struct CorrelationMatrix {
    std::vector<int> region;
    Mat entries;
    int K = 0;

    int size() const { return static_cast<int>(region.size()); }
};

// Largest K with omega_K < 0; throws if the Fermi sea would be empty.
int auto_filling_index(const Vec& omegas);

// K for filling fraction 1/2, rounding the mode count down: K+1 = (N+1)/2.
int half_filling_index(int N);

CorrelationMatrix correlation_matrix(const SpectralData& sd, int K, std::vector<int> region);

// Same, from a precomputed block phi(site, mode) over modes 0..K; used when
// the chain is too large to diagonalize and the wavefunctions come from the
// closed forms.
CorrelationMatrix correlation_from_modes(const Mat& modes, std::vector<int> region, int K);

// Von Neumann entropy in nats from the spectrum gamma of C; eigenvalues are
// clamped to [1e-15, 1 - 1e-15] before the logs.
double entanglement_entropy(const CorrelationMatrix& C);

double entropy_from_occupations(const Vec& gamma);

// h = ln((1 - C)/C) via the eigendecomposition of C, gamma clamped to
// [1e-12, 1 - 1e-12]; `clamped` counts the eigenvalues that hit the clamp.
struct EntanglementHamiltonian {
    Mat h;
    int clamped = 0;
};
EntanglementHamiltonian entanglement_hamiltonian(const CorrelationMatrix& C);

// Truncated anticommutator T = {Lambda - omega_c, X - lambda_c} restricted to
// the first ell+1 sites, omega_c and lambda_c the half-point shifts. Built
// from the matrices themselves; tridiagonal and symmetric, commutes with C
// for chains carrying a bispectral dual grid.
struct HeunOperator {
    Vec diag;
    Vec off;
    double omega_half = 0.0;
    double lambda_half = 0.0;

    int size() const { return static_cast<int>(diag.size()); }
    Mat dense() const;
};

HeunOperator heun_operator(const Chain& chain, const SpectralData& sd, int K, int ell);

// Variant for chains whose energies are known without diagonalizing (closed
// forms at large N): pass omega_K and omega_{K+1} directly.
HeunOperator heun_operator(const Chain& chain, int K, int ell, double omega_K,
                           double omega_K_plus_1);

// max |[T, C]| / (max|T| max|C|).
double heun_commutator_residual(const HeunOperator& T, const CorrelationMatrix& C);

// Spectrum of C through the well-conditioned eigenbasis of T: diagonalize T,
// then gamma_n = v_n^T C v_n, ordered by T's eigenvalues. Falls back to the
// direct diagonalization of C when T is numerically degenerate.
struct StableSpectrum {
    Vec gamma;
    Vec t_values;
    Mat vectors;
    double commutator_residual = 0.0;
    bool fallback_direct = false;
};
StableSpectrum stable_correlation_spectrum(const CorrelationMatrix& C, const HeunOperator& T);

// Solve for (alpha0, alpha1) such that the Gaussian state with hopping
// matrix alpha0 + alpha1 T matches Tr C and the entanglement entropy of C.
// With the shared eigenbasis this reduces to two scalar equations in the
// occupations f(alpha0 + alpha1 t_n), f the Fermi function.
struct AffineFit {
    double alpha0 = 0.0;
    double alpha1 = 0.0;
    double residual_number = 0.0;
    double residual_entropy = 0.0;
    double pearson_corr = 0.0;
    double rms = 0.0;
    int clamped = 0;
    int iterations = 0;
};
AffineFit fit_affine_approximation(const CorrelationMatrix& C, const HeunOperator& T);

} // namespace xxchain
