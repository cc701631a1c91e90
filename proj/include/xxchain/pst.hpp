#pragma once

#include "xxchain/chain.hpp"
#include "xxchain/spectral.hpp"

#include <complex>
#include <span>
#include <vector>

namespace xxchain {

struct PstTolerances {
    double mirror_rel = 1e-10; // scaled by max(|B|, |J|)
    double gap = 1e-8;         // rounding window for gap * tau / pi
    double fidelity = 1e-9;    // verdict requires F(tau) >= 1 - fidelity
};

struct GapCheck {
    bool ok = false;
    std::vector<long long> M; // nearest integers to gap * tau / pi
};

struct PstVerdict {
    double mirror_residual = 0.0;
    GapCheck gaps;
    double tau = 0.0;
    double fidelity_at_tau = 0.0;
    double phase = 0.0; // arg of the end-to-end amplitude at tau
    bool verdict = false;
};

// End-to-end amplitude <N| e^{-i t Lambda} |0> = sum_k phi_0 phi_N e^{-i omega_k t}.
std::complex<double> transfer_amplitude(const SpectralData& sd, double t);

// |amplitude|^2; lies in [0, 1 + eps] by Cauchy-Schwarz on orthonormal rows.
double transfer_fidelity(const SpectralData& sd, double t);

// max deviation from B_{N-n} = B_n and J_{N-1-n} = J_n (0-based couplings).
double mirror_symmetry_residual(const Chain& chain);

// Every eigenvalue gap must equal (pi/tau) M_k with M_k an odd positive
// integer for perfect transfer at time tau.
GapCheck spectral_gap_check(const Vec& omegas, double tau, double tol = 1e-8);

// Inverse spectral problem: the mirror-symmetric Jacobi matrix with the given
// simple spectrum. The alternating-sign end condition fixes the spectral
// weights in barycentric form; a fully reorthogonalized Lanczos recursion on
// the weighted nodes then produces the recurrence coefficients B and J.
// The spectrum is affinely normalized to [-1, 1] internally (shift and scale
// act covariantly on B and J) and the result is verified by
// re-diagonalization.
Chain synthesize_from_spectrum(std::span<const double> omegas);

PstVerdict pst_verdict(const Chain& chain, double tau, const PstTolerances& tols = {});

// Dense fidelity scan on [0, t_end] with step dt; returns the maximum found.
double max_fidelity_scan(const SpectralData& sd, double t_end, double dt);

} // namespace xxchain
