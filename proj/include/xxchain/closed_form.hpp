#pragma once

#include "xxchain/spectral.hpp"

#include <utility>
#include <variant>
#include <vector>

namespace xxchain {

// Closed-form spectra and wavefunctions for the two reference families.
// These never touch the eigensolver, so they double as independent oracles
// and as the only practical route to correlation entries at N in the
// thousands, where a full eigendecomposition is off the table.
//
// Both families are delivered in ascending eigenvalue order with the
// phi_0(omega_k) > 0 gauge. The homogeneous dispersion printed as
// omega_k = B + 2J cos(pi(k+1)/(N+2)) is descending in k; the ascending
// index used here is its reversal.

struct KrawtchoukParams {
    int N = 1;
    double p = 0.5;
};

struct HomogeneousParams {
    int N = 1;
    double J = 1.0;
    double B = 0.0;
};

using ReferenceParams = std::variant<KrawtchoukParams, HomogeneousParams>;

// omega_k = k for every p in (0,1).
double krawtchouk_energy(const KrawtchoukParams& params, int k);

double homogeneous_energy(const HomogeneousParams& params, int k);

// phi_n(omega_k) for n = 0..n_max. The Krawtchouk row starts from the
// binomial weight phi_0 (log-gamma evaluated) and runs the three-term
// recurrence in the site index with block rescaling, so entries far below
// the double range flush to zero instead of overflowing the recurrence.
Vec krawtchouk_wavefunction_row(const KrawtchoukParams& params, int k, int n_max);

// phi_n(omega_k) = sqrt(2/(N+2)) sin((n+1) theta), theta = pi(N+1-k)/(N+2);
// the sine form of sin(theta) U_n(cos theta).
Vec homogeneous_wavefunction_row(const HomogeneousParams& params, int k, int n_max);

// (omega_k, phi_n(omega_k)) for a single entry.
std::pair<double, double> closed_form_reference(const ReferenceParams& params, int n, int k);

// Rectangular block phi(site, mode) for modes 0..K at the requested sites.
Mat closed_form_mode_block(const ReferenceParams& params, int K, const std::vector<int>& sites);

// Full (N+1)x(N+1) wavefunction matrix; cross-check oracle for diagonalize.
Mat closed_form_wavefunctions(const ReferenceParams& params);

} // namespace xxchain
