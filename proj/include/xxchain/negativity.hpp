#pragma once

#include "xxchain/entanglement.hpp"
#include "xxchain/numerics.hpp"
#include "xxchain/spectral.hpp"

#include <span>
#include <vector>

namespace xxchain {

// Two disjoint site regions inside one ground state, with the correlation
// matrix over A1 followed by A2 (the block order the covariance formula
// needs). separation is the smallest distance between the regions.
struct NegativitySetup {
    std::vector<int> A1;
    std::vector<int> A2;
    CorrelationMatrix C;
    int separation = 0;
};

NegativitySetup negativity_setup(std::vector<int> A1, std::vector<int> A2,
                                 const SpectralData& sd, int K);

// Same from a precomputed phi(site, mode) block over the concatenated sites.
NegativitySetup negativity_setup_from_modes(std::vector<int> A1, std::vector<int> A2,
                                            const Mat& modes, int K);

// Fermionic logarithmic negativity from the covariance matrix J = 2C - I:
// build J± with ±i off-diagonal blocks, J_x = (I + J+ J-)^{-1} (J+ + J-),
// then sum ln[ sqrt((1+v)/2) + sqrt((1-v)/2) ] over the eigenvalues of J_x
// plus (1/2) sum ln[ ((1+u)/2)^2 + ((1-u)/2)^2 ] over the eigenvalues of J.
// The resolvent inverse keeps |v| bounded by 1; complex eigenvalues enter in
// conjugate pairs and the assembled sum must be real to 1e-9.
double logarithmic_negativity(const NegativitySetup& setup);

// Leading-order negativity of two single sites with correlation C_mn at
// filling fraction rho: 2 |C_mn|^2 / (1 + 2 (rho - 1) rho).
double skeletal_negativity(double c_mn, double rho);

// Large-separation references for the Krawtchouk correlation decay. The
// boundary forms hold in the rho = p regime; d is the site separation.
enum class AsymptoticKind {
    bulk,      // (1/(pi d)) sin(d sqrt(1/(p(1-p))) arcsin(sqrt(rho)))
    boundary0, // C_{0,d}   ~ (2 pi^3)^(-1/4) d^(-3/4) sin(-pi d / 2)
    boundary1, // C_{1,d+1} ~ (2 pi^3)^(-1/4) d^(-5/4) sin(-pi d / 2)
};
double correlation_asymptotic(AsymptoticKind kind, double p, double rho, int d);

// Least-squares line through the (x, y) scan points; at least 4 required.
LinearFit negativity_scan_fit(std::span<const double> x, std::span<const double> y);

} // namespace xxchain
