#pragma once

#include "xxchain/chain.hpp"
#include "xxchain/numerics.hpp"
#include "xxchain/spectral.hpp"

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace xxchain {

// Two bosonic baths attached to the end sites. The smearing functions are
// approximated by the single constant h on the chain spectrum; the system-
// bath coupling lambda enters currents as lambda^2.
struct BathConfig {
    double T0 = 1.0;
    double TN = 1.0;
    double lambda = 1.0;
    double h = 1.0;
};

// Mode-resolved emission (d) and absorption (d_tilde) rates of the Lindblad
// dissipator; d_k > d_tilde_k >= 0 on a positive spectrum.
struct DissipatorRates {
    Vec d;
    Vec d_tilde;
};

// d_k = sum_{a in {0,N}} 2 pi phi_a(w_k)^2 h^2 (n_a(w_k) + 1) and the same
// with n_a for d_tilde, n_a the Bose-Einstein occupation at T_a. Requires
// every omega_k > 0 (shift the fields otherwise).
DissipatorRates dissipator_rates(const SpectralData& sd, const BathConfig& bath);

// Steady-state mode occupations <n_k> = d_tilde_k / (d_k + d_tilde_k).
Vec steady_state_occupations(const DissipatorRates& rates);

// Weight of one occupation configuration in the steady-state ansatz:
// prod_k (n_k d_tilde_k + (1 - n_k) d_k) / (d_k + d_tilde_k).
double steady_state_weight(const std::vector<int>& config, const DissipatorRates& rates);

// Left-bath heat current of the non-equilibrium steady state; the right
// current is its negative. Positive when T0 > TN.
double heat_current_general(const SpectralData& sd, const BathConfig& bath);

// Mirror-symmetric closed form, evaluated spectrally as
// pi h^2 lambda^2 sum_k w_k phi_0^2 sinh((bN-b0)w/2)/sinh((b0+bN)w/2).
// Mirror symmetry is checked through phi_0^2 = phi_N^2 per mode.
double heat_current_mirror(const SpectralData& sd, const BathConfig& bath,
                           double mirror_tol = 1e-10);

// kappa = h_L N / (T0 - TN) with T0 = T + dT/2, TN = T - dT/2. Enforces the
// linear-response window dT <= 0.01 T.
double conductivity(const Chain& chain, double T, double dT, double lambda, double h);

// Low-temperature asymptotic reference (comparison curves only):
// kappa ~ (pi lambda^2 h^2 N / T^2) sum_k w_k^2 phi_0(w_k)^2 e^(-w_k/T).
double conductivity_low_t_reference(const SpectralData& sd, double T, double lambda, double h);

// Shift the fields so that min omega equals floor (default +0.5), making the
// Bose-Einstein factors well defined. Returns the chain and the shift used.
std::pair<Chain, double> shifted_to_positive(const Chain& chain, double floor = 0.5);

// Least-squares slope of ln kappa against ln N.
LinearFit fit_power_law(std::span<const double> sizes, std::span<const double> kappas);

// Conductivity scaling exponent for a family of chains indexed by N. Each
// chain is shifted to a positive spectrum before coupling to the baths.
LinearFit transport_exponent(const std::function<Chain(int)>& family, double T, double dT,
                             std::span<const int> sizes, double lambda, double h);

} // namespace xxchain
