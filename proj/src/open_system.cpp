#include "xxchain/open_system.hpp"

#include "xxchain/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace xxchain {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double bose_einstein(double beta, double omega) {
    // 1/expm1 underflows cleanly to 0 for beta*omega beyond the exp range.
    const double x = std::expm1(beta * omega);
    return std::isinf(x) ? 0.0 : 1.0 / x;
}

void require_positive_spectrum(const SpectralData& sd) {
    if (!(sd.omegas[0] > 0.0))
        throw NonPositiveSpectrum("omega_min = " + std::to_string(sd.omegas[0]) +
                                  "; shift the fields to a positive spectrum first");
}

void validate_bath(const BathConfig& bath) {
    if (!(bath.T0 > 0.0 && bath.TN > 0.0))
        throw NonPositiveSpectrum("bath temperatures must be > 0");
}

} // namespace

DissipatorRates dissipator_rates(const SpectralData& sd, const BathConfig& bath) {
    require_positive_spectrum(sd);
    validate_bath(bath);
    const int n = sd.modes();
    const double b0 = 1.0 / bath.T0;
    const double bN = 1.0 / bath.TN;
    const double h2 = bath.h * bath.h;
    DissipatorRates rates{Vec(n), Vec(n)};
    for (int k = 0; k < n; ++k) {
        const double w = sd.omegas[k];
        const double p0 = sd.phi(0, k) * sd.phi(0, k);
        const double pN = sd.phi(n - 1, k) * sd.phi(n - 1, k);
        const double n0 = bose_einstein(b0, w);
        const double nN = bose_einstein(bN, w);
        rates.d[k] = two_pi * h2 * (p0 * (n0 + 1.0) + pN * (nN + 1.0));
        rates.d_tilde[k] = two_pi * h2 * (p0 * n0 + pN * nN);
    }
    return rates;
}

Vec steady_state_occupations(const DissipatorRates& rates) {
    Vec occ(rates.d.size());
    for (int k = 0; k < rates.d.size(); ++k)
        occ[k] = rates.d_tilde[k] / (rates.d[k] + rates.d_tilde[k]);
    return occ;
}

double steady_state_weight(const std::vector<int>& config, const DissipatorRates& rates) {
    if (static_cast<int>(config.size()) != rates.d.size())
        throw LengthMismatch("configuration length must match the number of modes");
    double weight = 1.0;
    for (int k = 0; k < rates.d.size(); ++k) {
        const double num = config[k] ? rates.d_tilde[k] : rates.d[k];
        weight *= num / (rates.d[k] + rates.d_tilde[k]);
    }
    return weight;
}

double heat_current_general(const SpectralData& sd, const BathConfig& bath) {
    require_positive_spectrum(sd);
    validate_bath(bath);
    const int n = sd.modes();
    const double b0 = 1.0 / bath.T0;
    const double bN = 1.0 / bath.TN;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const double w = sd.omegas[k];
        const double p0 = sd.phi(0, k) * sd.phi(0, k);
        const double pN = sd.phi(n - 1, k) * sd.phi(n - 1, k);
        const double n0 = bose_einstein(b0, w);
        const double nN = bose_einstein(bN, w);
        const double denom = p0 * (2.0 * n0 + 1.0) + pN * (2.0 * nN + 1.0);
        sum += w * p0 * pN * (n0 - nN) / denom;
    }
    return two_pi * bath.h * bath.h * bath.lambda * bath.lambda * sum;
}

double heat_current_mirror(const SpectralData& sd, const BathConfig& bath, double mirror_tol) {
    require_positive_spectrum(sd);
    validate_bath(bath);
    const int n = sd.modes();
    double scale = 0.0, asym = 0.0;
    for (int k = 0; k < n; ++k) {
        const double p0 = sd.phi(0, k) * sd.phi(0, k);
        const double pN = sd.phi(n - 1, k) * sd.phi(n - 1, k);
        scale = std::max(scale, std::max(p0, pN));
        asym = std::max(asym, std::abs(p0 - pN));
    }
    if (asym > mirror_tol * scale)
        throw NotMirrorSymmetric("phi_0^2 != phi_N^2: residual " + std::to_string(asym));

    const double b0 = 1.0 / bath.T0;
    const double bN = 1.0 / bath.TN;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const double w = sd.omegas[k];
        const double p0 = sd.phi(0, k) * sd.phi(0, k);
        sum += w * p0 * sinh_ratio(0.5 * (bN - b0) * w, 0.5 * (b0 + bN) * w);
    }
    return std::numbers::pi * bath.h * bath.h * bath.lambda * bath.lambda * sum;
}

double conductivity(const Chain& chain, double T, double dT, double lambda, double h) {
    if (!(dT > 0.0)) throw GradientTooLarge("dT must be > 0");
    if (dT > 0.01 * T)
        throw GradientTooLarge("dT = " + std::to_string(dT) +
                               " outside the linear-response window dT <= 0.01 T");
    BathConfig bath{T + 0.5 * dT, T - 0.5 * dT, lambda, h};
    const SpectralData sd = diagonalize(chain);
    const double hl = heat_current_general(sd, bath);
    return hl * chain.N / dT;
}

double conductivity_low_t_reference(const SpectralData& sd, double T, double lambda, double h) {
    require_positive_spectrum(sd);
    const int n = sd.modes();
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const double w = sd.omegas[k];
        const double p0 = sd.phi(0, k) * sd.phi(0, k);
        sum += w * w * p0 * std::exp(-w / T);
    }
    const int N = n - 1;
    return std::numbers::pi * lambda * lambda * h * h * N * sum / (T * T);
}

std::pair<Chain, double> shifted_to_positive(const Chain& chain, double floor) {
    const SpectralData sd = diagonalize(chain);
    const double shift = floor - sd.omegas[0];
    return {shifted_fields(chain, shift), shift};
}

LinearFit fit_power_law(std::span<const double> sizes, std::span<const double> kappas) {
    if (sizes.size() < 4 || sizes.size() != kappas.size())
        throw InsufficientPoints("power-law fit needs at least 4 (N, kappa) pairs");
    std::vector<double> lx, ly;
    for (size_t i = 0; i < sizes.size(); ++i) {
        lx.push_back(std::log(sizes[i]));
        ly.push_back(std::log(kappas[i]));
    }
    return fit_line(lx, ly);
}

LinearFit transport_exponent(const std::function<Chain(int)>& family, double T, double dT,
                             std::span<const int> sizes, double lambda, double h) {
    std::vector<double> ns, ks;
    for (int N : sizes) {
        const auto [chain, shift] = shifted_to_positive(family(N));
        ns.push_back(static_cast<double>(N));
        ks.push_back(conductivity(chain, T, dT, lambda, h));
    }
    return fit_power_law(ns, ks);
}

} // namespace xxchain
