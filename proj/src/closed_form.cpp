#include "xxchain/closed_form.hpp"

#include "xxchain/errors.hpp"
#include "xxchain/numerics.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace xxchain {

namespace {

void check_index(int value, int hi, const char* what) {
    if (value < 0 || value > hi)
        throw IndexOutOfRange(std::string(what) + " = " + std::to_string(value) +
                              " outside [0, " + std::to_string(hi) + "]");
}

void check_params(const KrawtchoukParams& params) {
    if (params.N < 1) throw IndexOutOfRange("krawtchouk N must be >= 1");
    if (!(params.p > 0.0 && params.p < 1.0))
        throw IndexOutOfRange("krawtchouk p must lie in (0,1)");
}

} // namespace

double krawtchouk_energy(const KrawtchoukParams& params, int k) {
    check_params(params);
    check_index(k, params.N, "mode k");
    return static_cast<double>(k);
}

double homogeneous_energy(const HomogeneousParams& params, int k) {
    check_index(k, params.N, "mode k");
    const double theta = std::numbers::pi * (params.N + 1 - k) / (params.N + 2);
    return params.B + 2.0 * params.J * std::cos(theta);
}

Vec krawtchouk_wavefunction_row(const KrawtchoukParams& params, int k, int n_max) {
    check_params(params);
    const int N = params.N;
    const double p = params.p;
    check_index(k, N, "mode k");
    check_index(n_max, N, "site n_max");

    const double omega = static_cast<double>(k);
    const double amp = std::sqrt(p * (1.0 - p));
    auto coupling = [&](int n) { return amp * std::sqrt(double(n + 1) * (N - n)); };
    auto field = [&](int n) { return p * (N - n) + (1.0 - p) * n; };

    // The recurrence is run from both ends: forward from phi_0 and backward
    // from phi_N, each with block rescaling. A one-sided sweep rides the
    // growing companion solution once the true wavefunction starts decaying,
    // so each direction is trusted only up to the envelope peak.
    auto emit = [](Vec& out, int n, double value, double scale) {
        const double mag = std::abs(value);
        if (mag == 0.0) {
            out[n] = 0.0;
            return;
        }
        const double ex = scale + std::log(mag);
        out[n] = ex < -740.0 ? 0.0 : std::copysign(std::exp(ex), value);
    };
    auto rescale = [](double& u, double& u_prev, double& scale) {
        const double mag = std::max(std::abs(u), std::abs(u_prev));
        if (mag > 1e140 || (mag > 0.0 && mag < 1e-140)) {
            const double s = std::log(mag);
            const double f = std::exp(-s);
            u *= f;
            u_prev *= f;
            scale += s;
        }
    };

    Vec fwd(n_max + 1);
    {
        double scale =
            0.5 * (log_binomial(N, k) + k * std::log(p) + (N - k) * std::log1p(-p));
        double u_prev = 0.0, u = 1.0;
        emit(fwd, 0, u, scale);
        for (int n = 0; n < n_max; ++n) {
            const double jprev = n > 0 ? coupling(n - 1) : 0.0;
            const double u_next = ((omega - field(n)) * u - jprev * u_prev) / coupling(n);
            u_prev = u;
            u = u_next;
            rescale(u, u_prev, scale);
            emit(fwd, n + 1, u, scale);
        }
    }

    Vec bwd(n_max + 1);
    {
        double scale =
            0.5 * (log_binomial(N, k) + (N - k) * std::log(p) + k * std::log1p(-p));
        double u_next = 0.0;
        double u = ((N + k) % 2 == 0) ? 1.0 : -1.0; // sign of phi_N
        if (N <= n_max) emit(bwd, N, u, scale);
        for (int n = N; n >= 1; --n) {
            const double jnext = n < N ? coupling(n) : 0.0;
            const double u_prev = ((omega - field(n)) * u - jnext * u_next) / coupling(n - 1);
            u_next = u;
            u = u_prev;
            rescale(u, u_next, scale);
            if (n - 1 <= n_max) emit(bwd, n - 1, u, scale);
        }
    }

    // Each sweep is exact up to its envelope peak and overshoots beyond it,
    // so the smaller magnitude is always the trustworthy branch.
    Vec row(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        row[n] = std::abs(fwd[n]) <= std::abs(bwd[n]) ? fwd[n] : bwd[n];
    return row;
}

Vec homogeneous_wavefunction_row(const HomogeneousParams& params, int k, int n_max) {
    const int N = params.N;
    check_index(k, N, "mode k");
    check_index(n_max, N, "site n_max");
    const double theta = std::numbers::pi * (N + 1 - k) / (N + 2);
    const double norm = std::sqrt(2.0 / (N + 2));
    Vec row(n_max + 1);
    for (int n = 0; n <= n_max; ++n) row[n] = norm * std::sin((n + 1) * theta);
    return row;
}

std::pair<double, double> closed_form_reference(const ReferenceParams& params, int n, int k) {
    return std::visit(
        [&](const auto& pr) -> std::pair<double, double> {
            using P = std::decay_t<decltype(pr)>;
            check_index(n, pr.N, "site n");
            if constexpr (std::is_same_v<P, KrawtchoukParams>) {
                return {krawtchouk_energy(pr, k), krawtchouk_wavefunction_row(pr, k, n)[n]};
            } else {
                return {homogeneous_energy(pr, k), homogeneous_wavefunction_row(pr, k, n)[n]};
            }
        },
        params);
}

Mat closed_form_mode_block(const ReferenceParams& params, int K, const std::vector<int>& sites) {
    const int N = std::visit([](const auto& pr) { return pr.N; }, params);
    check_index(K, N, "filling K");
    int n_max = 0;
    for (int s : sites) {
        check_index(s, N, "site");
        n_max = std::max(n_max, s);
    }
    Mat block(sites.size(), K + 1);
    for (int k = 0; k <= K; ++k) {
        const Vec row = std::visit(
            [&](const auto& pr) -> Vec {
                using P = std::decay_t<decltype(pr)>;
                if constexpr (std::is_same_v<P, KrawtchoukParams>)
                    return krawtchouk_wavefunction_row(pr, k, n_max);
                else
                    return homogeneous_wavefunction_row(pr, k, n_max);
            },
            params);
        for (size_t i = 0; i < sites.size(); ++i) block(i, k) = row[sites[i]];
    }
    return block;
}

Mat closed_form_wavefunctions(const ReferenceParams& params) {
    const int N = std::visit([](const auto& pr) { return pr.N; }, params);
    std::vector<int> sites(N + 1);
    for (int i = 0; i <= N; ++i) sites[i] = i;
    return closed_form_mode_block(params, N, sites);
}

} // namespace xxchain
