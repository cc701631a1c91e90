#include "xxchain/pst.hpp"

#include "xxchain/errors.hpp"
#include "xxchain/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace xxchain {

std::complex<double> transfer_amplitude(const SpectralData& sd, double t) {
    const int n = sd.modes();
    std::complex<double> amp = 0.0;
    for (int k = 0; k < n; ++k) {
        const double w = sd.phi(0, k) * sd.phi(n - 1, k);
        amp += w * std::polar(1.0, -sd.omegas[k] * t);
    }
    return amp;
}

double transfer_fidelity(const SpectralData& sd, double t) {
    return std::norm(transfer_amplitude(sd, t));
}

double mirror_symmetry_residual(const Chain& chain) {
    const int N = chain.N;
    double res = 0.0;
    for (int n = 0; n <= N; ++n) res = std::max(res, std::abs(chain.B[N - n] - chain.B[n]));
    for (int n = 0; n < N; ++n) res = std::max(res, std::abs(chain.J[N - 1 - n] - chain.J[n]));
    return res;
}

GapCheck spectral_gap_check(const Vec& omegas, double tau, double tol) {
    if (!(tau > 0.0)) throw IndexOutOfRange("spectral_gap_check: tau must be > 0");
    GapCheck out;
    out.ok = true;
    for (int k = 0; k + 1 < omegas.size(); ++k) {
        const double m = (omegas[k + 1] - omegas[k]) * tau / std::numbers::pi;
        const long long rounded = std::llround(m);
        out.M.push_back(rounded);
        if (std::abs(m - rounded) > tol || rounded < 1 || rounded % 2 == 0) out.ok = false;
    }
    return out;
}

Chain synthesize_from_spectrum(std::span<const double> omegas) {
    const int n = static_cast<int>(omegas.size()); // n = N + 1 sites
    if (n < 2) throw LengthMismatch("synthesis needs at least 2 eigenvalues");
    const int N = n - 1;

    std::vector<double> sorted(omegas.begin(), omegas.end());
    std::sort(sorted.begin(), sorted.end());
    const double range = sorted.back() - sorted.front();
    for (int k = 0; k + 1 < n; ++k) {
        if (sorted[k + 1] - sorted[k] <= 1e-14 * std::max(range, 1.0))
            throw DegenerateSpectrum("repeated eigenvalue near " + std::to_string(sorted[k]));
    }

    // Affine normalization to [-1, 1]: synthesize for (omega - mu)/s, then map
    // back via J -> sJ, B -> sB + mu. Both covariances are exact for Jacobi
    // matrices.
    double mu = 0.0;
    for (double w : sorted) mu += w;
    mu /= n;
    double s = 0.0;
    for (double w : sorted) s = std::max(s, std::abs(w - mu));
    Vec x(n);
    for (int k = 0; k < n; ++k) x[k] = (sorted[k] - mu) / s;

    // chi_N(omega_k) = (-1)^(N+k) fixes the spectral weights: the (0,N)
    // resolvent cofactor gives phi_0 phi_N = prod(J) / P'_{N+1}(omega_k), so
    // phi_0(omega_k)^2 = c (-1)^(N+k) / P'_{N+1}(omega_k) with c > 0 set by
    // normalization. The derivative sign alternates on an ascending simple
    // spectrum, so every weight is positive. Log-space products avoid
    // under/overflow.
    //
    // Lanczos on diag(x) started from sqrt(weights), with full
    // reorthogonalization, generates the monic orthogonal polynomials of the
    // weighted node measure; the recurrence coefficients are B and J^2. This
    // is the Euclidean-division cascade evaluated at the spectral nodes, in
    // the one basis where it stays conditioned; monomial-basis division is
    // the unstable alternative kept as a small-N oracle in the tests. The
    // weights span ~n orders of magnitude, which eats into the recursion's
    // accuracy, so everything runs in extended precision.
    using LVec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
    using LMat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    LVec lx(n);
    for (int k = 0; k < n; ++k) lx[k] = static_cast<long double>(x[k]);

    LVec logw(n);
    long double logw_max = -std::numeric_limits<long double>::infinity();
    for (int k = 0; k < n; ++k) {
        long double acc = 0.0L;
        for (int j2 = 0; j2 < n; ++j2)
            if (j2 != k) acc += std::log(std::abs(lx[k] - lx[j2]));
        logw[k] = -acc;
        logw_max = std::max(logw_max, logw[k]);
    }
    LVec root_w(n);
    long double wsum = 0.0L;
    for (int k = 0; k < n; ++k) {
        const long double w = std::exp(logw[k] - logw_max);
        root_w[k] = w;
        wsum += w;
    }
    for (int k = 0; k < n; ++k) root_w[k] = std::sqrt(root_w[k] / wsum);

    LMat basis(n, n);
    basis.col(0) = root_w;
    std::vector<double> b(n, 0.0);
    std::vector<double> j(N, 0.0);
    for (int l = 0; l < n; ++l) {
        LVec r = lx.cwiseProduct(basis.col(l));
        const long double alpha = basis.col(l).dot(r);
        b[l] = static_cast<double>(alpha);
        r -= alpha * basis.col(l);
        if (l > 0) r -= static_cast<long double>(j[l - 1]) * basis.col(l - 1);
        for (int pass = 0; pass < 2; ++pass)
            for (int prev = 0; prev <= l; ++prev)
                r -= basis.col(prev).dot(r) * basis.col(prev);
        if (l < N) {
            const long double beta = r.norm();
            if (!(beta > 1e-16L))
                throw NegativeJSquared("recursion breakdown (J -> 0) at coupling index " +
                                       std::to_string(l));
            j[l] = static_cast<double>(beta);
            basis.col(l + 1) = r / beta;
        }
    }

    for (double& v : j) v *= s;
    for (double& v : b) v = s * v + mu;
    Chain chain = custom_chain(std::move(j), std::move(b));

    const SpectralData sd = diagonalize(chain);
    const double tol =
        1e-8 * std::max(std::abs(sorted.front()), std::abs(sorted.back()));
    for (int k = 0; k < n; ++k) {
        if (std::abs(sd.omegas[k] - sorted[k]) > tol)
            throw ConditioningFailure("round-trip spectrum error " +
                                      std::to_string(std::abs(sd.omegas[k] - sorted[k])) +
                                      " at mode " + std::to_string(k));
    }
    return chain;
}

PstVerdict pst_verdict(const Chain& chain, double tau, const PstTolerances& tols) {
    PstVerdict out;
    out.tau = tau;
    out.mirror_residual = mirror_symmetry_residual(chain);

    double scale = 0.0;
    for (double v : chain.B) scale = std::max(scale, std::abs(v));
    for (double v : chain.J) scale = std::max(scale, std::abs(v));

    const SpectralData sd = diagonalize(chain);
    out.gaps = spectral_gap_check(sd.omegas, tau, tols.gap);
    const std::complex<double> amp = transfer_amplitude(sd, tau);
    out.fidelity_at_tau = std::norm(amp);
    out.phase = std::arg(amp);
    out.verdict = out.mirror_residual <= tols.mirror_rel * scale && out.gaps.ok &&
                  out.fidelity_at_tau >= 1.0 - tols.fidelity;
    return out;
}

double max_fidelity_scan(const SpectralData& sd, double t_end, double dt) {
    double best = 0.0;
    for (double t = 0.0; t <= t_end + 0.5 * dt; t += dt)
        best = std::max(best, transfer_fidelity(sd, t));
    return best;
}

} // namespace xxchain
