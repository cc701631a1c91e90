#include "xxchain/entanglement.hpp"

#include "xxchain/errors.hpp"
#include "xxchain/numerics.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace xxchain {

namespace {

void check_region(const std::vector<int>& region, int N) {
    if (region.empty()) throw IndexOutOfRange("region must be non-empty");
    for (int s : region) {
        if (s < 0 || s > N)
            throw IndexOutOfRange("site " + std::to_string(s) + " outside [0, " +
                                  std::to_string(N) + "]");
    }
    std::vector<int> sorted = region;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw IndexOutOfRange("region contains a duplicate site");
}

double clamp_unit(double g, double eps) { return std::clamp(g, eps, 1.0 - eps); }

} // namespace

int auto_filling_index(const Vec& omegas) {
    int K = -1;
    for (int k = 0; k < omegas.size(); ++k)
        if (omegas[k] < 0.0) K = k;
    if (K < 0)
        throw IndexOutOfRange("no negative-energy mode: the Fermi sea is empty, "
                              "pass an explicit filling K");
    return K;
}

int half_filling_index(int N) { return (N + 1) / 2 - 1; }

CorrelationMatrix correlation_matrix(const SpectralData& sd, int K, std::vector<int> region) {
    const int N = sd.modes() - 1;
    if (K < 0 || K > N) throw IndexOutOfRange("filling K outside [0, N]");
    check_region(region, N);
    Mat modes(region.size(), K + 1);
    for (size_t i = 0; i < region.size(); ++i)
        for (int k = 0; k <= K; ++k) modes(i, k) = sd.phi(region[i], k);
    return correlation_from_modes(modes, std::move(region), K);
}

CorrelationMatrix correlation_from_modes(const Mat& modes, std::vector<int> region, int K) {
    if (modes.rows() != static_cast<Eigen::Index>(region.size()) || modes.cols() != K + 1)
        throw LengthMismatch("mode block shape does not match region/filling");
    CorrelationMatrix C;
    C.K = K;
    C.entries = modes * modes.transpose();
    C.entries = 0.5 * (C.entries + C.entries.transpose()).eval();
    C.region = std::move(region);
    return C;
}

double entropy_from_occupations(const Vec& gamma) {
    double s = 0.0;
    for (int i = 0; i < gamma.size(); ++i) s += binary_entropy(clamp_unit(gamma[i], 1e-15));
    return s;
}

double entanglement_entropy(const CorrelationMatrix& C) {
    Eigen::SelfAdjointEigenSolver<Mat> solver(C.entries, Eigen::EigenvaluesOnly);
    return entropy_from_occupations(solver.eigenvalues());
}

EntanglementHamiltonian entanglement_hamiltonian(const CorrelationMatrix& C) {
    Eigen::SelfAdjointEigenSolver<Mat> solver(C.entries);
    const Vec& gamma = solver.eigenvalues();
    Vec eps(gamma.size());
    EntanglementHamiltonian out;
    for (int i = 0; i < gamma.size(); ++i) {
        const double g = clamp_unit(gamma[i], 1e-12);
        if (g != gamma[i]) ++out.clamped;
        eps[i] = std::log((1.0 - g) / g);
    }
    out.h = solver.eigenvectors() * eps.asDiagonal() * solver.eigenvectors().transpose();
    out.h = 0.5 * (out.h + out.h.transpose()).eval();
    return out;
}

Mat HeunOperator::dense() const {
    const int n = size();
    Mat t = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) t(i, i) = diag[i];
    for (int i = 0; i + 1 < n; ++i) {
        t(i, i + 1) = off[i];
        t(i + 1, i) = off[i];
    }
    return t;
}

HeunOperator heun_operator(const Chain& chain, const SpectralData& sd, int K, int ell) {
    const int N = chain.N;
    if (K < 0 || K > N - 1) throw IndexOutOfRange("K must lie in [0, N-1] (omega_{K+1} needed)");
    return heun_operator(chain, K, ell, sd.omegas[K], sd.omegas[K + 1]);
}

HeunOperator heun_operator(const Chain& chain, int K, int ell, double omega_K,
                           double omega_K_plus_1) {
    if (!chain.dual)
        throw MissingDualGrid("the chain has no dual grid; the Heun operator needs one");
    const int N = chain.N;
    if (K < 0 || K > N - 1) throw IndexOutOfRange("K must lie in [0, N-1] (omega_{K+1} needed)");
    if (ell < 0 || ell > N - 1)
        throw IndexOutOfRange("ell must lie in [0, N-1] (lambda_{ell+1} needed)");

    const std::vector<double>& lambda_grid = *chain.dual;
    const double omega_half = 0.5 * (omega_K + omega_K_plus_1);
    const double lambda_half = 0.5 * (lambda_grid[ell] + lambda_grid[ell + 1]);

    // Full anticommutator {Lambda - omega_c, X - lambda_c}, then the top-left
    // (ell+1) x (ell+1) block. X is diagonal, so the block is tridiagonal.
    Mat shifted = jacobi_matrix(chain);
    for (int i = 0; i <= N; ++i) shifted(i, i) -= omega_half;
    Vec x(N + 1);
    for (int i = 0; i <= N; ++i) x[i] = lambda_grid[i] - lambda_half;
    Mat full = shifted * x.asDiagonal();
    full += x.asDiagonal() * shifted;

    HeunOperator T;
    T.omega_half = omega_half;
    T.lambda_half = lambda_half;
    T.diag.resize(ell + 1);
    T.off.resize(ell);
    for (int i = 0; i <= ell; ++i) T.diag[i] = full(i, i);
    for (int i = 0; i < ell; ++i) T.off[i] = full(i, i + 1);
    return T;
}

double heun_commutator_residual(const HeunOperator& T, const CorrelationMatrix& C) {
    if (T.size() != C.size())
        throw LengthMismatch("Heun block and correlation matrix sizes differ");
    const Mat t = T.dense();
    const Mat comm = t * C.entries - C.entries * t;
    const double scale = t.cwiseAbs().maxCoeff() * C.entries.cwiseAbs().maxCoeff();
    return scale > 0.0 ? comm.cwiseAbs().maxCoeff() / scale : 0.0;
}

StableSpectrum stable_correlation_spectrum(const CorrelationMatrix& C, const HeunOperator& T) {
    StableSpectrum out;
    out.commutator_residual = heun_commutator_residual(T, C);
    if (out.commutator_residual > 1e-8)
        throw NotCommuting("normalized commutator residual " +
                           std::to_string(out.commutator_residual) + " exceeds 1e-8");

    std::vector<double> d(T.diag.data(), T.diag.data() + T.size());
    std::vector<double> e(T.off.data(), T.off.data() + std::max(0, T.size() - 1));
    eigh_tridiagonal(d, e, out.t_values, out.vectors);

    double min_gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i + 1 < out.t_values.size(); ++i)
        min_gap = std::min(min_gap, out.t_values[i + 1] - out.t_values[i]);

    if (T.size() > 1 && min_gap < 1e-12) {
        // Degenerate T cannot separate the shared eigenbasis; fall back to
        // the direct diagonalization of C.
        Eigen::SelfAdjointEigenSolver<Mat> solver(C.entries);
        out.gamma = solver.eigenvalues();
        out.vectors = solver.eigenvectors();
        out.fallback_direct = true;
        return out;
    }

    out.gamma.resize(T.size());
    for (int n = 0; n < T.size(); ++n)
        out.gamma[n] = out.vectors.col(n).dot(C.entries * out.vectors.col(n));
    return out;
}

AffineFit fit_affine_approximation(const CorrelationMatrix& C, const HeunOperator& T) {
    const StableSpectrum stable = stable_correlation_spectrum(C, T);
    const Vec& t = stable.t_values;
    const int n = static_cast<int>(t.size());

    AffineFit fit;
    Vec eps(n);
    for (int i = 0; i < n; ++i) {
        const double g = clamp_unit(stable.gamma[i], 1e-12);
        if (g != stable.gamma[i]) ++fit.clamped;
        eps[i] = std::log((1.0 - g) / g);
    }

    const double target_number = C.entries.trace();
    const double target_entropy = entropy_from_occupations(stable.gamma);

    // residuals of the two matching conditions at (a0, a1)
    auto residuals = [&](double a0, double a1) {
        double q = 0.0, s = 0.0;
        for (int i = 0; i < n; ++i) {
            const double f = logistic(a0 + a1 * t[i]);
            q += f;
            s += binary_entropy(f);
        }
        return std::pair<double, double>{q - target_number, s - target_entropy};
    };

    auto solve_from = [&](double a0, double a1, AffineFit& best) -> bool {
        auto [g1, g2] = residuals(a0, a1);
        double norm = std::max(std::abs(g1), std::abs(g2));
        for (int iter = 0; iter < 200; ++iter) {
            if (norm < 1e-11) {
                best.alpha0 = a0;
                best.alpha1 = a1;
                best.residual_number = std::abs(g1);
                best.residual_entropy = std::abs(g2);
                best.iterations = iter;
                return true;
            }
            double j11 = 0, j12 = 0, j21 = 0, j22 = 0;
            for (int i = 0; i < n; ++i) {
                const double x = a0 + a1 * t[i];
                const double f = logistic(x);
                const double fp = -f * (1.0 - f);
                j11 += fp;
                j12 += t[i] * fp;
                j21 += x * fp;
                j22 += t[i] * x * fp;
            }
            const double det = j11 * j22 - j12 * j21;
            if (det == 0.0 || !std::isfinite(det)) return false;
            const double da0 = -(j22 * g1 - j12 * g2) / det;
            const double da1 = -(-j21 * g1 + j11 * g2) / det;
            double step = 1.0;
            bool improved = false;
            for (int half = 0; half < 60; ++half) {
                const auto [h1, h2] = residuals(a0 + step * da0, a1 + step * da1);
                const double hn = std::max(std::abs(h1), std::abs(h2));
                if (hn < norm) {
                    a0 += step * da0;
                    a1 += step * da1;
                    g1 = h1;
                    g2 = h2;
                    norm = hn;
                    improved = true;
                    break;
                }
                step *= 0.5;
            }
            if (!improved) return false;
        }
        return false;
    };

    // Initial guess: least squares of eps against t over the middle half of
    // the spectrum, where the clamping never bites.
    const int lo = n / 4;
    const int hi = std::max(lo + 2, 3 * n / 4);
    std::vector<double> tx, ty;
    for (int i = lo; i < std::min(hi, n); ++i) {
        tx.push_back(t[i]);
        ty.push_back(eps[i]);
    }
    double a1_guess = 1.0, a0_guess = 0.0;
    if (tx.size() >= 2) {
        const LinearFit ls = fit_line(tx, ty);
        a0_guess = ls.intercept;
        if (ls.slope != 0.0) a1_guess = ls.slope;
    }

    const std::pair<double, double> starts[] = {
        {a0_guess, a1_guess},       {0.0, a1_guess},      {a0_guess, 2.0 * a1_guess},
        {a0_guess, 0.5 * a1_guess}, {-a0_guess, a1_guess}, {a0_guess, -a1_guess},
        {0.0, 1.0},                 {0.0, -1.0}};

    bool solved = false;
    for (const auto& [s0, s1] : starts) {
        if (solve_from(s0, s1, fit) && fit.alpha1 != 0.0) {
            solved = true;
            break;
        }
    }
    if (!solved) {
        const auto [g1, g2] = residuals(a0_guess, a1_guess);
        throw NoConvergence("affine fit did not converge; residuals at the initial guess: " +
                            std::to_string(g1) + ", " + std::to_string(g2));
    }

    // Diagnostics cover the modes whose occupation is representable in double
    // precision; the clamped tail saturates at ln((1-eps)/eps) and would only
    // measure the clamp, not the spectrum. Pearson is taken between the
    // entanglement spectrum and the fitted affine values.
    std::vector<double> measured, fitted;
    for (int i = 0; i < n; ++i) {
        if (stable.gamma[i] <= 1e-12 || stable.gamma[i] >= 1.0 - 1e-12) continue;
        measured.push_back(eps[i]);
        fitted.push_back(fit.alpha0 + fit.alpha1 * t[i]);
    }
    if (measured.size() >= 2) {
        fit.pearson_corr = pearson(measured, fitted);
        double rms = 0.0;
        for (size_t i = 0; i < measured.size(); ++i) {
            const double r = measured[i] - fitted[i];
            rms += r * r;
        }
        fit.rms = std::sqrt(rms / measured.size());
    }
    return fit;
}

} // namespace xxchain
