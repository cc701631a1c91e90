#include "doctest.h"

#include "xxchain/closed_form.hpp"
#include "xxchain/entanglement.hpp"
#include "xxchain/errors.hpp"
#include "xxchain/numerics.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

using namespace xxchain;

namespace {

std::vector<int> range_sites(int first, int last) {
    std::vector<int> sites(last - first + 1);
    std::iota(sites.begin(), sites.end(), first);
    return sites;
}

CorrelationMatrix single_site(double value) {
    CorrelationMatrix C;
    C.region = {0};
    C.K = 0;
    C.entries = Mat::Constant(1, 1, value);
    return C;
}

} // namespace

TEST_CASE("full-chain correlation matrix is the Fermi projector") {
    const SpectralData sd = diagonalize(krawtchouk_chain(12, 0.5));
    const int K = 5;
    const CorrelationMatrix C = correlation_matrix(sd, K, range_sites(0, 12));
    CHECK((C.entries * C.entries - C.entries).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(C.entries.trace() == doctest::Approx(K + 1).epsilon(1e-12));
    Eigen::SelfAdjointEigenSolver<Mat> solver(C.entries, Eigen::EigenvaluesOnly);
    for (int i = 0; i < solver.eigenvalues().size(); ++i) {
        const double g = solver.eigenvalues()[i];
        CHECK(std::min(std::abs(g), std::abs(g - 1.0)) < 1e-10);
    }
    CHECK(entanglement_entropy(C) < 1e-8);
}

TEST_CASE("half-filled odd homogeneous chain has uniform density 1/2") {
    const SpectralData sd = diagonalize(homogeneous_chain(9));
    const int K = auto_filling_index(sd.omegas);
    CHECK(K == 4);
    const CorrelationMatrix C = correlation_matrix(sd, K, range_sites(0, 9));
    for (int n = 0; n <= 9; ++n) CHECK(C.entries(n, n) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("filling index rules") {
    CHECK(half_filling_index(59) == 29);
    CHECK(half_filling_index(60) == 29);
    CHECK(half_filling_index(9) == 4);
    const SpectralData kraw = diagonalize(krawtchouk_chain(6, 0.5));
    CHECK_THROWS_AS(auto_filling_index(kraw.omegas), IndexOutOfRange); // spectrum >= 0
    const SpectralData sd = diagonalize(krawtchouk_chain(6, 0.5));
    CHECK_THROWS_AS(correlation_matrix(sd, -1, range_sites(0, 3)), IndexOutOfRange);
    CHECK_THROWS_AS(correlation_matrix(sd, 7, range_sites(0, 3)), IndexOutOfRange);
    CHECK_THROWS_AS(correlation_matrix(sd, 2, {0, 0}), IndexOutOfRange);
    CHECK_THROWS_AS(correlation_matrix(sd, 2, {5, 9}), IndexOutOfRange);
}

TEST_CASE("entropy of a maximally mixed site is ln 2") {
    CHECK(entanglement_entropy(single_site(0.5)) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("entanglement hamiltonian closed forms") {
    const EntanglementHamiltonian flat = entanglement_hamiltonian(single_site(0.5));
    CHECK(std::abs(flat.h(0, 0)) < 1e-14);
    CHECK(flat.clamped == 0);

    const double c = 1.0 / (1.0 + std::numbers::e);
    const EntanglementHamiltonian logistic_site = entanglement_hamiltonian(single_site(c));
    CHECK(logistic_site.h(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("entanglement spectrum pairs with the correlation spectrum") {
    const SpectralData sd = diagonalize(krawtchouk_chain(16, 0.5));
    const CorrelationMatrix C = correlation_matrix(sd, 7, range_sites(0, 7));
    const EntanglementHamiltonian eh = entanglement_hamiltonian(C);

    Eigen::SelfAdjointEigenSolver<Mat> hsolver(eh.h, Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<Mat> csolver(C.entries, Eigen::EigenvaluesOnly);
    const int n = C.size();
    for (int i = 0; i < n; ++i) {
        const double gamma = std::clamp(csolver.eigenvalues()[i], 1e-12, 1.0 - 1e-12);
        // h eigenvalues descend as gamma ascends
        CHECK(hsolver.eigenvalues()[n - 1 - i] ==
              doctest::Approx(std::log((1.0 - gamma) / gamma)).epsilon(1e-6).scale(1.0));
    }
}

TEST_CASE("complement regions of a pure state carry the same entropy") {
    const SpectralData sd = diagonalize(krawtchouk_chain(20, 0.5));
    const int K = half_filling_index(20);
    const double left = entanglement_entropy(correlation_matrix(sd, K, range_sites(0, 7)));
    const double right = entanglement_entropy(correlation_matrix(sd, K, range_sites(8, 20)));
    CHECK(left == doctest::Approx(right).epsilon(1e-8));
    CHECK(left >= 0.0);
    CHECK(left <= 8.0 * std::log(2.0));
}

TEST_CASE("heun operator commutes with the truncated correlation matrix") {
    const Chain chain = krawtchouk_chain(20, 0.5);
    const SpectralData sd = diagonalize(chain);
    const CorrelationMatrix C = correlation_matrix(sd, 9, range_sites(0, 9));
    const HeunOperator T = heun_operator(chain, sd, 9, 9);
    CHECK(heun_commutator_residual(T, C) < 1e-10);
}

TEST_CASE("heun entries match the anticommutator coefficients") {
    const Chain chain = krawtchouk_chain(14, 0.3);
    const SpectralData sd = diagonalize(chain);
    const int K = 6, ell = 8;
    const HeunOperator T = heun_operator(chain, sd, K, ell);
    const auto& lam = *chain.dual;
    const double wc = 0.5 * (sd.omegas[K] + sd.omegas[K + 1]);
    const double lc = 0.5 * (lam[ell] + lam[ell + 1]);
    for (int n = 0; n <= ell; ++n)
        CHECK(T.diag[n] ==
              doctest::Approx(2.0 * (chain.B[n] - wc) * (lam[n] - lc)).epsilon(1e-12));
    for (int n = 0; n < ell; ++n)
        CHECK(T.off[n] ==
              doctest::Approx(chain.J[n] * (lam[n] + lam[n + 1] - lam[ell] - lam[ell + 1]))
                  .epsilon(1e-12));
}

TEST_CASE("flipping the shift sign in the off-diagonal breaks commutation") {
    const Chain chain = krawtchouk_chain(20, 0.5);
    const SpectralData sd = diagonalize(chain);
    const int K = 9, ell = 9;
    const CorrelationMatrix C = correlation_matrix(sd, K, range_sites(0, ell));
    HeunOperator alt = heun_operator(chain, sd, K, ell);
    const auto& lam = *chain.dual;
    for (int n = 0; n < ell; ++n)
        alt.off[n] = chain.J[n] * (lam[n] + lam[n + 1] - lam[ell] + lam[ell + 1]);
    CHECK(heun_commutator_residual(alt, C) > 1e-4);
}

TEST_CASE("degenerate-shift corner stays finite and symmetric") {
    const Chain chain = krawtchouk_chain(10, 0.5);
    const SpectralData sd = diagonalize(chain);
    const HeunOperator T = heun_operator(chain, sd, 9, 9);
    const Mat t = T.dense();
    CHECK(((t - t.transpose()).cwiseAbs().maxCoeff()) == 0.0);
    CHECK(t.allFinite());
}

TEST_CASE("heun operator needs a dual grid and valid cuts") {
    const Chain chain = custom_chain({1.0, 1.0}, {0.0, 0.0, 0.0});
    const SpectralData sd = diagonalize(chain);
    CHECK_THROWS_AS(heun_operator(chain, sd, 0, 0), MissingDualGrid);
    const Chain kraw = krawtchouk_chain(6, 0.5);
    const SpectralData ksd = diagonalize(kraw);
    CHECK_THROWS_AS(heun_operator(kraw, ksd, 6, 3), IndexOutOfRange);
    CHECK_THROWS_AS(heun_operator(kraw, ksd, 3, 6), IndexOutOfRange);
}

TEST_CASE("homogeneous chain with integer dual only commutes approximately") {
    const Chain chain = homogeneous_chain(16);
    const SpectralData sd = diagonalize(chain);
    const int K = auto_filling_index(sd.omegas);
    const int ell = 7;
    const CorrelationMatrix C = correlation_matrix(sd, K, range_sites(0, ell));
    const HeunOperator T = heun_operator(chain, sd, K, ell);
    const double residual = heun_commutator_residual(T, C);
    CHECK(residual >= 0.0);
    CHECK(std::isfinite(residual));
}

TEST_CASE("stable spectrum route reproduces the direct one") {
    const Chain chain = krawtchouk_chain(60, 0.5);
    const SpectralData sd = diagonalize(chain);
    const int K = half_filling_index(60);
    for (int ell : {14, 29, 44}) {
        const CorrelationMatrix C = correlation_matrix(sd, K, range_sites(0, ell));
        const HeunOperator T = heun_operator(chain, sd, K, ell);
        const StableSpectrum stable = stable_correlation_spectrum(C, T);
        CHECK_FALSE(stable.fallback_direct);

        for (int n = 0; n < stable.gamma.size(); ++n) {
            CHECK(stable.gamma[n] >= -1e-12);
            CHECK(stable.gamma[n] <= 1.0 + 1e-12);
            const Vec v = stable.vectors.col(n);
            CHECK((C.entries * v - stable.gamma[n] * v).cwiseAbs().maxCoeff() < 1e-8);
        }
        const double stable_entropy = entropy_from_occupations(stable.gamma);
        CHECK(stable_entropy == doctest::Approx(entanglement_entropy(C)).epsilon(1e-8));
    }
}

TEST_CASE("stable route refuses a non-commuting pair") {
    const Chain chain = homogeneous_chain(16);
    const SpectralData sd = diagonalize(chain);
    const int K = auto_filling_index(sd.omegas);
    const CorrelationMatrix C = correlation_matrix(sd, K, range_sites(0, 7));
    const HeunOperator T = heun_operator(chain, sd, K, 7);
    if (heun_commutator_residual(T, C) > 1e-8)
        CHECK_THROWS_AS(stable_correlation_spectrum(C, T), NotCommuting);
}

TEST_CASE("affine fit recovers an exactly affine spectrum") {
    // Synthetic pair: a mild tridiagonal T and the correlation matrix whose
    // occupations are exactly f(2 + 3 t_n) in T's eigenbasis.
    const int n = 9;
    HeunOperator T;
    T.diag.resize(n);
    T.off = Vec::Constant(n - 1, 0.3);
    for (int i = 0; i < n; ++i) T.diag[i] = -0.8 + 1.6 * i / (n - 1.0);

    Vec t_values;
    Mat vectors;
    {
        std::vector<double> d(T.diag.data(), T.diag.data() + n);
        std::vector<double> e(T.off.data(), T.off.data() + n - 1);
        eigh_tridiagonal(d, e, t_values, vectors);
    }
    Vec gamma(n);
    for (int i = 0; i < n; ++i) gamma[i] = logistic(2.0 + 3.0 * t_values[i]);
    CorrelationMatrix C;
    C.region = range_sites(0, n - 1);
    C.K = 0;
    C.entries = vectors * gamma.asDiagonal() * vectors.transpose();

    const AffineFit fit = fit_affine_approximation(C, T);
    CHECK(fit.alpha0 == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(fit.alpha1 == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(fit.residual_number < 1e-10);
    CHECK(fit.residual_entropy < 1e-10);
    CHECK(fit.pearson_corr > 0.999999);
}

TEST_CASE("particle-hole symmetric case pins alpha0 to zero") {
    const Chain chain = krawtchouk_chain(59, 0.5);
    const SpectralData sd = diagonalize(chain);
    const int K = half_filling_index(59), ell = 29;
    const CorrelationMatrix C = correlation_matrix(sd, K, range_sites(0, ell));
    CHECK(C.entries.trace() == doctest::Approx((ell + 1) / 2.0).epsilon(1e-10));
    const HeunOperator T = heun_operator(chain, sd, K, ell);
    const AffineFit fit = fit_affine_approximation(C, T);
    CHECK(std::abs(fit.alpha0) < 1e-8);
}

TEST_CASE("affine fit on the symmetric krawtchouk chain") {
    const Chain chain = krawtchouk_chain(60, 0.5);
    const SpectralData sd = diagonalize(chain);
    const int K = half_filling_index(60), ell = 29;
    const CorrelationMatrix C = correlation_matrix(sd, K, range_sites(0, ell));
    const HeunOperator T = heun_operator(chain, sd, K, ell);
    const AffineFit fit = fit_affine_approximation(C, T);
    CHECK(fit.residual_number < 1e-9);
    CHECK(fit.residual_entropy < 1e-9);
    CHECK(fit.pearson_corr > 0.999);
    CHECK(fit.alpha1 != 0.0);
}

TEST_CASE("correlation entries from closed-form modes match the spectral route") {
    const int N = 64;
    const SpectralData sd = diagonalize(krawtchouk_chain(N, 0.5));
    const int K = half_filling_index(N);
    const std::vector<int> sites = range_sites(20, 44);
    const Mat block = closed_form_mode_block(KrawtchoukParams{N, 0.5}, K, sites);
    const CorrelationMatrix closed = correlation_from_modes(block, sites, K);
    const CorrelationMatrix direct = correlation_matrix(sd, K, sites);
    CHECK((closed.entries - direct.entries).cwiseAbs().maxCoeff() < 1e-10);
}
