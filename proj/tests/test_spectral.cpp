#include "doctest.h"

#include "xxchain/chain.hpp"
#include "xxchain/spectral.hpp"

#include <cmath>
#include <random>

using namespace xxchain;

namespace {

Chain random_chain(std::mt19937& rng, int N) {
    std::uniform_real_distribution<double> jdist(0.2, 2.0);
    std::uniform_real_distribution<double> bdist(-1.0, 1.0);
    std::vector<double> J(N), B(N + 1);
    for (double& j : J) j = jdist(rng);
    for (double& b : B) b = bdist(rng);
    return custom_chain(std::move(J), std::move(B));
}

} // namespace

TEST_CASE("krawtchouk N=3 p=1/2 has the linear spectrum") {
    const SpectralData sd = diagonalize(krawtchouk_chain(3, 0.5));
    for (int k = 0; k <= 3; ++k) CHECK(sd.omegas[k] == doctest::Approx(k).epsilon(1e-12));
}

TEST_CASE("homogeneous N=2 spectrum is the cosine band, ascending") {
    const SpectralData sd = diagonalize(homogeneous_chain(2));
    CHECK(sd.omegas[0] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
    CHECK(sd.omegas[1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(sd.omegas[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("two-site chain by hand") {
    const SpectralData sd = diagonalize(custom_chain({1.0}, {0.0, 0.0}));
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(sd.omegas[0] == doctest::Approx(-1.0));
    CHECK(sd.omegas[1] == doctest::Approx(1.0));
    CHECK(sd.phi(0, 0) == doctest::Approx(r));
    CHECK(sd.phi(1, 0) == doctest::Approx(-r));
    CHECK(sd.phi(0, 1) == doctest::Approx(r));
    CHECK(sd.phi(1, 1) == doctest::Approx(r));
}

TEST_CASE("first-row gauge is positive") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const Chain c = random_chain(rng, 12);
        const SpectralData sd = diagonalize(c);
        for (int k = 0; k < sd.modes(); ++k) CHECK(sd.phi(0, k) > 0.0);
    }
}

TEST_CASE("orthonormality residual of diagonalize output") {
    CHECK(orthonormality_residual(diagonalize(krawtchouk_chain(40, 0.3))) < 1e-12);
    CHECK(orthonormality_residual(diagonalize(homogeneous_chain(25))) < 1e-12);
}

TEST_CASE("orthonormality residual of a hand-built exact basis is ~0") {
    SpectralData sd;
    const double r = 1.0 / std::sqrt(2.0);
    sd.omegas = Vec::Zero(2);
    sd.phi = Mat(2, 2);
    sd.phi << r, r, -r, r;
    CHECK(orthonormality_residual(sd) < 1e-15);
}

TEST_CASE("orthonormality residual flags a scaled column") {
    SpectralData sd = diagonalize(krawtchouk_chain(5, 0.5));
    sd.phi.col(2) *= 2.0;
    CHECK(orthonormality_residual(sd) >= 3.0 - 1e-10);
}

TEST_CASE("eigen equation, simplicity and trace identity on random chains") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 12; ++trial) {
        const int N = 2 + static_cast<int>(rng() % 30);
        const Chain c = random_chain(rng, N);
        const SpectralData sd = diagonalize(c);

        const double scale = std::max(std::abs(sd.omegas[0]), std::abs(sd.omegas[N]));
        CHECK(eigen_equation_residual(c, sd) < 1e-10 * scale);
        CHECK(orthonormality_residual(sd) < 1e-12);

        for (int k = 0; k + 1 <= N; ++k) CHECK(sd.omegas[k + 1] - sd.omegas[k] > 0.0);

        double trace = 0.0, babs = 0.0;
        for (double b : c.B) {
            trace += b;
            babs += std::abs(b);
        }
        CHECK(std::abs(sd.omegas.sum() - trace) < 1e-10 * std::max(babs, 1.0));
    }
}

TEST_CASE("uniform field shift moves the spectrum and keeps wavefunctions") {
    std::mt19937 rng(5);
    const Chain c = random_chain(rng, 14);
    const double shift = 3.75;
    const SpectralData a = diagonalize(c);
    const SpectralData b = diagonalize(shifted_fields(c, shift));
    for (int k = 0; k < a.modes(); ++k)
        CHECK(b.omegas[k] - a.omegas[k] == doctest::Approx(shift).epsilon(1e-12));
    CHECK((a.phi - b.phi).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("coupling scale multiplies the spectrum") {
    std::mt19937 rng(6);
    const Chain c = random_chain(rng, 10);
    const SpectralData a = diagonalize(c);
    const SpectralData b = diagonalize(scaled_couplings(c, 0.5));
    for (int k = 0; k < a.modes(); ++k)
        CHECK(b.omegas[k] == doctest::Approx(0.5 * a.omegas[k]).epsilon(1e-12));
}
