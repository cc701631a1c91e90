#include "xxchain/negativity.hpp"

#include "xxchain/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace xxchain {

namespace {

void check_regions(const std::vector<int>& A1, const std::vector<int>& A2) {
    auto check_sorted = [](const std::vector<int>& a, const char* name) {
        if (a.empty()) throw IndexOutOfRange(std::string(name) + " must be non-empty");
        for (size_t i = 0; i + 1 < a.size(); ++i)
            if (a[i + 1] <= a[i])
                throw IndexOutOfRange(std::string(name) + " must be strictly increasing");
    };
    check_sorted(A1, "A1");
    check_sorted(A2, "A2");
    for (int s : A1)
        if (std::binary_search(A2.begin(), A2.end(), s))
            throw IndexOutOfRange("A1 and A2 share site " + std::to_string(s));
}

int region_distance(const std::vector<int>& A1, const std::vector<int>& A2) {
    int d = std::numeric_limits<int>::max();
    for (int a : A1)
        for (int b : A2) d = std::min(d, std::abs(a - b));
    return d;
}

std::vector<int> concat(const std::vector<int>& A1, const std::vector<int>& A2) {
    std::vector<int> sites = A1;
    sites.insert(sites.end(), A2.begin(), A2.end());
    return sites;
}

} // namespace

NegativitySetup negativity_setup(std::vector<int> A1, std::vector<int> A2,
                                 const SpectralData& sd, int K) {
    check_regions(A1, A2);
    NegativitySetup setup;
    setup.C = correlation_matrix(sd, K, concat(A1, A2));
    setup.separation = region_distance(A1, A2);
    setup.A1 = std::move(A1);
    setup.A2 = std::move(A2);
    return setup;
}

NegativitySetup negativity_setup_from_modes(std::vector<int> A1, std::vector<int> A2,
                                            const Mat& modes, int K) {
    check_regions(A1, A2);
    NegativitySetup setup;
    setup.C = correlation_from_modes(modes, concat(A1, A2), K);
    setup.separation = region_distance(A1, A2);
    setup.A1 = std::move(A1);
    setup.A2 = std::move(A2);
    return setup;
}

double logarithmic_negativity(const NegativitySetup& setup) {
    const int l1 = static_cast<int>(setup.A1.size());
    const int l2 = static_cast<int>(setup.A2.size());
    const int L = l1 + l2;
    if (setup.C.size() != L)
        throw LengthMismatch("correlation matrix size does not match A1 u A2");

    const Mat J = 2.0 * setup.C.entries - Mat::Identity(L, L);

    // J± carry ±i on the off-diagonal blocks. Conjugating by diag(I, iI)
    // turns both into real matrices, so J_x = (I + J+ J-)^{-1}(J+ + J-) is
    // similar to a real matrix and its spectrum comes in exact conjugate
    // pairs from a real Schur decomposition.
    Mat Kp(L, L), Km(L, L);
    Kp.topLeftCorner(l1, l1) = -J.topLeftCorner(l1, l1);
    Km.topLeftCorner(l1, l1) = -J.topLeftCorner(l1, l1);
    Kp.bottomRightCorner(l2, l2) = J.bottomRightCorner(l2, l2);
    Km.bottomRightCorner(l2, l2) = J.bottomRightCorner(l2, l2);
    Kp.topRightCorner(l1, l2) = -J.topRightCorner(l1, l2);
    Km.topRightCorner(l1, l2) = J.topRightCorner(l1, l2);
    Kp.bottomLeftCorner(l2, l1) = J.bottomLeftCorner(l2, l1);
    Km.bottomLeftCorner(l2, l1) = -J.bottomLeftCorner(l2, l1);

    const Mat resolvent = Mat::Identity(L, L) + Kp * Km;
    Eigen::PartialPivLU<Mat> lu(resolvent);
    if (lu.rcond() < 1e-12)
        throw SingularResolvent("I + J+ J- has reciprocal condition " +
                                std::to_string(lu.rcond()));
    const Mat Jx = lu.solve(Kp + Km);

    Eigen::EigenSolver<Mat> es(Jx, false);
    if (es.info() != Eigen::Success)
        throw ConvergenceFailure("eigensolver failed on J_x");

    std::complex<double> first = 0.0;
    for (int j = 0; j < L; ++j) {
        std::complex<double> nu = es.eigenvalues()[j];
        // |nu| <= 1 holds in exact arithmetic; push roundoff overshoot of a
        // real eigenvalue back onto the branch-cut-free segment.
        if (nu.imag() == 0.0 && std::abs(nu.real()) > 1.0 && std::abs(nu.real()) < 1.0 + 1e-8)
            nu.real(std::copysign(1.0, nu.real()));
        first += std::log(std::sqrt(0.5 * (1.0 + nu)) + std::sqrt(0.5 * (1.0 - nu)));
    }
    if (std::abs(first.imag()) > 1e-9)
        throw ImaginaryLeak("imaginary part " + std::to_string(first.imag()) +
                            " left in the J_x spectral sum");

    Eigen::SelfAdjointEigenSolver<Mat> jsolver(J, Eigen::EigenvaluesOnly);
    double second = 0.0;
    for (int j = 0; j < L; ++j) {
        const double mu = jsolver.eigenvalues()[j];
        const double a = 0.5 * (1.0 + mu);
        const double b = 0.5 * (1.0 - mu);
        second += 0.5 * std::log(a * a + b * b);
    }
    return first.real() + second;
}

double skeletal_negativity(double c_mn, double rho) {
    if (!(rho > 0.0 && rho < 1.0))
        throw IndexOutOfRange("filling fraction must lie in (0,1)");
    return 2.0 / (1.0 + 2.0 * (rho - 1.0) * rho) * c_mn * c_mn;
}

double correlation_asymptotic(AsymptoticKind kind, double p, double rho, int d) {
    if (d < 1) throw IndexOutOfRange("separation d must be >= 1");
    // sin(-pi d / 2) on integers, exactly.
    const double sine = (d % 2 == 0) ? 0.0 : (d % 4 == 1 ? -1.0 : 1.0);
    const double boundary_amp = std::pow(2.0 * std::pow(std::numbers::pi, 3), -0.25);
    switch (kind) {
        case AsymptoticKind::bulk: {
            const double rate = std::sqrt(1.0 / (p * (1.0 - p))) * std::asin(std::sqrt(rho));
            return std::sin(d * rate) / (std::numbers::pi * d);
        }
        case AsymptoticKind::boundary0:
            return boundary_amp * std::pow(d, -0.75) * sine;
        case AsymptoticKind::boundary1:
            return boundary_amp * std::pow(d, -1.25) * sine;
    }
    throw IndexOutOfRange("unknown asymptotic kind");
}

LinearFit negativity_scan_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() < 4 || x.size() != y.size())
        throw InsufficientPoints("negativity fit needs at least 4 points");
    return fit_line(x, y);
}

} // namespace xxchain
