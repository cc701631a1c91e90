#pragma once

#include <optional>
#include <variant>
#include <vector>

namespace xxchain {

// Inhomogeneous XX chain of N+1 sites in the one-excitation picture: N
// positive couplings J and N+1 on-site fields B. Together they define the
// symmetric tridiagonal Jacobi matrix with diagonal B and off-diagonal J.
// The optional dual grid holds the eigenvalues of the position operator X
// (needed for the commuting Heun operator); it must be strictly increasing.
struct Chain {
    int N = 0;
    std::vector<double> J;
    std::vector<double> B;
    std::optional<std::vector<double>> dual;

    int sites() const { return N + 1; }
};

struct KrawtchoukSpec {
    int N = 1;
    double p = 0.5;
};

struct HomogeneousSpec {
    int N = 1;
    double J = 1.0;
    double B = 0.0;
};

struct CustomSpec {
    std::vector<double> J;
    std::vector<double> B;
    std::optional<std::vector<double>> dual;
};

using ChainSpec = std::variant<KrawtchoukSpec, HomogeneousSpec, CustomSpec>;

// Krawtchouk chain: J_n = sqrt(p(1-p)) sqrt((n+1)(N-n)), B_n = p(N-n) + (1-p)n,
// dual grid lambda_l = l. One-excitation spectrum is {0, 1, ..., N} for any p.
Chain krawtchouk_chain(int N, double p);

// Uniform couplings J and field B; dual grid lambda_l = l.
Chain homogeneous_chain(int N, double J = 1.0, double B = 0.0);

Chain custom_chain(std::vector<double> J, std::vector<double> B,
                   std::optional<std::vector<double>> dual = std::nullopt);

Chain build_chain(const ChainSpec& spec);

// B_l -> B_l + delta. Every eigenvalue shifts by delta; wavefunctions are
// unchanged (the shift commutes with everything).
Chain shifted_fields(Chain chain, double delta);

// (J, B) -> (s J, s B): the Jacobi matrix, hence the spectrum, scales by s.
Chain scaled_couplings(Chain chain, double s);

} // namespace xxchain
