#include "xxchain/chain.hpp"

#include "xxchain/errors.hpp"

#include <cmath>
#include <string>

namespace xxchain {

namespace {

void validate(const Chain& chain) {
    if (chain.N < 1)
        throw LengthMismatch("chain needs at least 2 sites (N >= 1)");
    if (static_cast<int>(chain.J.size()) != chain.N)
        throw LengthMismatch("expected " + std::to_string(chain.N) + " couplings, got " +
                             std::to_string(chain.J.size()));
    if (static_cast<int>(chain.B.size()) != chain.N + 1)
        throw LengthMismatch("expected " + std::to_string(chain.N + 1) + " fields, got " +
                             std::to_string(chain.B.size()));
    for (int l = 0; l < chain.N; ++l) {
        if (!(chain.J[l] > 0.0))
            throw NonPositiveCoupling("J[" + std::to_string(l) + "] = " +
                                      std::to_string(chain.J[l]) + " must be > 0");
    }
    if (chain.dual) {
        if (static_cast<int>(chain.dual->size()) != chain.N + 1)
            throw LengthMismatch("dual grid must have N+1 entries");
        for (int l = 0; l < chain.N; ++l) {
            if (!((*chain.dual)[l + 1] > (*chain.dual)[l]))
                throw NonMonotoneDual("dual grid must be strictly increasing at index " +
                                      std::to_string(l));
        }
    }
}

std::vector<double> integer_grid(int N) {
    std::vector<double> grid(N + 1);
    for (int l = 0; l <= N; ++l) grid[l] = static_cast<double>(l);
    return grid;
}

} // namespace

Chain krawtchouk_chain(int N, double p) {
    if (N < 1) throw LengthMismatch("krawtchouk chain needs N >= 1");
    if (!(p > 0.0 && p < 1.0))
        throw NonPositiveCoupling("krawtchouk parameter p must lie in (0,1)");
    Chain chain;
    chain.N = N;
    chain.J.resize(N);
    chain.B.resize(N + 1);
    const double amp = std::sqrt(p * (1.0 - p));
    for (int n = 0; n < N; ++n)
        chain.J[n] = amp * std::sqrt(static_cast<double>(n + 1) * (N - n));
    for (int n = 0; n <= N; ++n) chain.B[n] = p * (N - n) + (1.0 - p) * n;
    chain.dual = integer_grid(N);
    validate(chain);
    return chain;
}

Chain homogeneous_chain(int N, double J, double B) {
    if (N < 1) throw LengthMismatch("homogeneous chain needs N >= 1");
    Chain chain;
    chain.N = N;
    chain.J.assign(N, J);
    chain.B.assign(N + 1, B);
    chain.dual = integer_grid(N);
    validate(chain);
    return chain;
}

Chain custom_chain(std::vector<double> J, std::vector<double> B,
                   std::optional<std::vector<double>> dual) {
    Chain chain;
    chain.N = static_cast<int>(J.size());
    chain.J = std::move(J);
    chain.B = std::move(B);
    chain.dual = std::move(dual);
    validate(chain);
    return chain;
}

Chain build_chain(const ChainSpec& spec) {
    return std::visit(
        [](const auto& s) -> Chain {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, KrawtchoukSpec>) {
                return krawtchouk_chain(s.N, s.p);
            } else if constexpr (std::is_same_v<S, HomogeneousSpec>) {
                return homogeneous_chain(s.N, s.J, s.B);
            } else {
                return custom_chain(s.J, s.B, s.dual);
            }
        },
        spec);
}

Chain shifted_fields(Chain chain, double delta) {
    for (double& b : chain.B) b += delta;
    return chain;
}

Chain scaled_couplings(Chain chain, double s) {
    if (!(s > 0.0)) throw NonPositiveCoupling("coupling scale must be > 0");
    for (double& j : chain.J) j *= s;
    for (double& b : chain.B) b *= s;
    return chain;
}

} // namespace xxchain
