#pragma once

#include <span>
#include <vector>

namespace xxchain {

// Monic real polynomial in the monomial basis; coeffs[i] multiplies x^i and
// the leading coefficient is exactly 1. Adequate for the inverse spectral
// problem at N <~ 40; the synthesis route guards itself with a round-trip
// residual check instead of pretending the basis is well conditioned.
struct MonicPoly {
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double eval(double x) const;
};

MonicPoly poly_from_roots(std::span<const double> roots);

// Synthetic division by (x - root); exact degree drop by one.
MonicPoly deflate(const MonicPoly& poly, double root);

// Division of a monic polynomial by a monic polynomial one degree lower.
// The quotient is x - b; the remainder has degree deg(divisor) - 1 or less.
struct MonicDivision {
    double b;
    std::vector<double> remainder;
};
MonicDivision divide_step(const MonicPoly& dividend, const MonicPoly& divisor);

} // namespace xxchain
