#include "xxchain/polynomial.hpp"

#include "xxchain/errors.hpp"

#include <cassert>

namespace xxchain {

double MonicPoly::eval(double x) const {
    double acc = 0.0;
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs[i];
    return acc;
}

MonicPoly poly_from_roots(std::span<const double> roots) {
    MonicPoly poly;
    poly.coeffs = {1.0};
    for (double r : roots) {
        poly.coeffs.push_back(0.0);
        for (int i = poly.degree(); i >= 1; --i)
            poly.coeffs[i] = poly.coeffs[i - 1] - r * poly.coeffs[i];
        poly.coeffs[0] *= -r;
    }
    return poly;
}

MonicPoly deflate(const MonicPoly& poly, double root) {
    const int d = poly.degree();
    assert(d >= 1);
    MonicPoly out;
    out.coeffs.assign(d, 0.0);
    double carry = poly.coeffs[d];
    for (int i = d - 1; i >= 0; --i) {
        out.coeffs[i] = carry;
        carry = poly.coeffs[i] + root * carry;
    }
    return out;
}

MonicDivision divide_step(const MonicPoly& dividend, const MonicPoly& divisor) {
    const int d = divisor.degree();
    if (dividend.degree() != d + 1)
        throw LengthMismatch("divide_step expects deg(dividend) == deg(divisor) + 1");
    // dividend = (x + q0) * divisor + remainder, all monic.
    std::vector<double> work(dividend.coeffs);
    for (int i = 0; i <= d; ++i) work[i + 1] -= divisor.coeffs[i];
    const double q0 = work[d];
    MonicDivision out;
    out.b = -q0;
    out.remainder.assign(d, 0.0);
    for (int i = 0; i < d; ++i) out.remainder[i] = work[i] - q0 * divisor.coeffs[i];
    return out;
}

} // namespace xxchain
