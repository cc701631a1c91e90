#include "xxchain/numerics.hpp"

#include "xxchain/errors.hpp"

#include <cassert>
#include <cmath>

namespace xxchain {

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
    assert(x.size() == y.size());
    const auto n = static_cast<double>(x.size());
    if (x.size() < 2) throw InsufficientPoints("fit_line: need at least 2 points");

    double sx = 0, sy = 0;
    for (size_t i = 0; i < x.size(); ++i) { sx += x[i]; sy += y[i]; }
    const double mx = sx / n, my = sy / n;

    double sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    // r^2 = 1 - SS_res / SS_tot; for syy == 0 the data is constant and any
    // zero-slope line is exact.
    if (syy == 0.0) {
        fit.r2 = 1.0;
    } else {
        double ss_res = 0;
        for (size_t i = 0; i < x.size(); ++i) {
            const double e = y[i] - (fit.intercept + fit.slope * x[i]);
            ss_res += e * e;
        }
        fit.r2 = 1.0 - ss_res / syy;
    }
    return fit;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    assert(x.size() == y.size());
    const auto n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (size_t i = 0; i < x.size(); ++i) { sx += x[i]; sy += y[i]; }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, syy = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    const double denom = std::sqrt(sxx * syy);
    return denom == 0.0 ? 0.0 : sxy / denom;
}

double binary_entropy(double g) {
    double s = 0.0;
    if (g > 0.0 && g < 1.0) {
        s -= g * std::log(g);
        s -= (1.0 - g) * std::log(1.0 - g);
    }
    return s;
}

double logistic(double x) {
    if (x >= 0.0) {
        const double e = std::exp(-x);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(x));
}

double log_binomial(int n, int k) {
    assert(k >= 0 && k <= n);
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double sinh_ratio(double a, double b) {
    assert(b > 0.0 && std::abs(a) <= b * (1.0 + 1e-12));
    if (a == 0.0) return 0.0;
    const double s = a > 0.0 ? 1.0 : -1.0;
    const double aa = std::abs(a);
    // sinh(a)/sinh(b) = e^(a-b) * (1 - e^(-2a)) / (1 - e^(-2b)); every factor
    // stays in range even when b alone would overflow sinh.
    const double num = -std::expm1(-2.0 * aa);
    const double den = -std::expm1(-2.0 * b);
    return s * std::exp(aa - b) * num / den;
}

} // namespace xxchain
