#pragma once

#include <span>
#include <vector>

namespace xxchain {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

// Ordinary least squares of y against x. Requires x.size() == y.size() >= 2.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

// Sample Pearson correlation coefficient.
double pearson(std::span<const double> x, std::span<const double> y);

// Binary (Shannon) entropy in nats, H2(g) = -g ln g - (1-g) ln(1-g).
// Arguments outside (0,1) contribute their limiting value 0.
double binary_entropy(double g);

// Fermi function f(x) = 1 / (1 + e^x), overflow-safe on both tails.
double logistic(double x);

// ln C(n, k) via lgamma; exact enough for n up to millions.
double log_binomial(int n, int k);

// sinh(a)/sinh(b) for b > 0, |a| <= b, without overflow for large b.
double sinh_ratio(double a, double b);

} // namespace xxchain
