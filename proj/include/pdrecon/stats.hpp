#pragma once

#include <span>

namespace pdrecon {

/// Ordinary least squares for y = intercept + slope * x.
struct linear_fit {
    double intercept = 0.0;
    double slope = 0.0;
    double r_squared = 0.0;
    double slope_stderr = 0.0;
    double slope_ci95_low = 0.0;
    double slope_ci95_high = 0.0;
    int n = 0;
};

linear_fit fit_linear(std::span<const double> x, std::span<const double> y);

/// Upper tail P[X >= k] of Binomial(n, p).
double binomial_upper_tail(int n, int k, double p);

/// Probability that one uniform triple angle falls below 1e-6 radians:
/// 1e-6 / pi.
double minangle_single_probability();

/// Model probability that an n-point uniform sample contains an angle below
/// 1e-6 radians, treating the n(n-1)(n-2) angles as independent:
/// 1 - (1 - 1e-6/pi)^(n(n-1)(n-2)).  An overestimate of the true probability.
double minangle_model_probability(int n);

} // namespace pdrecon
