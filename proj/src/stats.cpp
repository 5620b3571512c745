#include "pdrecon/stats.hpp"

#include <cmath>
#include <numbers>

#include "pdrecon/errors.hpp"

namespace pdrecon {

namespace {

// Two-sided 97.5% Student-t quantiles for small degrees of freedom; 1.96
// beyond the table.
double t_quantile_975(int df) {
    static constexpr double table[] = {
        12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
        2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
        2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042};
    if (df < 1) return std::numeric_limits<double>::quiet_NaN();
    if (df <= 30) return table[df - 1];
    return 1.96;
}

} // namespace

linear_fit fit_linear(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        raise(errc::invalid_argument, "fit_linear: need matched samples, at least 2");
    const int n = static_cast<int>(x.size());
    double mx = 0, my = 0;
    for (int i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (int i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) raise(errc::invalid_argument, "fit_linear: degenerate x values");

    linear_fit fit;
    fit.n = n;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0;
    for (int i = 0; i < n; ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        ss_res += r * r;
    }
    fit.r_squared = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
    if (n > 2) {
        const double sigma2 = ss_res / (n - 2);
        fit.slope_stderr = std::sqrt(sigma2 / sxx);
        const double t = t_quantile_975(n - 2);
        fit.slope_ci95_low = fit.slope - t * fit.slope_stderr;
        fit.slope_ci95_high = fit.slope + t * fit.slope_stderr;
    } else {
        fit.slope_stderr = std::numeric_limits<double>::infinity();
        fit.slope_ci95_low = -std::numeric_limits<double>::infinity();
        fit.slope_ci95_high = std::numeric_limits<double>::infinity();
    }
    return fit;
}

double binomial_upper_tail(int n, int k, double p) {
    if (k <= 0) return 1.0;
    if (k > n) return 0.0;
    if (p <= 0.0) return 0.0;
    if (p >= 1.0) return 1.0;
    // Sum pmf terms from k to n in log space.
    double tail = 0.0;
    const double log_p = std::log(p), log_q = std::log1p(-p);
    for (int i = k; i <= n; ++i) {
        const double log_pmf = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) -
                               std::lgamma(n - i + 1.0) + i * log_p + (n - i) * log_q;
        tail += std::exp(log_pmf);
    }
    return std::min(tail, 1.0);
}

double minangle_single_probability() { return 1e-6 / std::numbers::pi; }

double minangle_model_probability(int n) {
    if (n < 3) return 0.0;
    const double triples = static_cast<double>(n) * (n - 1) * (n - 2);
    return -std::expm1(triples * std::log1p(-minangle_single_probability()));
}

} // namespace pdrecon
