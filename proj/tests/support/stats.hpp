#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace ega::testing {

// Regularized upper incomplete gamma Q(a, x), series / continued fraction.
inline double gamma_q(double a, double x) {
    if (x <= 0.0) return 1.0;
    const double log_prefix = -x + a * std::log(x) - std::lgamma(a);
    if (x < a + 1.0) {
        double term = 1.0 / a;
        double sum = term;
        for (int n = 1; n < 10000; ++n) {
            term *= x / (a + n);
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-15) break;
        }
        return 1.0 - sum * std::exp(log_prefix);
    }
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15) break;
    }
    return std::exp(log_prefix) * h;
}

struct ChiSquare {
    double statistic = 0.0;
    std::size_t dof = 0;
    double p_value = 1.0;
};

/// Goodness of fit of observed counts against category probabilities.
inline ChiSquare chi_square(std::span<const std::size_t> observed, std::span<const double> probs) {
    if (observed.size() != probs.size() || observed.size() < 2) {
        throw std::invalid_argument("chi_square: mismatched categories");
    }
    const double total = static_cast<double>(
        std::accumulate(observed.begin(), observed.end(), std::size_t{0}));
    ChiSquare out;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double expected = total * probs[i];
        const double diff = static_cast<double>(observed[i]) - expected;
        out.statistic += diff * diff / expected;
    }
    out.dof = observed.size() - 1;
    out.p_value = gamma_q(0.5 * static_cast<double>(out.dof), 0.5 * out.statistic);
    return out;
}

inline ChiSquare chi_square_uniform(std::span<const std::size_t> observed) {
    const std::vector<double> probs(observed.size(), 1.0 / static_cast<double>(observed.size()));
    return chi_square(observed, probs);
}

/// Half-width of a ~4.4 sigma interval for a proportion p over n trials.
inline double proportion_tolerance(double p, std::size_t n) {
    return 4.4 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

} // namespace ega::testing
