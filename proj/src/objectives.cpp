#include "extrema_ga/objectives.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ega {

double eval_f1(double x) noexcept {
    return (10.2 * x * x - 0.3 * x + 2.0) / 100.0 + std::sin(x) + 120.0 * std::sin(x / 10.0) +
           768.0;
}

double eval_f2(double x) noexcept {
    const double core = std::cos(x) * std::sin(x) * std::atan(x) * std::cos(x + 1.0);
    if (x < 65.0) return core + x / 100.0 + 5.0;
    return core - x / 100.0 + 5.65;
}

double raw_objective(const ObjectiveSpec& spec, double x) {
    if (!spec.interval.contains(x)) {
        throw std::out_of_range("x = " + std::to_string(x) + " outside [" +
                                std::to_string(spec.interval.lo) + ", " +
                                std::to_string(spec.interval.hi) + "]");
    }
    return eval_function(spec.function, x);
}

Extremum oracle_extremum(const ObjectiveSpec& spec, double step) {
    const Interval& iv = spec.interval;
    if (!(step > 0.0) || step > iv.width()) {
        throw std::invalid_argument("oracle step must be in (0, hi - lo]");
    }
    const bool maximize = spec.mode == SearchMode::Maximum;
    Extremum best{iv.lo, eval_function(spec.function, iv.lo)};
    auto consider = [&](double x) {
        const double v = eval_function(spec.function, x);
        if (maximize ? v > best.value : v < best.value) best = {x, v};
    };
    // Grid points are lo + k * step from a common origin so that halving the
    // step yields a superset grid.
    for (std::uint64_t k = 1;; ++k) {
        const double x = iv.lo + static_cast<double>(k) * step;
        if (!(x < iv.hi)) break;
        consider(x);
    }
    consider(iv.hi);
    return best;
}

std::string_view to_string(FunctionId id) noexcept { return id == FunctionId::F1 ? "f1" : "f2"; }

std::string_view to_string(SearchMode mode) noexcept {
    return mode == SearchMode::Minimum ? "min" : "max";
}

} // namespace ega
