#pragma once

#include <string_view>

#include "extrema_ga/genome.hpp"

namespace ega {

enum class FunctionId { F1, F2 };
enum class SearchMode { Minimum, Maximum };

struct ObjectiveSpec {
    FunctionId function = FunctionId::F1;
    Interval interval{2.0, 130.0};
    SearchMode mode = SearchMode::Maximum;

    friend bool operator==(const ObjectiveSpec&, const ObjectiveSpec&) = default;
};

/// (10.2 x^2 - 0.3 x + 2) / 100 + sin x + 120 sin(x / 10) + 768
double eval_f1(double x) noexcept;

/// cos x sin x atan x cos(x + 1) + x / 100 + 5      for x < 65
/// cos x sin x atan x cos(x + 1) - x / 100 + 5.65   for x >= 65
///
/// The branches do not meet at 65; the jump is kept as is.
double eval_f2(double x) noexcept;

/// Unchecked dispatch used on hot paths.
inline double eval_function(FunctionId id, double x) noexcept {
    return id == FunctionId::F1 ? eval_f1(x) : eval_f2(x);
}

/// Raw objective at x. Throws std::out_of_range when x is outside spec.interval.
double raw_objective(const ObjectiveSpec& spec, double x);

struct Extremum {
    double x = 0.0;
    double value = 0.0;
};

/// Brute-force grid scan: lo, lo + step, lo + 2 step, ... while below hi,
/// plus hi itself. Returns the mode-extremal grid point, ties toward smaller x.
Extremum oracle_extremum(const ObjectiveSpec& spec, double step);

std::string_view to_string(FunctionId id) noexcept;
std::string_view to_string(SearchMode mode) noexcept;

} // namespace ega
