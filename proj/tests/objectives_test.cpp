#include <gtest/gtest.h>

#include <cmath>

#include "extrema_ga/objectives.hpp"

namespace ega {
namespace {

// Reference values computed with mpmath at 50 significant digits
// (tests/oracles/objective_values.py).
constexpr double kF1At2 = 793.1716171222330275505255;
constexpr double kF1At130 = 2540.919938469010148868801;
constexpr double kF2At5 = 4.691300059151093782536589;
constexpr double kF2At64999 = 6.37253058103934644753982;
constexpr double kF2At65 = 5.723094395758466441340406;
constexpr double kF2At130 = 4.661960156273998928231755;

void expect_rel(double actual, double expected) {
    EXPECT_NEAR(actual, expected, 1e-9 * std::abs(expected));
}

TEST(EvalF1, ReferenceValues) {
    expect_rel(eval_f1(0.0), 768.02);
    expect_rel(eval_f1(2.0), kF1At2);
    expect_rel(eval_f1(130.0), kF1At130);
}

TEST(EvalF2, ReferenceValues) {
    expect_rel(eval_f2(0.0), 5.0);
    expect_rel(eval_f2(5.0), kF2At5);
    expect_rel(eval_f2(64.999), kF2At64999);
    expect_rel(eval_f2(65.0), kF2At65);
    expect_rel(eval_f2(130.0), kF2At130);
}

TEST(EvalF2, BranchSplitsAt65) {
    // At x = 65 the offset drops from 0.65 + 5 to -0.65 + 5.65.
    const double left = eval_f2(std::nextafter(65.0, 0.0));
    const double right = eval_f2(65.0);
    EXPECT_NEAR(left - right, 0.65, 1e-6);
    EXPECT_NEAR(eval_f2(65.0 - 1e-9) - eval_f2(65.0 + 1e-9), 0.65, 1e-6);
}

TEST(RawObjective, DispatchAndDomain) {
    const ObjectiveSpec f1max{FunctionId::F1, Interval(2.0, 130.0), SearchMode::Maximum};
    EXPECT_THROW(raw_objective(f1max, 0.0), std::out_of_range);
    EXPECT_THROW(raw_objective(f1max, 130.5), std::out_of_range);
    const ObjectiveSpec f2min{FunctionId::F2, Interval(2.0, 130.0), SearchMode::Minimum};
    EXPECT_EQ(raw_objective(f2min, 5.0), eval_f2(5.0));
    const ObjectiveSpec f1min{FunctionId::F1, Interval(2.0, 130.0), SearchMode::Minimum};
    expect_rel(raw_objective(f1min, 2.0), kF1At2);
}

TEST(OracleExtremum, F1ExtremaSitAtTheEndpoints) {
    const Extremum mx = oracle_extremum({FunctionId::F1, Interval(2, 130), SearchMode::Maximum}, 1e-4);
    EXPECT_EQ(mx.x, 130.0);
    expect_rel(mx.value, kF1At130);
    const Extremum mn = oracle_extremum({FunctionId::F1, Interval(2, 130), SearchMode::Minimum}, 1e-4);
    EXPECT_EQ(mn.x, 2.0);
    expect_rel(mn.value, kF1At2);
}

// Independent coarse scan: a fixed number of evenly spaced points, then a
// local refinement around the winner. The grid oracle must agree within the
// slope-bounded distance between its grid and the refined point.
Extremum coarse_then_refine(const ObjectiveSpec& spec) {
    const auto better = [&](double a, double b) {
        return spec.mode == SearchMode::Maximum ? a > b : a < b;
    };
    const double lo = spec.interval.lo, hi = spec.interval.hi;
    Extremum best{lo, eval_function(spec.function, lo)};
    constexpr int kCoarse = 200000;
    for (int i = 1; i <= kCoarse; ++i) {
        const double x = lo + (hi - lo) * i / kCoarse;
        const double v = eval_function(spec.function, x);
        if (better(v, best.value)) best = {x, v};
    }
    double radius = (hi - lo) / kCoarse;
    for (int round = 0; round < 40; ++round) {
        const double a = std::max(lo, best.x - radius), b = std::min(hi, best.x + radius);
        for (int i = 0; i <= 100; ++i) {
            const double x = a + (b - a) * i / 100;
            const double v = eval_function(spec.function, x);
            if (better(v, best.value)) best = {x, v};
        }
        radius /= 10;
    }
    return best;
}

TEST(OracleExtremum, AgreesWithIndependentScan) {
    for (FunctionId f : {FunctionId::F1, FunctionId::F2}) {
        for (SearchMode m : {SearchMode::Minimum, SearchMode::Maximum}) {
            const ObjectiveSpec spec{f, Interval(2.0, 130.0), m};
            const Extremum grid = oracle_extremum(spec, 1e-4);
            const Extremum ref = coarse_then_refine(spec);
            // The refined point is at least as good; a 1e-4 grid is within 5e-5 of it.
            // |f'| < 30 on [2, 130] for F1 and < 3 for F2.
            EXPECT_NEAR(grid.value, ref.value, 30 * 5e-5) << to_string(f) << to_string(m);
            EXPECT_FALSE(spec.mode == SearchMode::Maximum ? ref.value < grid.value - 1e-12
                                                           : ref.value > grid.value + 1e-12);
        }
    }
}

TEST(OracleExtremum, RefiningTheGridNeverWorsensTheResult) {
    const ObjectiveSpec spec{FunctionId::F2, Interval(2.0, 130.0), SearchMode::Maximum};
    const Extremum coarse = oracle_extremum(spec, 1e-2);
    const Extremum fine = oracle_extremum(spec, 5e-3);
    EXPECT_GE(fine.value, coarse.value);
}

TEST(OracleExtremum, RejectsBadSteps) {
    const ObjectiveSpec spec{};
    EXPECT_THROW(oracle_extremum(spec, 0.0), std::invalid_argument);
    EXPECT_THROW(oracle_extremum(spec, -1.0), std::invalid_argument);
    EXPECT_THROW(oracle_extremum(spec, 200.0), std::invalid_argument);
    EXPECT_NO_THROW(oracle_extremum(spec, 128.0));
}

} // namespace
} // namespace ega
