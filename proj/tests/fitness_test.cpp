#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "extrema_ga/fitness.hpp"
#include "extrema_ga/random.hpp"

namespace ega {
namespace {

TEST(AdjustFitness, ModeSign) {
    const std::vector<double> raw{1, 5, 3};
    const auto mx = adjust_fitness(raw, SearchMode::Maximum);
    EXPECT_EQ(mx, (std::vector<double>{1, 5, 3}));
    EXPECT_EQ(argbest(mx), 1U);
    const auto mn = adjust_fitness(raw, SearchMode::Minimum);
    EXPECT_EQ(mn, (std::vector<double>{-1, -5, -3}));
    EXPECT_EQ(argbest(mn), 0U);
}

TEST(AdjustFitness, ArgbestMatchesModeExtremum) {
    RandomStream rng(5);
    for (int t = 0; t < 1000; ++t) {
        std::vector<double> raw(1 + rng.below(64));
        for (double& v : raw) v = rng.uniform() * 200.0 - 100.0;
        const auto lo = std::min_element(raw.begin(), raw.end()) - raw.begin();
        const auto hi = std::max_element(raw.begin(), raw.end()) - raw.begin();
        ASSERT_EQ(argbest(adjust_fitness(raw, SearchMode::Minimum)), static_cast<std::size_t>(lo));
        ASSERT_EQ(argbest(adjust_fitness(raw, SearchMode::Maximum)), static_cast<std::size_t>(hi));
    }
}

TEST(PairwiseSum, MatchesExactSmallIntegers) {
    std::vector<double> v(1000);
    std::iota(v.begin(), v.end(), 1.0);
    EXPECT_EQ(pairwise_sum(v), 500500.0);
    EXPECT_EQ(pairwise_sum({}), 0.0);
}

TEST(LinearScale, HandSolvedExample) {
    EXPECT_EQ(linear_scale(std::vector<double>{1, 2, 3}, 2.0), (std::vector<double>{0, 2, 4}));
}

TEST(LinearScale, AllEqualIsUnchanged) {
    EXPECT_EQ(linear_scale(std::vector<double>{4, 4, 4}), (std::vector<double>{4, 4, 4}));
}

TEST(LinearScale, DegenerateNonPositiveConstant) {
    // No spread and a non-positive average: every weight becomes equal and positive.
    const auto out = linear_scale(std::vector<double>{-3, -3});
    EXPECT_EQ(out[0], out[1]);
    EXPECT_GT(out[0], 0.0);
}

TEST(LinearScale, RejectsBadInput) {
    EXPECT_THROW(linear_scale(std::vector<double>{}), std::invalid_argument);
    EXPECT_THROW(linear_scale(std::vector<double>{1, 2}, 1.0), std::invalid_argument);
}

TEST(LinearScale, PreservesMeanArgmaxAndNonNegativity) {
    RandomStream rng(6);
    for (int t = 0; t < 10000; ++t) {
        std::vector<double> f(2 + rng.below(100));
        const double offset = rng.uniform() < 0.5 ? 0.0 : 50.0;
        for (double& v : f) v = offset + rng.uniform() * 100.0;
        const auto s = linear_scale(f, 2.0);
        const double mean_f = pairwise_sum(f) / f.size();
        const double mean_s = pairwise_sum(s) / s.size();
        ASSERT_NEAR(mean_s, mean_f, 1e-9 * std::abs(mean_f));
        ASSERT_GE(*std::min_element(s.begin(), s.end()), 0.0);
        ASSERT_EQ(argbest(s), argbest(f));
    }
}

TEST(LinearScale, NegativeInputsAreShiftedFirst) {
    // Shifted to [0, 1, 2]: avg 1, the min already sits on zero, so a = 1, b = 0.
    const auto s = linear_scale(std::vector<double>{-3, -2, -1}, 2.0);
    EXPECT_EQ(s, (std::vector<double>{0, 1, 2}));
}

TEST(LinearScale, CapsBestAtMultipleOfMean) {
    // No truncation needed: the best maps to c * avg and the mean is kept.
    const std::vector<double> f{10, 11, 12, 13, 14};
    const auto s = linear_scale(f, 1.5);
    EXPECT_NEAR(s[4], 1.5 * 12.0, 1e-12);
    EXPECT_NEAR(pairwise_sum(s) / 5.0, 12.0, 1e-12);
}

} // namespace
} // namespace ega
