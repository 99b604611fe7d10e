#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "extrema_ga/engine.hpp"
#include "extrema_ga/objectives.hpp"
#include "extrema_ga/random.hpp"

namespace ega {
namespace {

GaConfig small_config(std::uint64_t seed = 1) {
    GaConfig cfg;
    cfg.seed = seed;
    cfg.stop = StopRule::fixed(30);
    return cfg;
}

void expect_same_results(const RunReport& a, const RunReport& b) {
    EXPECT_EQ(a.history, b.history);
    EXPECT_EQ(a.best_x, b.best_x);
    EXPECT_EQ(a.best_raw, b.best_raw);
    EXPECT_EQ(a.generations, b.generations);
    EXPECT_EQ(a.converged, b.converged);
}

TEST(Validate, RejectsOutOfRangeParameters) {
    auto bad = [](auto mutate) {
        GaConfig cfg;
        mutate(cfg);
        return cfg;
    };
    EXPECT_NO_THROW(validate(GaConfig{}));
    EXPECT_THROW(validate(bad([](GaConfig& c) { c.population = 1; })), ConfigError);
    EXPECT_THROW(validate(bad([](GaConfig& c) { c.p_cross = 1.5; })), ConfigError);
    EXPECT_THROW(validate(bad([](GaConfig& c) { c.p_mut = -0.1; })), ConfigError);
    EXPECT_THROW(validate(bad([](GaConfig& c) { c.threads = 0; })), ConfigError);
    EXPECT_THROW(validate(bad([](GaConfig& c) { c.stop = StopRule::fixed(0); })), ConfigError);
    EXPECT_THROW(validate(bad([](GaConfig& c) { c.length = 54; })), ConfigError);
    EXPECT_THROW(validate(bad([](GaConfig& c) {
                     c.length = 2;
                     c.crossover = CrossoverKind::TwoPoint;
                 })),
                 ConfigError);
    EXPECT_THROW(validate(bad([](GaConfig& c) { c.selection = SelectionKind::tournament(65); })),
                 ConfigError);
    EXPECT_THROW(validate(bad([](GaConfig& c) { c.selection = SelectionKind::tournament(1); })),
                 ConfigError);
    EXPECT_THROW(validate(bad([](GaConfig& c) { c.scaling = Scaling::linear(1.0); })), ConfigError);
}

TEST(Evaluate, F2AtZero) {
    GaConfig cfg;
    cfg.objective = {FunctionId::F2, Interval(0.0, 130.0), SearchMode::Maximum};
    Population pop;
    pop.length = 32;
    pop.resize(1);
    pop.bits[0] = 0;
    evaluate(pop, cfg);
    EXPECT_EQ(pop.x[0], 0.0);
    EXPECT_EQ(pop.raw, std::vector<double>{5.0});
}

TEST(Evaluate, MatchesSequentialAndIsThreadInvariant) {
    GaConfig cfg;
    cfg.objective.mode = SearchMode::Minimum;
    Engine one(cfg);
    Population pop = one.initial_population();
    for (std::size_t i = 0; i < pop.size(); ++i) {
        const double x = decode(pop.genome(i), cfg.objective.interval);
        ASSERT_EQ(pop.x[i], x);
        ASSERT_EQ(pop.raw[i], raw_objective(cfg.objective, x));
        ASSERT_EQ(pop.fitness[i], -pop.raw[i]);
    }
    cfg.threads = 8;
    Population copy = pop;
    std::fill(copy.raw.begin(), copy.raw.end(), 0.0);
    evaluate(copy, cfg);
    EXPECT_EQ(copy.raw, pop.raw);
}

TEST(StopConverged, Examples) {
    EXPECT_TRUE(stop_converged(std::vector<double>{7, 7, 7, 7}));
    EXPECT_FALSE(stop_converged(std::vector<double>{7, 7, 6.999}));
    EXPECT_TRUE(stop_converged(std::vector<double>{7, 7, 6.999}, 0.01));
}

TEST(StopConverged, IdenticalGenomes) {
    GaConfig cfg;
    Engine engine(cfg);
    Population pop = engine.initial_population();
    std::fill(pop.bits.begin(), pop.bits.end(), pop.bits[5]);
    engine.evaluate(pop);
    EXPECT_TRUE(stop_converged(pop));
}

TEST(StopConverged, EquivalentToMinEqualsMax) {
    RandomStream rng(42);
    for (int t = 0; t < 10000; ++t) {
        std::vector<double> f(1 + rng.below(100));
        const double base = rng.uniform() * 1e4 - 5e3;
        for (double& v : f) v = base;
        if (rng.below(2) == 0) f[rng.below(f.size())] = std::nextafter(base, 1e9);
        const auto [lo, hi] = std::minmax_element(f.begin(), f.end());
        ASSERT_EQ(stop_converged(f), *lo == *hi);
    }
}

TEST(Step, KeepsPopulationSizeForEveryCrossover) {
    for (CrossoverKind kind : kAllCrossovers) {
        for (std::size_t n : {2U, 3U, 17U, 64U}) {
            GaConfig cfg;
            cfg.crossover = kind;
            cfg.population = n;
            cfg.p_cross = 0.9;
            cfg.selection = SelectionKind::tournament(2);
            Engine engine(cfg);
            Population pop = engine.initial_population();
            for (int g = 0; g < 5; ++g) {
                engine.step(pop);
                ASSERT_EQ(pop.size(), n);
                ASSERT_EQ(pop.raw.size(), n);
                ASSERT_EQ(pop.fitness.size(), n);
                ASSERT_EQ(pop.generation, static_cast<std::size_t>(g + 1));
            }
        }
    }
}

TEST(Step, WithoutVariationChildrenAreParentCopies) {
    GaConfig cfg;
    cfg.p_cross = 0.0;
    cfg.p_mut = 0.0;
    cfg.elitism = false;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        cfg.seed = seed;
        Engine engine(cfg);
        Population pop = engine.initial_population();
        const std::vector<std::uint64_t> old = pop.bits;
        engine.step(pop);
        for (std::uint64_t b : pop.bits) {
            ASSERT_NE(std::find(old.begin(), old.end(), b), old.end());
        }
    }
}

TEST(Step, IdenticalPopulationIsAFixedPoint) {
    for (CrossoverKind kind : {CrossoverKind::OnePoint, CrossoverKind::OnePointMulti,
                               CrossoverKind::TwoPoint, CrossoverKind::ThreePoint,
                               CrossoverKind::UniformFixed, CrossoverKind::UniformRandom,
                               CrossoverKind::HalfUniform, CrossoverKind::ArithAnd,
                               CrossoverKind::ArithOr}) {
        GaConfig cfg;
        cfg.crossover = kind;
        cfg.p_mut = 0.0;
        cfg.p_cross = 1.0;
        Engine engine(cfg);
        Population pop = engine.initial_population();
        std::fill(pop.bits.begin(), pop.bits.end(), pop.bits[0]);
        engine.evaluate(pop);
        const auto before = pop.bits;
        engine.step(pop);
        EXPECT_EQ(pop.bits, before);
    }
}

TEST(Step, ElitismKeepsTheBestInSlotZero) {
    GaConfig cfg;
    cfg.p_mut = 0.2;
    Engine engine(cfg);
    Population pop = engine.initial_population();
    const std::size_t best = std::max_element(pop.fitness.begin(), pop.fitness.end()) - pop.fitness.begin();
    const std::uint64_t elite = pop.bits[best];
    engine.step(pop);
    EXPECT_EQ(pop.bits[0], elite);
}

TEST(Run, ElitismMakesBestMonotone) {
    for (SearchMode mode : {SearchMode::Maximum, SearchMode::Minimum}) {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            GaConfig cfg;
            cfg.objective.function = FunctionId::F2;
            cfg.objective.mode = mode;
            cfg.selection = SelectionKind::roulette();
            cfg.seed = seed;
            cfg.stop = StopRule::fixed(100);
            const RunReport r = run(cfg);
            ASSERT_EQ(r.history.size(), 101U);
            for (std::size_t g = 1; g < r.history.size(); ++g) {
                ASSERT_GE(r.history[g].best_fitness, r.history[g - 1].best_fitness)
                    << "seed " << seed << " generation " << g;
            }
        }
    }
}

TEST(Run, StatsAreOrdered) {
    const RunReport r = run(small_config(3));
    for (const GenerationStats& s : r.history) {
        EXPECT_LE(s.worst_fitness, s.mean_fitness);
        EXPECT_LE(s.mean_fitness, s.best_fitness);
    }
}

TEST(Run, FixedOneGeneration) {
    GaConfig cfg;
    cfg.stop = StopRule::fixed(1);
    const RunReport r = run(cfg);
    EXPECT_EQ(r.generations, 1U);
    ASSERT_EQ(r.history.size(), 2U);
    EXPECT_EQ(r.history[0].generation, 0U);
    EXPECT_EQ(r.history[1].generation, 1U);
}

TEST(Run, DeterministicForSeed) {
    expect_same_results(run(small_config(9)), run(small_config(9)));
    EXPECT_NE(run(small_config(9)).history, run(small_config(10)).history);
}

TEST(Run, ThreadCountInvariance) {
    for (CrossoverKind kind : {CrossoverKind::TwoPoint, CrossoverKind::OnePointMulti,
                               CrossoverKind::UniformRandom}) {
        for (const SelectionKind sel : {SelectionKind::roulette(), SelectionKind::tournament(4),
                                        SelectionKind::linear_ranking()}) {
            GaConfig cfg = small_config(5);
            cfg.crossover = kind;
            cfg.selection = sel;
            cfg.population = 101;
            cfg.threads = 1;
            const RunReport base = run(cfg);
            for (unsigned t : {2U, 8U}) {
                cfg.threads = t;
                const RunReport other = run(cfg);
                expect_same_results(base, other);
                EXPECT_EQ(other.threads, t);
            }
        }
    }
}

TEST(Run, ConvergedStopReportsOutcome) {
    GaConfig cfg;
    cfg.objective.function = FunctionId::F2;
    cfg.selection = SelectionKind::tournament(10);
    cfg.mutation_scope = MutationScope::PerGenome;
    cfg.stop = StopRule::converged(2000);
    const RunReport r = run(cfg);
    EXPECT_TRUE(r.converged);
    EXPECT_LT(r.generations, 2000U);
    EXPECT_EQ(r.history.back().best_fitness, r.history.back().worst_fitness);

    cfg.mutation_scope = MutationScope::PerBit;
    cfg.stop = StopRule::converged(20);
    const RunReport capped = run(cfg);
    EXPECT_FALSE(capped.converged);
    EXPECT_EQ(capped.generations, 20U);
}

TEST(Run, TimingFieldsAreConsistent) {
    GaConfig cfg = small_config();
    cfg.threads = 2;
    const RunReport r = run(cfg);
    EXPECT_GT(r.total_seconds, 0.0);
    EXPECT_GE(r.cumulative_seconds, 0.0);
    for (const PhaseTiming* p : {&r.phases.selection, &r.phases.crossover, &r.phases.mutation,
                                 &r.phases.evaluation}) {
        EXPECT_GE(p->wall_seconds, 0.0);
        EXPECT_GE(p->busy_seconds, 0.0);
    }
}

} // namespace
} // namespace ega
