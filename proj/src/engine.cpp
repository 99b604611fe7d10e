#include "extrema_ga/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <utility>

#include "extrema_ga/fitness.hpp"
#include "extrema_ga/kernels.hpp"
#include "extrema_ga/mutation.hpp"
#include "extrema_ga/random.hpp"

namespace ega {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void add(PhaseTiming& into, const PhaseTiming& t) {
    into.wall_seconds += t.wall_seconds;
    into.busy_seconds += t.busy_seconds;
}

void add_sequential(PhaseTiming& into, Clock::time_point start) {
    const double s = seconds_since(start);
    into.wall_seconds += s;
    into.busy_seconds += s;
}

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

} // namespace

void validate(const GaConfig& cfg) {
    auto fail = [](const std::string& what) { throw ConfigError(what); };
    const Interval& iv = cfg.objective.interval;
    if (!(iv.lo < iv.hi) || !std::isfinite(iv.lo) || !std::isfinite(iv.hi)) {
        fail("search interval requires finite lo < hi");
    }
    if (cfg.population < 2) fail("population size must be at least 2");
    if (cfg.length < 1 || cfg.length > Genome::kMaxLength) {
        fail("chromosome length must be in [1, " + std::to_string(Genome::kMaxLength) + "]");
    }
    if (cfg.length < min_length(cfg.crossover)) {
        fail("chromosome length " + std::to_string(cfg.length) + " too short for this crossover");
    }
    if (!is_probability(cfg.p_cross)) fail("crossover probability must be in [0, 1]");
    if (!is_probability(cfg.p_mut)) fail("mutation probability must be in [0, 1]");
    if (cfg.threads < 1) fail("thread count must be at least 1");
    if (cfg.stop.generations < 1) fail("stop rule needs at least one generation");
    if (cfg.scaling.tag == Scaling::Tag::Linear && !(cfg.scaling.c_mult > 1.0)) {
        fail("linear scaling multiplier must exceed 1");
    }
    if (!(cfg.converge_eps >= 0.0)) fail("convergence epsilon must be >= 0");
    switch (cfg.selection.tag) {
    case SelectionKind::Tag::Tournament:
        if (cfg.selection.group_size < 2 || cfg.selection.group_size > cfg.population) {
            fail("tournament group size must lie in [2, population size]");
        }
        break;
    case SelectionKind::Tag::LinearRanking:
        if (!(cfg.selection.pressure > 1.0 && cfg.selection.pressure <= 2.0)) {
            fail("linear ranking pressure must lie in (1, 2]");
        }
        break;
    case SelectionKind::Tag::Roulette:
        break;
    }
}

void Population::resize(std::size_t n) {
    bits.resize(n);
    x.resize(n);
    raw.resize(n);
    fitness.resize(n);
}

bool stop_converged(std::span<const double> fitness, double eps) {
    const auto mm = kernels::active().min_max(fitness);
    if (eps <= 0.0) return mm.min == mm.max;
    const double mean = pairwise_sum(fitness) / static_cast<double>(fitness.size());
    return mm.max - mean <= eps;
}

bool stop_converged(const Population& pop, double eps) { return stop_converged(pop.fitness, eps); }

GenerationStats compute_stats(const Population& pop) {
    const auto mm = kernels::active().min_max(pop.fitness);
    const std::size_t best = argbest(pop.fitness);
    GenerationStats s;
    s.generation = pop.generation;
    s.best_fitness = mm.max;
    s.worst_fitness = mm.min;
    const double mean = pairwise_sum(pop.fitness) / static_cast<double>(pop.size());
    s.mean_fitness = std::clamp(mean, mm.min, mm.max);
    s.best_x = pop.x[best];
    s.best_raw = pop.raw[best];
    return s;
}

Engine::Engine(GaConfig cfg) : cfg_(std::move(cfg)) {
    validate(cfg_);
    pool_ = std::make_unique<WorkerPool>(cfg_.threads, cfg_.pin);
}

void Engine::evaluate(Population& pop) {
    const ObjectiveSpec spec = cfg_.objective;
    const unsigned length = pop.length;
    const auto& k = kernels::active();
    parallel(phases_.evaluation, pop.size(), [&](std::size_t b, std::size_t e, unsigned) {
    const std::size_t n = e - b;
    k.decode(std::span<const std::uint64_t>(pop.bits).subspan(b, n), length, spec.interval,
             std::span<double>(pop.x).subspan(b, n));
    for (std::size_t i = b; i < e; ++i) pop.raw[i] = eval_function(spec.function, pop.x[i]);
    adjust_fitness_into(std::span<const double>(pop.raw).subspan(b, n), spec.mode,
                        std::span<double>(pop.fitness).subspan(b, n));
});
}

void Engine::parallel(PhaseTiming& phase, std::size_t count, const WorkerPool::RangeFn& fn) {
const PhaseTiming t = pool_->parallel_for(count, fn);
add(phase, t);
parallel_wall_ += t.wall_seconds;
parallel_busy_ += t.busy_seconds;
}

Population Engine::initial_population() {
Population pop;
pop.length = cfg_.length;
pop.generation = 0;
pop.resize(cfg_.population);
PhaseTiming init;
parallel(init, pop.size(), [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t i = b; i < e; ++i) {
        RandomStream rng(cfg_.seed, 0, StreamPhase::Init, i);
        pop.bits[i] = random_genome(rng, cfg_.length).value();
    }
});
evaluate(pop);
return pop;
}

void Engine::selection_fitness(const Population& pop) {
sel_fitness_.resize(pop.size());
if (cfg_.scaling.tag == Scaling::Tag::Linear) {
    linear_scale_into(pop.fitness, cfg_.scaling.c_mult, sel_fitness_);
} else if (cfg_.selection.tag == SelectionKind::Tag::Roulette) {
    // Unscaled roulette still needs non-negative weights: shift so the worst sits on zero.
    const auto mm = kernels::active().min_max(pop.fitness);
    kernels::active().affine_clamp(pop.fitness, 1.0, -mm.min, sel_fitness_);
} else {
    std::copy(pop.fitness.begin(), pop.fitness.end(), sel_fitness_.begin());
}
}

GenerationStats Engine::step(Population& pop) {
const std::size_t n = pop.size();
const std::size_t gen = pop.generation + 1;
const std::uint64_t seed = cfg_.seed;

// Selection fitness and per-generation wheel.
auto start = Clock::now();
selection_fitness(pop);
const Selector selector(cfg_.selection, sel_fitness_);
add_sequential(phases_.selection, start);

// Breeding plan: how many children each parent pair contributes. The coin
// and child count come from the pair's crossover stream, which the
// crossover phase replays.
start = Clock::now();
plan_.clear();
std::size_t collected = 0;
for (std::size_t j = 0; collected < n; ++j) {
    RandomStream rng(seed, gen, StreamPhase::Crossover, j);
    PairPlan p;
    p.crossed = rng.bernoulli(cfg_.p_cross);
    unsigned count = 2;
    if (p.crossed) {
        count = cfg_.crossover == CrossoverKind::OnePointMulti ? multi_child_count(rng) : 1;
    }
    p.offset = collected;
    p.produced = static_cast<unsigned>(std::min<std::size_t>(count, n - collected));
    collected += p.produced;
    plan_.push_back(p);
}
add_sequential(phases_.crossover, start);
const std::size_t pairs = plan_.size();

parents_.resize(2 * pairs);
    parallel(phases_.selection, pairs, [&](std::size_t b, std::size_t e, unsigned) {
        for (std::size_t j = b; j < e; ++j) {
            RandomStream rng(seed, gen, StreamPhase::Select, j);
            std::size_t first = selector.draw(rng);
            std::size_t second = selector.draw(rng);
            if (rng.next_u32() & 1U) std::swap(first, second);
            parents_[2 * j] = first;
            parents_[2 * j + 1] = second;
        }
    });

    next_.length = pop.length;
    next_.generation = gen;
    next_.resize(n);
    parallel(phases_.crossover, pairs, [&](std::size_t b, std::size_t e, unsigned) {
        for (std::size_t j = b; j < e; ++j) {
            const PairPlan& p = plan_[j];
            const std::size_t a = parents_[2 * j];
            const std::size_t c = parents_[2 * j + 1];
            if (!p.crossed) {
                next_.bits[p.offset] = pop.bits[a];
                if (p.produced > 1) next_.bits[p.offset + 1] = pop.bits[c];
                continue;
            }
            RandomStream rng(seed, gen, StreamPhase::Crossover, j);
            (void)rng.bernoulli(cfg_.p_cross);  // replay the plan's coin
            const Offspring kids = apply_crossover(cfg_.crossover, pop.genome(a), pop.genome(c), rng);
            for (unsigned k = 0; k < p.produced; ++k) {
                next_.bits[p.offset + k] = kids.children[k].value();
            }
        }
    });

    const std::size_t elite = cfg_.elitism ? argbest(pop.fitness) : n;
    parallel(phases_.mutation, n, [&](std::size_t b, std::size_t e, unsigned) {
        for (std::size_t i = b; i < e; ++i) {
            if (i == 0 && elite < n) {
                next_.bits[0] = pop.bits[elite];
                continue;
            }
            if (cfg_.p_mut == 0.0) continue;
            RandomStream rng(seed, gen, StreamPhase::Mutation, i);
            const Genome g = next_.genome(i);
            next_.bits[i] = (cfg_.mutation_scope == MutationScope::PerBit
                                 ? mutate_bit_inversion(g, cfg_.p_mut, rng)
                                 : mutate_single_bit(g, cfg_.p_mut, rng))
                                .value();
        }
    });

    evaluate(next_);
    std::swap(pop, next_);
    return compute_stats(pop);
}

RunReport Engine::run() {
    const auto start = Clock::now();
    phases_ = {};
    parallel_wall_ = 0.0;
    parallel_busy_ = 0.0;
    RunReport report;
    Population pop = initial_population();
    report.history.push_back(compute_stats(pop));

    const bool until_converged = cfg_.stop.tag == StopRule::Tag::Converged;
    bool converged = stop_converged(pop, cfg_.converge_eps);
    while (report.generations < cfg_.stop.generations && !(until_converged && converged)) {
        report.history.push_back(step(pop));
        ++report.generations;
        converged = stop_converged(pop, cfg_.converge_eps);
    }

    const GenerationStats& last = report.history.back();
    report.best_x = last.best_x;
    report.best_raw = last.best_raw;
    report.converged = converged;
    report.phases = phases_;
    report.total_seconds = seconds_since(start);
    // Sequential sections keep exactly one thread busy.
    report.cumulative_seconds = report.total_seconds - parallel_wall_ + parallel_busy_;
    report.threads = pool_->size();
    report.pinned = pool_->pinned();
    report.warnings = pool_->warnings();
    return report;
}

void evaluate(Population& pop, const GaConfig& cfg) { Engine(cfg).evaluate(pop); }

GenerationStats step_generation(Population& pop, const GaConfig& cfg) {
    Engine engine(cfg);
    return engine.step(pop);
}

RunReport run(const GaConfig& cfg) { return Engine(cfg).run(); }

std::string_view to_string(MutationScope scope) noexcept {
    return scope == MutationScope::PerBit ? "bit" : "genome";
}

} // namespace ega
