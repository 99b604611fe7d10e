#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "extrema_ga/crossover.hpp"
#include "extrema_ga/genome.hpp"
#include "extrema_ga/objectives.hpp"
#include "extrema_ga/selection.hpp"
#include "extrema_ga/worker_pool.hpp"

namespace ega {

struct StopRule {
    enum class Tag { FixedGenerations, Converged };

    Tag tag = Tag::Converged;
    std::size_t generations = 1000;  ///< G for FixedGenerations, the safety bound for Converged.

    static StopRule fixed(std::size_t g) { return {Tag::FixedGenerations, g}; }
    static StopRule converged(std::size_t max_g) { return {Tag::Converged, max_g}; }

    friend bool operator==(const StopRule&, const StopRule&) = default;
};

struct Scaling {
    enum class Tag { None, Linear };

    Tag tag = Tag::Linear;
    double c_mult = 2.0;

    static Scaling none() { return {Tag::None, 2.0}; }
    static Scaling linear(double c = 2.0) { return {Tag::Linear, c}; }

    friend bool operator==(const Scaling&, const Scaling&) = default;
};

/// How p_mut is applied to each child.
enum class MutationScope {
    PerBit,     ///< every bit flips with probability p_mut
    PerGenome,  ///< with probability p_mut, one uniformly chosen bit flips
};

class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Defaults follow the pop-64 convergence experiments: 1% bit-inversion
/// mutation, 50% crossover, linear ranking, two-point crossover.
struct GaConfig {
    ObjectiveSpec objective{};
    std::size_t population = 64;
    unsigned length = 32;
    CrossoverKind crossover = CrossoverKind::TwoPoint;
    double p_cross = 0.5;
    double p_mut = 0.01;
    MutationScope mutation_scope = MutationScope::PerBit;
    SelectionKind selection = SelectionKind::linear_ranking();
    Scaling scaling = Scaling::linear();
    StopRule stop = StopRule::converged(1000);
    /// 0 means exact convergence (all fitness values identical).
    double converge_eps = 0.0;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool pin = false;
    bool elitism = true;
};

/// Throws ConfigError describing the first violated constraint.
void validate(const GaConfig& cfg);

/// Structure-of-arrays population: genome words plus cached phenotype, raw
/// objective and mode-adjusted fitness, all of length n.
struct Population {
    unsigned length = 0;
    std::size_t generation = 0;
    std::vector<std::uint64_t> bits;
    std::vector<double> x;
    std::vector<double> raw;
    std::vector<double> fitness;

    std::size_t size() const noexcept { return bits.size(); }
    Genome genome(std::size_t i) const { return Genome::from_value(bits[i], length); }
    void resize(std::size_t n);
};

struct GenerationStats {
    std::size_t generation = 0;
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
    double worst_fitness = 0.0;
    double best_x = 0.0;
    double best_raw = 0.0;

    friend bool operator==(const GenerationStats&, const GenerationStats&) = default;
};

struct PhaseTimes {
    PhaseTiming selection;
    PhaseTiming crossover;
    PhaseTiming mutation;
    PhaseTiming evaluation;
};

struct RunReport {
    std::vector<GenerationStats> history;  ///< generation 0 first
    double best_x = 0.0;
    double best_raw = 0.0;
    std::size_t generations = 0;           ///< variation steps executed
    bool converged = false;
    PhaseTimes phases;
    double total_seconds = 0.0;            ///< wall time of the whole run
    double cumulative_seconds = 0.0;       ///< busy time summed over workers
    unsigned threads = 1;
    bool pinned = false;
    std::vector<std::string> warnings;
};

/// True when every adjusted fitness value is identical, i.e. the population
/// mean equals the best value. With eps > 0: best - mean <= eps.
bool stop_converged(std::span<const double> fitness, double eps = 0.0);
bool stop_converged(const Population& pop, double eps = 0.0);

GenerationStats compute_stats(const Population& pop);

/// Runs the generational loop for one configuration. Owns its worker pool.
class Engine {
  public:
    explicit Engine(GaConfig cfg);

    const GaConfig& config() const noexcept { return cfg_; }
    WorkerPool& pool() noexcept { return *pool_; }

    /// Seeded random generation-0 population, evaluated.
    Population initial_population();

    /// Fills x, raw and fitness from the genome words.
    void evaluate(Population& pop);

    /// One full generation: selection, crossover, mutation, elitism, evaluation.
    GenerationStats step(Population& pop);

    RunReport run();

    const PhaseTimes& phase_times() const noexcept { return phases_; }

  private:
    struct PairPlan {
        std::size_t offset = 0;
        unsigned produced = 0;
        bool crossed = false;
    };

    void selection_fitness(const Population& pop);
    void parallel(PhaseTiming& phase, std::size_t count, const WorkerPool::RangeFn& fn);

    GaConfig cfg_;
    std::unique_ptr<WorkerPool> pool_;
    PhaseTimes phases_;
    double parallel_wall_ = 0.0;
    double parallel_busy_ = 0.0;

    std::vector<double> sel_fitness_;
    std::vector<PairPlan> plan_;
    std::vector<std::size_t> parents_;
    Population next_;
};

/// Evaluates pop in place with a temporary pool of cfg.threads workers.
void evaluate(Population& pop, const GaConfig& cfg);

/// One generation with a temporary engine; see Engine::step.
GenerationStats step_generation(Population& pop, const GaConfig& cfg);

RunReport run(const GaConfig& cfg);

std::string_view to_string(MutationScope scope) noexcept;

} // namespace ega
