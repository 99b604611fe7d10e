#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "extrema_ga/engine.hpp"

namespace ega::bench {

// ---------------------------------------------------------------------------
// Convergence experiments

struct ConvergenceRow {
    FunctionId function = FunctionId::F1;
    SearchMode mode = SearchMode::Maximum;
    CrossoverKind crossover = CrossoverKind::TwoPoint;
    SelectionKind selection{};
    std::uint64_t seed = 0;
    std::size_t generations = 0;
    bool converged = false;
    double best_x = 0.0;
    double best_raw = 0.0;
    bool correct = false;

    friend bool operator==(const ConvergenceRow&, const ConvergenceRow&) = default;
};

/// Aggregate over all seeds of one (function, mode, crossover, selection) cell.
struct CellSummary {
    FunctionId function = FunctionId::F1;
    SearchMode mode = SearchMode::Maximum;
    CrossoverKind crossover = CrossoverKind::TwoPoint;
    SelectionKind selection{};
    std::size_t runs = 0;
    double median_generations = 0.0;
    double converged_fraction = 0.0;
    double correct_fraction = 0.0;
    Extremum oracle{};
};

struct ConvergenceSuite {
    /// Objectives to search; interval and mode come from each entry.
    std::vector<ObjectiveSpec> objectives;
    std::vector<CrossoverKind> crossovers{kTableCrossovers.begin(), kTableCrossovers.end()};
    std::vector<SelectionKind> selections{SelectionKind::linear_ranking()};
    /// Population, probabilities, scaling, stop rule and threads; objective,
    /// crossover, selection and seed are overwritten per run.
    GaConfig base{};
    std::size_t seeds = 25;
    std::uint64_t first_seed = 1;
    double oracle_step = 1e-4;
    double tolerance = 1e-2;
};

struct ConvergenceReport {
    GaConfig base{};
    double tolerance = 0.0;
    std::vector<ConvergenceRow> rows;
    std::vector<CellSummary> cells;
};

/// Runs every cell `seeds` times. Rows are ordered objective, selection,
/// crossover, seed, matching the layout of the convergence tables.
ConvergenceReport run_convergence_suite(const ConvergenceSuite& suite);

/// Re-aggregates rows into cells (cell order follows first appearance).
std::vector<CellSummary> summarize(std::span<const ConvergenceRow> rows,
                                   std::span<const Extremum> oracles_by_row);

/// Fraction of rows with |best_raw - oracle| <= tol, oracle per function/mode.
double correct_fraction(std::span<const ConvergenceRow> rows, const ObjectiveSpec& spec,
                        const Extremum& oracle, double tol);

double median(std::vector<double> values);

// ---------------------------------------------------------------------------
// Phase profile

struct PhaseEntry {
    std::string phase;
    double seconds = 0.0;         ///< wall clock
    double thread_seconds = 0.0;  ///< busy time summed over workers
    double percent = 0.0;         ///< of total wall time
};

struct PhaseProfile {
    std::vector<PhaseEntry> entries;  ///< selection, crossover, mutation, evaluation, other
    double total_seconds = 0.0;
    unsigned threads = 1;
    std::size_t generations = 0;

    const PhaseEntry& largest() const;
    const PhaseEntry* find(std::string_view phase) const;
};

PhaseProfile run_phase_profile(const GaConfig& cfg);

/// Profiling workload at desk scale: F2 on [2, 1048578], maximum,
/// n = 16384, bit inversion 1%, two-point 50%, roulette with linear scaling,
/// 100 generations.
GaConfig profile_workload();

// ---------------------------------------------------------------------------
// Thread scaling

struct ScalingRow {
    unsigned threads = 1;
    bool pinned = false;
    double real_s = 0.0;
    double cumulative_s = 0.0;
    double best_x = 0.0;
    double best_raw = 0.0;
    std::size_t generations = 0;

    friend bool operator==(const ScalingRow&, const ScalingRow&) = default;
};

struct ScalingReport {
    std::vector<ScalingRow> rows;
    std::vector<std::string> warnings;
};

/// Runs the same workload once per thread count. Thread counts above the
/// number of logical CPUs only add a warning.
ScalingReport run_scaling(const GaConfig& cfg, std::span<const unsigned> thread_counts,
                          bool pin);

} // namespace ega::bench
