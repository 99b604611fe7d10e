#include "extrema_ga/bench.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "extrema_ga/affinity.hpp"

namespace ega::bench {

double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) return values[mid];
    return 0.5 * (values[mid - 1] + values[mid]);
}

double correct_fraction(std::span<const ConvergenceRow> rows, const ObjectiveSpec& spec,
                        const Extremum& oracle, double tol) {
    std::size_t total = 0;
    std::size_t hits = 0;
    for (const auto& r : rows) {
        if (r.function != spec.function || r.mode != spec.mode) continue;
        ++total;
        if (std::abs(r.best_raw - oracle.value) <= tol) ++hits;
    }
    return total == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(total);
}

std::vector<CellSummary> summarize(std::span<const ConvergenceRow> rows,
                                   std::span<const Extremum> oracles_by_row) {
    std::vector<CellSummary> cells;
    std::vector<std::vector<double>> generations;
    auto same_cell = [](const CellSummary& c, const ConvergenceRow& r) {
        return c.function == r.function && c.mode == r.mode && c.crossover == r.crossover &&
               c.selection == r.selection;
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ConvergenceRow& r = rows[i];
        auto it = std::find_if(cells.begin(), cells.end(),
                               [&](const CellSummary& c) { return same_cell(c, r); });
        if (it == cells.end()) {
            CellSummary c;
            c.function = r.function;
            c.mode = r.mode;
            c.crossover = r.crossover;
            c.selection = r.selection;
            if (i < oracles_by_row.size()) c.oracle = oracles_by_row[i];
            cells.push_back(c);
            generations.emplace_back();
            it = cells.end() - 1;
        }
        const auto idx = static_cast<std::size_t>(it - cells.begin());
        ++it->runs;
        it->converged_fraction += r.converged ? 1.0 : 0.0;
        it->correct_fraction += r.correct ? 1.0 : 0.0;
        generations[idx].push_back(static_cast<double>(r.generations));
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto runs = static_cast<double>(cells[i].runs);
        cells[i].converged_fraction /= runs;
        cells[i].correct_fraction /= runs;
        cells[i].median_generations = median(generations[i]);
    }
    return cells;
}

ConvergenceReport run_convergence_suite(const ConvergenceSuite& suite) {
    if (suite.seeds < 1) throw std::invalid_argument("convergence suite needs at least one seed");
    if (!(suite.tolerance >= 0.0)) throw std::invalid_argument("tolerance must be >= 0");
    ConvergenceReport report;
    report.base = suite.base;
    report.tolerance = suite.tolerance;
    std::vector<Extremum> oracle_by_row;

    for (const ObjectiveSpec& spec : suite.objectives) {
        const Extremum oracle = oracle_extremum(spec, suite.oracle_step);
        for (const SelectionKind& selection : suite.selections) {
            for (CrossoverKind crossover : suite.crossovers) {
                GaConfig cfg = suite.base;
                cfg.objective = spec;
                cfg.crossover = crossover;
                cfg.selection = selection;
                for (std::size_t s = 0; s < suite.seeds; ++s) {
                    cfg.seed = suite.first_seed + s;
                    const RunReport run = Engine(cfg).run();
                    ConvergenceRow row;
                    row.function = spec.function;
                    row.mode = spec.mode;
                    row.crossover = crossover;
                    row.selection = selection;
                    row.seed = cfg.seed;
                    row.generations = run.generations;
                    row.converged = run.converged;
                    row.best_x = run.best_x;
                    row.best_raw = run.best_raw;
                    row.correct = std::abs(run.best_raw - oracle.value) <= suite.tolerance;
                    report.rows.push_back(row);
                    oracle_by_row.push_back(oracle);
                }
            }
        }
    }
    report.cells = summarize(report.rows, oracle_by_row);
    return report;
}

const PhaseEntry& PhaseProfile::largest() const {
    if (entries.empty()) throw std::logic_error("empty phase profile");
    return *std::max_element(entries.begin(), entries.end(),
                             [](const PhaseEntry& a, const PhaseEntry& b) {
                                 return a.seconds < b.seconds;
                             });
}

const PhaseEntry* PhaseProfile::find(std::string_view phase) const {
    for (const auto& e : entries) {
        if (e.phase == phase) return &e;
    }
    return nullptr;
}

PhaseProfile run_phase_profile(const GaConfig& cfg) {
    const RunReport run = Engine(cfg).run();
    PhaseProfile profile;
    profile.total_seconds = run.total_seconds;
    profile.threads = run.threads;
    profile.generations = run.generations;
    const PhaseTimes& p = run.phases;
    const std::pair<const char*, PhaseTiming> named[] = {
        {"selection", p.selection},
        {"crossover", p.crossover},
        {"mutation", p.mutation},
        {"evaluation", p.evaluation},
    };
    double accounted = 0.0;
    double accounted_busy = 0.0;
    for (const auto& [name, t] : named) {
        profile.entries.push_back({name, t.wall_seconds, t.busy_seconds, 0.0});
        accounted += t.wall_seconds;
        accounted_busy += t.busy_seconds;
    }
    const double other = std::max(0.0, run.total_seconds - accounted);
    profile.entries.push_back(
        {"other", other, std::max(0.0, run.cumulative_seconds - accounted_busy), 0.0});
    const double total = accounted + other;
    for (auto& e : profile.entries) e.percent = total > 0.0 ? 100.0 * e.seconds / total : 0.0;
    return profile;
}

GaConfig profile_workload() {
    GaConfig cfg;
    cfg.objective = {FunctionId::F2, Interval{2.0, 1048578.0}, SearchMode::Maximum};
    cfg.population = 16384;
    cfg.length = 32;
    cfg.crossover = CrossoverKind::TwoPoint;
    cfg.p_cross = 0.5;
    cfg.p_mut = 0.01;
    cfg.selection = SelectionKind::roulette();
    cfg.scaling = Scaling::linear();
    cfg.stop = StopRule::fixed(100);
    return cfg;
}

ScalingReport run_scaling(const GaConfig& cfg, std::span<const unsigned> thread_counts,
                          bool pin) {
    if (thread_counts.empty()) throw std::invalid_argument("thread list must not be empty");
    ScalingReport report;
    const unsigned cpus = affinity::hardware_threads();
    for (unsigned t : thread_counts) {
        if (t < 1) throw std::invalid_argument("thread counts must be >= 1");
        if (t > cpus) {
            report.warnings.push_back(std::to_string(t) + " threads exceed the " +
                                      std::to_string(cpus) + " available logical CPUs");
        }
        GaConfig run_cfg = cfg;
        run_cfg.threads = t;
        run_cfg.pin = pin;
        const RunReport run = Engine(run_cfg).run();
        for (const auto& w : run.warnings) report.warnings.push_back(w);
        report.rows.push_back({t, run.pinned, run.total_seconds,
                               std::max(run.cumulative_seconds, 0.0), run.best_x, run.best_raw,
                               run.generations});
    }
    return report;
}

} // namespace ega::bench
