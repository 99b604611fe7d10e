#include "extrema_ga/report.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "extrema_ga/operator_names.hpp"

namespace ega::report {

using nlohmann::json;

namespace {

void check(std::ostream& out) {
    out.flush();
    if (!out) throw std::runtime_error("report sink is not writable");
}

std::string function_label(FunctionId f) { return f == FunctionId::F1 ? "Function I" : "Function II"; }

std::string mode_label(SearchMode m) { return m == SearchMode::Minimum ? "Minimum" : "Maximum"; }

FunctionId parse_function_id(const std::string& s) {
    if (s == "f1") return FunctionId::F1;
    if (s == "f2") return FunctionId::F2;
    throw std::runtime_error("unknown function id '" + s + "'");
}

SearchMode parse_mode(const std::string& s) {
    if (s == "min") return SearchMode::Minimum;
    if (s == "max") return SearchMode::Maximum;
    throw std::runtime_error("unknown search mode '" + s + "'");
}

void require_schema(const json& doc, std::string_view kind) {
    if (!doc.is_object() || doc.value("schema-version", 0) != kSchemaVersion ||
        doc.value("kind", std::string{}) != kind) {
        throw std::runtime_error(fmt::format("not a schema-version {} '{}' report", kSchemaVersion,
                                             kind));
    }
}

std::string percent(double p) { return fmt::format("{}%", p * 100.0); }

} // namespace

std::optional<Format> parse_format(std::string_view name) {
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    if (name == "table") return Format::Table;
    return std::nullopt;
}

std::string display_name(const SelectionKind& kind) {
    switch (kind.tag) {
    case SelectionKind::Tag::Roulette:
        return "Roulette";
    case SelectionKind::Tag::Tournament:
        return fmt::format("Tournament (tournament group: {})", kind.group_size);
    case SelectionKind::Tag::LinearRanking:
        return kind.pressure == 2.0 ? "Linear Ranking"
                                    : fmt::format("Linear Ranking (s = {})", kind.pressure);
    }
    return "?";
}

std::string display_name(CrossoverKind kind) {
    switch (kind) {
    case CrossoverKind::OnePoint:
        return "One-point crossover: One child";
    case CrossoverKind::OnePointMulti:
        return "One-point crossover: Max three children";
    case CrossoverKind::TwoPoint:
        return "Two-point crossover";
    case CrossoverKind::ThreePoint:
        return "Three-point crossover";
    case CrossoverKind::UniformFixed:
        return "Uniform crossover: Mixing Ratio = 0.5";
    case CrossoverKind::UniformRandom:
        return "Uniform crossover: Random Mixing Ratio";
    case CrossoverKind::HalfUniform:
        return "Half Uniform crossover";
    case CrossoverKind::ArithAnd:
        return "Arithmetic crossover: AND";
    case CrossoverKind::ArithOr:
        return "Arithmetic crossover: OR";
    case CrossoverKind::ArithNor:
        return "Arithmetic crossover: NOR";
    case CrossoverKind::ArithNand:
        return "Arithmetic crossover: NAND";
    case CrossoverKind::ArithXor:
        return "Arithmetic crossover: XOR";
    case CrossoverKind::ArithRandom:
        return "Arithmetic crossover: Random";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// JSON

json to_json(const GaConfig& cfg) {
    json j;
    j["function"] = std::string(to_string(cfg.objective.function));
    j["range"] = {cfg.objective.interval.lo, cfg.objective.interval.hi};
    j["mode"] = std::string(to_string(cfg.objective.mode));
    j["population"] = cfg.population;
    j["bits"] = cfg.length;
    j["crossover"] = std::string(to_string(cfg.crossover));
    j["p_cross"] = cfg.p_cross;
    j["p_mut"] = cfg.p_mut;
    j["mutation_scope"] = std::string(to_string(cfg.mutation_scope));
    j["selection"] = to_string(cfg.selection);
    j["scaling"] = cfg.scaling.tag == Scaling::Tag::None
                       ? std::string("none")
                       : fmt::format("linear:{}", cfg.scaling.c_mult);
    j["stop"] = fmt::format("{}:{}",
                            cfg.stop.tag == StopRule::Tag::Converged ? "converge" : "fixed",
                            cfg.stop.generations);
    j["converge_eps"] = cfg.converge_eps;
    j["seed"] = cfg.seed;
    j["threads"] = cfg.threads;
    j["pin"] = cfg.pin;
    j["elitism"] = cfg.elitism;
    return j;
}

json to_json(const GaConfig& cfg, const RunReport& run) {
    json j;
    j["schema-version"] = kSchemaVersion;
    j["kind"] = "run";
    j["config"] = to_json(cfg);
    j["generations"] = run.generations;
    j["converged"] = run.converged;
    j["best_x"] = run.best_x;
    j["best_raw"] = run.best_raw;
    j["real_s"] = run.total_seconds;
    j["cumulative_s"] = run.cumulative_seconds;
    j["threads"] = run.threads;
    j["pinned"] = run.pinned;
    json history = json::array();
    for (const auto& s : run.history) {
        history.push_back({{"generation", s.generation},
                           {"best", s.best_fitness},
                           {"mean", s.mean_fitness},
                           {"worst", s.worst_fitness},
                           {"best_x", s.best_x},
                           {"best_raw", s.best_raw}});
    }
    j["history"] = std::move(history);
    j["warnings"] = run.warnings;
    return j;
}

json to_json(const bench::ConvergenceReport& report) {
    json j;
    j["schema-version"] = kSchemaVersion;
    j["kind"] = "convergence";
    j["config"] = to_json(report.base);
    j["tolerance"] = report.tolerance;
    json rows = json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"function", std::string(to_string(r.function))},
                        {"mode", std::string(to_string(r.mode))},
                        {"crossover", std::string(to_string(r.crossover))},
                        {"selection", to_string(r.selection)},
                        {"seed", r.seed},
                        {"generations", r.generations},
                        {"converged", r.converged},
                        {"best_x", r.best_x},
                        {"best_raw", r.best_raw},
                        {"correct", r.correct}});
    }
    j["rows"] = std::move(rows);
    json cells = json::array();
    for (const auto& c : report.cells) {
        cells.push_back({{"function", std::string(to_string(c.function))},
                         {"mode", std::string(to_string(c.mode))},
                         {"crossover", std::string(to_string(c.crossover))},
                         {"selection", to_string(c.selection)},
                         {"runs", c.runs},
                         {"median_generations", c.median_generations},
                         {"converged_fraction", c.converged_fraction},
                         {"correct_fraction", c.correct_fraction},
                         {"oracle_x", c.oracle.x},
                         {"oracle_raw", c.oracle.value}});
    }
    j["cells"] = std::move(cells);
    return j;
}

json to_json(const bench::ScalingReport& report) {
    json j;
    j["schema-version"] = kSchemaVersion;
    j["kind"] = "scaling";
    json rows = json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"threads", r.threads},
                        {"pinned", r.pinned},
                        {"real_s", r.real_s},
                        {"cumulative_s", r.cumulative_s},
                        {"best_x", r.best_x},
                        {"best_raw", r.best_raw},
                        {"generations", r.generations}});
    }
    j["rows"] = std::move(rows);
    j["warnings"] = report.warnings;
    return j;
}

json to_json(const bench::PhaseProfile& profile) {
    json j;
    j["schema-version"] = kSchemaVersion;
    j["kind"] = "profile";
    j["total_s"] = profile.total_seconds;
    j["threads"] = profile.threads;
    j["generations"] = profile.generations;
    json phases = json::array();
    for (const auto& e : profile.entries) {
        phases.push_back({{"phase", e.phase},
                          {"seconds", e.seconds},
                          {"thread_seconds", e.thread_seconds},
                          {"percent", e.percent}});
    }
    j["phases"] = std::move(phases);
    return j;
}

std::vector<bench::ConvergenceRow> convergence_rows_from_json(const json& doc) {
    require_schema(doc, "convergence");
    std::vector<bench::ConvergenceRow> rows;
    for (const auto& r : doc.at("rows")) {
        bench::ConvergenceRow row;
        row.function = parse_function_id(r.at("function").get<std::string>());
        row.mode = parse_mode(r.at("mode").get<std::string>());
        const auto crossover = parse_crossover(r.at("crossover").get<std::string>());
        const auto selection = parse_selection(r.at("selection").get<std::string>());
        if (!crossover || !selection) throw std::runtime_error("unknown operator name in report");
        row.crossover = *crossover;
        row.selection = *selection;
        row.seed = r.at("seed").get<std::uint64_t>();
        row.generations = r.at("generations").get<std::size_t>();
        row.converged = r.at("converged").get<bool>();
        row.best_x = r.at("best_x").get<double>();
        row.best_raw = r.at("best_raw").get<double>();
        row.correct = r.at("correct").get<bool>();
        rows.push_back(row);
    }
    return rows;
}

bench::ScalingReport scaling_from_json(const json& doc) {
    require_schema(doc, "scaling");
    bench::ScalingReport report;
    for (const auto& r : doc.at("rows")) {
        bench::ScalingRow row;
        row.threads = r.at("threads").get<unsigned>();
        row.pinned = r.at("pinned").get<bool>();
        row.real_s = r.at("real_s").get<double>();
        row.cumulative_s = r.at("cumulative_s").get<double>();
        row.best_x = r.at("best_x").get<double>();
        row.best_raw = r.at("best_raw").get<double>();
        row.generations = r.at("generations").get<std::size_t>();
        report.rows.push_back(row);
    }
    report.warnings = doc.at("warnings").get<std::vector<std::string>>();
    return report;
}

bench::PhaseProfile profile_from_json(const json& doc) {
    require_schema(doc, "profile");
    bench::PhaseProfile profile;
    profile.total_seconds = doc.at("total_s").get<double>();
    profile.threads = doc.at("threads").get<unsigned>();
    profile.generations = doc.at("generations").get<std::size_t>();
    for (const auto& e : doc.at("phases")) {
        profile.entries.push_back({e.at("phase").get<std::string>(), e.at("seconds").get<double>(),
                                   e.at("thread_seconds").get<double>(),
                                   e.at("percent").get<double>()});
    }
    return profile;
}

// ---------------------------------------------------------------------------
// Writers

namespace {

void write_convergence_table(std::ostream& out, const bench::ConvergenceReport& report) {
    const GaConfig& base = report.base;
    fmt::print(out,
               "Population size: {} Mutation type: Bit inversion Probability of mutation: {} "
               "Probability of crossover: {}\n",
               base.population, percent(base.p_mut), percent(base.p_cross));
    fmt::print(out, "Correct when |best - oracle| <= {}\n\n", report.tolerance);

    // Group cells by objective; selections become paired columns.
    struct Section {
        FunctionId function;
        SearchMode mode;
        std::vector<SelectionKind> selections;
        std::vector<CrossoverKind> crossovers;
    };
    std::vector<Section> sections;
    std::map<std::tuple<int, int, std::string, int>, const bench::CellSummary*> lookup;
    for (const auto& c : report.cells) {
        auto it = std::find_if(sections.begin(), sections.end(), [&](const Section& s) {
            return s.function == c.function && s.mode == c.mode;
        });
        if (it == sections.end()) {
            sections.push_back({c.function, c.mode, {}, {}});
            it = sections.end() - 1;
        }
        if (std::find(it->selections.begin(), it->selections.end(), c.selection) ==
            it->selections.end()) {
            it->selections.push_back(c.selection);
        }
        if (std::find(it->crossovers.begin(), it->crossovers.end(), c.crossover) ==
            it->crossovers.end()) {
            it->crossovers.push_back(c.crossover);
        }
        lookup[{static_cast<int>(c.function), static_cast<int>(c.mode), to_string(c.selection),
                static_cast<int>(c.crossover)}] = &c;
    }

    for (const Section& s : sections) {
        fmt::print(out, "{} ({})\n", function_label(s.function), mode_label(s.mode));
        std::string sel;
        for (std::size_t i = 0; i < s.selections.size(); ++i) {
            std::string name = display_name(s.selections[i]);
            // "Tournament (tournament group: 10) / (tournament group: 2)"
            if (i > 0 && s.selections[i].tag == SelectionKind::Tag::Tournament &&
                s.selections[i - 1].tag == SelectionKind::Tag::Tournament) {
                name = name.substr(name.find('('));
            }
            sel += (i ? " / " : "") + name;
        }
        fmt::print(out, "Selection type: {}\n", sel);
        fmt::print(out, "{:<42} | {:<24} | {}\n", "Crossover type:", "Number of generations:",
                   "The best final result:");
        for (CrossoverKind x : s.crossovers) {
            std::string gens;
            std::string verdict;
            for (std::size_t i = 0; i < s.selections.size(); ++i) {
                const auto it = lookup.find({static_cast<int>(s.function), static_cast<int>(s.mode),
                                             to_string(s.selections[i]), static_cast<int>(x)});
                const std::string sep = i ? " / " : "";
                if (it == lookup.end()) {
                    gens += sep + "-";
                    verdict += sep + "-";
                    continue;
                }
                const bench::CellSummary& c = *it->second;
                gens += sep + fmt::format("{}", c.median_generations);
                verdict += sep + (c.correct_fraction >= 0.5 ? "Yes" : "No");
                if (c.runs > 1) verdict += fmt::format(" ({:.2f})", c.correct_fraction);
            }
            fmt::print(out, "{:<42} | {:<24} | {}\n", display_name(x), gens, verdict);
        }
        fmt::print(out, "\n");
    }
}

} // namespace

void write(std::ostream& out, const bench::ConvergenceReport& report, Format format) {
    switch (format) {
    case Format::Csv:
        out << kConvergenceHeader << '\n';
        for (const auto& r : report.rows) {
            fmt::print(out, "{},{},{},{},{},{},{},{},{},{}\n", to_string(r.function),
                       to_string(r.mode), to_string(r.crossover), to_string(r.selection), r.seed,
                       r.generations, r.converged ? 1 : 0, r.best_x, r.best_raw,
                       r.correct ? 1 : 0);
        }
        break;
    case Format::Json:
        out << to_json(report).dump(2) << '\n';
        break;
    case Format::Table:
        write_convergence_table(out, report);
        break;
    }
    check(out);
}

void write(std::ostream& out, const bench::ScalingReport& report, Format format) {
    switch (format) {
    case Format::Csv:
        out << kScalingHeader << '\n';
        for (const auto& r : report.rows) {
            fmt::print(out, "{},{},{},{}\n", r.threads, r.pinned ? 1 : 0, r.real_s, r.cumulative_s);
        }
        break;
    case Format::Json:
        out << to_json(report).dump(2) << '\n';
        break;
    case Format::Table:
        fmt::print(out, "{:>8} | {:>6} | {:>14} | {:>14} | {:>8}\n", "Threads", "Pinned",
                   "Real Time [s]", "System Time [s]", "Speedup");
        for (const auto& r : report.rows) {
            const double base = report.rows.front().real_s;
            fmt::print(out, "{:>8} | {:>6} | {:>14.4f} | {:>14.4f} | {:>8.2f}\n", r.threads,
                       r.pinned ? "yes" : "no", r.real_s, r.cumulative_s,
                       r.real_s > 0.0 ? base / r.real_s : 0.0);
        }
        break;
    }
    check(out);
}

void write(std::ostream& out, const bench::PhaseProfile& profile, Format format) {
    switch (format) {
    case Format::Csv:
        out << kProfileHeader << '\n';
        for (const auto& e : profile.entries) {
            fmt::print(out, "{},{},{}\n", e.phase, e.seconds, e.percent);
        }
        break;
    case Format::Json:
        out << to_json(profile).dump(2) << '\n';
        break;
    case Format::Table:
        fmt::print(out, "{:<12} | {:>12} | {:>14} | {:>8}\n", "Phase", "Seconds", "Thread seconds",
                   "Percent");
        for (const auto& e : profile.entries) {
            fmt::print(out, "{:<12} | {:>12.4f} | {:>14.4f} | {:>7.2f}%\n", e.phase, e.seconds,
                       e.thread_seconds, e.percent);
        }
        fmt::print(out, "{:<12} | {:>12.4f} | threads: {} generations: {}\n", "total",
                   profile.total_seconds, profile.threads, profile.generations);
        break;
    }
    check(out);
}

void write(std::ostream& out, const GaConfig& cfg, const RunReport& run, Format format) {
    switch (format) {
    case Format::Csv:
        out << "generation,best,mean,worst,best_x,best_raw\n";
        for (const auto& s : run.history) {
            fmt::print(out, "{},{},{},{},{},{}\n", s.generation, s.best_fitness, s.mean_fitness,
                       s.worst_fitness, s.best_x, s.best_raw);
        }
        break;
    case Format::Json:
        out << to_json(cfg, run).dump(2) << '\n';
        break;
    case Format::Table:
        fmt::print(out, "{} ({}) on [{}, {}]\n", function_label(cfg.objective.function),
                   mode_label(cfg.objective.mode), cfg.objective.interval.lo,
                   cfg.objective.interval.hi);
        fmt::print(out, "crossover {} | selection {} | population {} | seed {}\n",
                   to_string(cfg.crossover), to_string(cfg.selection), cfg.population, cfg.seed);
        fmt::print(out, "generations: {}  converged: {}\n", run.generations,
                   run.converged ? "yes" : "no");
        fmt::print(out, "best x: {}  best value: {}\n", run.best_x, run.best_raw);
        fmt::print(out, "real time: {:.4f} s  cumulative thread time: {:.4f} s\n",
                   run.total_seconds, run.cumulative_seconds);
        break;
    }
    check(out);
}

} // namespace ega::report
