#include "extrema_ga/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "CLI11.hpp"
#include "extrema_ga/bench.hpp"
#include "extrema_ga/engine.hpp"
#include "extrema_ga/kernels.hpp"
#include "extrema_ga/operator_names.hpp"
#include "extrema_ga/report.hpp"

namespace ega::cli {

namespace {

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& items) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
    return s;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
    const std::string s(text);
    std::size_t used = 0;
    try {
        T value;
        if constexpr (std::is_floating_point_v<T>) {
            value = static_cast<T>(std::stod(s, &used));
        } else {
            if (!s.empty() && s[0] == '-') throw std::invalid_argument("negative");
            value = static_cast<T>(std::stoull(s, &used));
        }
        if (used == s.size()) return value;
    } catch (const std::exception&) {
    }
    throw UsageError(fmt::format("invalid {} '{}'", what, text));
}

/// Raw flag values; converted into configs once the subcommand is known.
struct Flags {
    std::string function;
    std::vector<double> range;
    std::string mode;
    std::optional<std::size_t> pop;
    std::optional<unsigned> bits;
    std::string crossover;
    std::optional<double> p_cross;
    std::optional<double> p_mut;
    std::string mutation_scope;
    std::string selection;
    std::string scaling;
    std::string stop;
    std::optional<double> converge_eps;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
    bool pin = false;
    bool no_elitism = false;
    std::size_t seeds = 25;
    double oracle_step = 1e-4;
    double tol = 1e-2;
    std::string thread_list = "1,2,4,8";
    std::string format;
    std::string out;
    std::string isa;
};

FunctionId parse_function(const std::string& s) {
    if (s == "f1") return FunctionId::F1;
    if (s == "f2") return FunctionId::F2;
    throw UsageError(fmt::format("unknown function '{}'; expected f1 or f2", s));
}

SearchMode parse_mode(const std::string& s) {
    if (s == "min") return SearchMode::Minimum;
    if (s == "max") return SearchMode::Maximum;
    throw UsageError(fmt::format("unknown mode '{}'; expected min or max", s));
}

CrossoverKind parse_crossover_or_throw(const std::string& s) {
    if (auto k = parse_crossover(s)) return *k;
    throw UsageError(fmt::format("unknown crossover '{}'; valid names: {}", s,
                                 join(crossover_names())));
}

SelectionKind parse_selection_or_throw(const std::string& s) {
    if (auto k = parse_selection(s)) return *k;
    throw UsageError(fmt::format("unknown selection '{}'; valid names: {}", s,
                                 join(selection_names())));
}

Scaling parse_scaling(const std::string& s) {
    if (s == "none") return Scaling::none();
    if (s == "linear") return Scaling::linear();
    if (s.rfind("linear:", 0) == 0) {
        const double c = parse_number<double>(std::string_view(s).substr(7), "scaling multiplier");
        if (!(c > 1.0)) throw UsageError("linear scaling multiplier must exceed 1");
        return Scaling::linear(c);
    }
    throw UsageError(fmt::format("unknown scaling '{}'; expected none, linear or linear:C", s));
}

StopRule parse_stop(const std::string& s) {
    const auto colon = s.find(':');
    const std::string head = s.substr(0, colon);
    if (colon == std::string::npos || (head != "fixed" && head != "converge")) {
        throw UsageError(fmt::format("unknown stop rule '{}'; expected fixed:G or converge:MAXG", s));
    }
    const auto g = parse_number<std::size_t>(std::string_view(s).substr(colon + 1), "generation count");
    if (g < 1) throw UsageError("stop rule needs at least one generation");
    return head == "fixed" ? StopRule::fixed(g) : StopRule::converged(g);
}

MutationScope parse_scope(const std::string& s) {
    if (s == "bit") return MutationScope::PerBit;
    if (s == "genome") return MutationScope::PerGenome;
    throw UsageError(fmt::format("unknown mutation scope '{}'; expected bit or genome", s));
}

unsigned default_threads() {
    if (const char* env = std::getenv("EXTREMA_GA_THREADS")) {
        const auto t = parse_number<unsigned>(env, "EXTREMA_GA_THREADS value");
        if (t >= 1) return t;
        throw UsageError("EXTREMA_GA_THREADS must be at least 1");
    }
    return 1;
}

/// Applies the flags on top of a subcommand-specific base configuration.
GaConfig build_config(const Flags& f, GaConfig cfg) {
    if (!f.function.empty()) cfg.objective.function = parse_function(f.function);
    if (!f.range.empty()) {
        if (!(f.range[0] < f.range[1])) throw UsageError("--range requires LO < HI");
        cfg.objective.interval = Interval{f.range[0], f.range[1]};
    }
    if (!f.mode.empty()) cfg.objective.mode = parse_mode(f.mode);
    if (f.pop) cfg.population = *f.pop;
    if (f.bits) cfg.length = *f.bits;
    if (!f.crossover.empty() && f.crossover.find(',') == std::string::npos) {
        cfg.crossover = parse_crossover_or_throw(f.crossover);
    }
    if (f.p_cross) cfg.p_cross = *f.p_cross;
    if (f.p_mut) cfg.p_mut = *f.p_mut;
    if (!f.mutation_scope.empty()) cfg.mutation_scope = parse_scope(f.mutation_scope);
    if (!f.selection.empty() && f.selection.find(',') == std::string::npos) {
        cfg.selection = parse_selection_or_throw(f.selection);
    }
    if (!f.scaling.empty()) cfg.scaling = parse_scaling(f.scaling);
    if (!f.stop.empty()) cfg.stop = parse_stop(f.stop);
    if (f.converge_eps) cfg.converge_eps = *f.converge_eps;
    if (f.seed) cfg.seed = *f.seed;
    cfg.threads = f.threads ? *f.threads : default_threads();
    cfg.pin = f.pin;
    if (f.no_elitism) cfg.elitism = false;
    try {
        validate(cfg);
    } catch (const ConfigError& e) {
        throw UsageError(e.what());
    }
    return cfg;
}

GaConfig table_defaults() {
    GaConfig cfg;
    cfg.objective = {FunctionId::F1, Interval{2.0, 130.0}, SearchMode::Maximum};
    return cfg;
}

report::Format pick_format(const Flags& f, report::Format fallback) {
    if (f.format.empty()) return fallback;
    if (auto fmt = report::parse_format(f.format)) return *fmt;
    throw UsageError(fmt::format("unknown format '{}'; expected csv, json or table", f.format));
}

void log_warnings(std::ostream& err, const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) fmt::print(err, "warning: {}\n", w);
}

class Sink {
  public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::runtime_error("cannot open output file '" + path + "'");
            stream_ = file_.get();
        }
    }
    std::ostream& get() { return *stream_; }

  private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

int cmd_run(const Flags& f, std::ostream& out, std::ostream& err) {
    const GaConfig cfg = build_config(f, table_defaults());
    const report::Format format = pick_format(f, report::Format::Json);
    const RunReport run = Engine(cfg).run();
    log_warnings(err, run.warnings);
    Sink sink(f.out, out);
    report::write(sink.get(), cfg, run, format);
    return kExitOk;
}

int cmd_convergence(const Flags& f, std::ostream& out, std::ostream& err) {
    bench::ConvergenceSuite suite;
    suite.base = build_config(f, table_defaults());
    const FunctionId function = suite.base.objective.function;
    const Interval interval = suite.base.objective.interval;
    if (f.mode.empty()) {
        suite.objectives = {{function, interval, SearchMode::Minimum},
                            {function, interval, SearchMode::Maximum}};
    } else {
        suite.objectives = {suite.base.objective};
    }
    if (!f.crossover.empty()) {
        suite.crossovers.clear();
        for (const auto& name : split(f.crossover, ',')) {
            suite.crossovers.push_back(parse_crossover_or_throw(name));
        }
    }
    if (!f.selection.empty()) {
        suite.selections.clear();
        for (const auto& name : split(f.selection, ',')) {
            suite.selections.push_back(parse_selection_or_throw(name));
        }
    } else if (function == FunctionId::F2) {
        suite.selections = {SelectionKind::linear_ranking(), SelectionKind::roulette(),
                            SelectionKind::tournament(10), SelectionKind::tournament(2)};
    }
    for (const auto& s : suite.selections) {
        if (s.tag == SelectionKind::Tag::Tournament && s.group_size > suite.base.population) {
            throw UsageError("tournament group size exceeds population size");
        }
    }
    for (CrossoverKind x : suite.crossovers) {
        if (suite.base.length < min_length(x)) throw UsageError("chromosome too short for crossover");
    }
    if (f.seeds < 1) throw UsageError("--seeds must be at least 1");
    if (!(f.oracle_step > 0.0) || f.oracle_step > interval.width()) {
        throw UsageError("--oracle-step must be in (0, HI - LO]");
    }
    if (!(f.tol >= 0.0)) throw UsageError("--tol must be >= 0");
    suite.seeds = f.seeds;
    suite.first_seed = f.seed.value_or(1);
    suite.oracle_step = f.oracle_step;
    suite.tolerance = f.tol;
    const report::Format format = pick_format(f, report::Format::Table);
    const bench::ConvergenceReport result = bench::run_convergence_suite(suite);
    (void)err;
    Sink sink(f.out, out);
    report::write(sink.get(), result, format);
    return kExitOk;
}

int cmd_profile(const Flags& f, std::ostream& out, std::ostream& err) {
    const GaConfig cfg = build_config(f, bench::profile_workload());
    const report::Format format = pick_format(f, report::Format::Table);
    const bench::PhaseProfile profile = bench::run_phase_profile(cfg);
    (void)err;
    Sink sink(f.out, out);
    report::write(sink.get(), profile, format);
    return kExitOk;
}

int cmd_scaling(const Flags& f, std::ostream& out, std::ostream& err) {
    const GaConfig cfg = build_config(f, bench::profile_workload());
    std::vector<unsigned> threads;
    for (const auto& t : split(f.thread_list, ',')) {
        const auto v = parse_number<unsigned>(t, "thread count");
        if (v < 1) throw UsageError("thread counts must be at least 1");
        threads.push_back(v);
    }
    if (threads.empty()) throw UsageError("--thread-list must name at least one thread count");
    const report::Format format = pick_format(f, report::Format::Table);
    const bench::ScalingReport result = bench::run_scaling(cfg, threads, f.pin);
    log_warnings(err, result.warnings);
    Sink sink(f.out, out);
    report::write(sink.get(), result, format);
    return kExitOk;
}

void add_ga_flags(CLI::App& cmd, Flags& f) {
    cmd.add_option("--function", f.function, "Objective: f1 | f2 (default f1; f2 for profile/scaling)");
    cmd.add_option("--range", f.range, "Search interval LO HI (default 2 130; 2 1048578 for profile/scaling)")
        ->expected(2);
    cmd.add_option("--mode", f.mode, "min | max (default max; both for convergence)");
    cmd.add_option("--pop", f.pop, "Population size (default 64; 16384 for profile/scaling)");
    cmd.add_option("--bits", f.bits, "Chromosome length in bits (default 32)");
    cmd.add_option("--crossover", f.crossover,
                   "Crossover operator (default two-point; convergence: comma list, default all twelve)");
    cmd.add_option("--p-cross", f.p_cross, "Crossover probability (default 0.5)");
    cmd.add_option("--p-mut", f.p_mut, "Bit-inversion mutation probability (default 0.01)");
    cmd.add_option("--mutation-scope", f.mutation_scope,
                   "bit: p-mut per bit | genome: p-mut per child, one bit (default bit)");
    cmd.add_option("--selection", f.selection,
                   "roulette | tournament:K | linear-ranking (default linear-ranking; roulette for "
                   "profile/scaling; convergence: comma list)");
    cmd.add_option("--scaling", f.scaling, "none | linear[:C] (default linear:2)");
    cmd.add_option("--stop", f.stop,
                   "fixed:G | converge:MAXG (default converge:1000; fixed:100 for profile/scaling)");
    cmd.add_option("--converge-eps", f.converge_eps, "Convergence tolerance on best - mean (default 0)");
    cmd.add_option("--seed", f.seed, "Random seed (default 1; first seed for convergence)");
    cmd.add_option("--threads", f.threads, "Worker threads (default $EXTREMA_GA_THREADS or 1)");
    cmd.add_flag("--pin", f.pin, "Pin workers to distinct CPUs (best effort)");
    cmd.add_flag("--no-elitism", f.no_elitism, "Disable the single elite copy");
    cmd.add_option("--format", f.format, "csv | json | table");
    cmd.add_option("--out", f.out, "Write the report to PATH instead of standard output");
    cmd.add_option("--isa", f.isa, "Force kernel ISA: scalar | avx2 | neon");
}

} // namespace

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    CLI::App app{"Genetic-algorithm extremum search and benchmark harness", "extrema-ga"};
    app.require_subcommand(1, 1);
    Flags f;

    auto* run = app.add_subcommand("run", "Single GA run; prints a JSON summary");
    auto* convergence = app.add_subcommand("convergence", "Convergence tables over operators and seeds");
    auto* profile = app.add_subcommand("profile", "Per-phase time profile");
    auto* scaling = app.add_subcommand("scaling", "Thread-scaling measurement");
    for (auto* cmd : {run, convergence, profile, scaling}) add_ga_flags(*cmd, f);
    convergence->add_option("--seeds", f.seeds, "Runs per cell (default 25)");
    convergence->add_option("--oracle-step", f.oracle_step, "Brute-force oracle grid step (default 1e-4)");
    convergence->add_option("--tol", f.tol, "Correctness tolerance on best value (default 1e-2)");
    scaling->add_option("--thread-list", f.thread_list, "Comma-separated thread counts (default 1,2,4,8)");

    std::vector<std::string> argv_storage{"extrema-ga"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        fmt::print(err, "error: {}\n", e.what());
        if (!app.get_subcommands().empty()) {
            err << app.get_subcommands().front()->help();
        } else {
            err << app.help();
        }
        return kExitUsage;
    }

    try {
        if (!f.isa.empty()) {
            std::optional<kernels::Isa> isa;
            for (auto candidate : {kernels::Isa::Scalar, kernels::Isa::Avx2, kernels::Isa::Neon}) {
                if (f.isa == kernels::to_string(candidate)) isa = candidate;
            }
            if (!isa) throw UsageError("unknown ISA '" + f.isa + "'; expected scalar, avx2 or neon");
            if (!kernels::set_active(*isa)) {
                throw UsageError("ISA '" + f.isa + "' is not available on this machine");
            }
        }
        if (run->parsed()) return cmd_run(f, out, err);
        if (convergence->parsed()) return cmd_convergence(f, out, err);
        if (profile->parsed()) return cmd_profile(f, out, err);
        if (scaling->parsed()) return cmd_scaling(f, out, err);
    } catch (const UsageError& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kExitRuntime;
    }
    return kExitUsage;
}

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return parse_and_dispatch(args, std::cout, std::cerr);
}

} // namespace ega::cli
