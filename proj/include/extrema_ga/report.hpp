#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "extrema_ga/bench.hpp"
#include "extrema_ga/engine.hpp"

namespace ega::report {

enum class Format { Csv, Json, Table };

std::optional<Format> parse_format(std::string_view name);

inline constexpr int kSchemaVersion = 1;

inline constexpr std::string_view kConvergenceHeader =
    "function,mode,crossover,selection,seed,generations,converged,best_x,best_raw,correct";
inline constexpr std::string_view kScalingHeader = "threads,pinned,real_s,cumulative_s";
inline constexpr std::string_view kProfileHeader = "phase,seconds,percent";

// All writers throw std::runtime_error when the sink is not writable.
void write(std::ostream& out, const bench::ConvergenceReport& report, Format format);
void write(std::ostream& out, const bench::ScalingReport& report, Format format);
void write(std::ostream& out, const bench::PhaseProfile& profile, Format format);
void write(std::ostream& out, const GaConfig& cfg, const RunReport& run, Format format);

nlohmann::json to_json(const bench::ConvergenceReport& report);
nlohmann::json to_json(const bench::ScalingReport& report);
nlohmann::json to_json(const bench::PhaseProfile& profile);
nlohmann::json to_json(const GaConfig& cfg, const RunReport& run);
nlohmann::json to_json(const GaConfig& cfg);

/// Parses documents produced by to_json; throws on schema mismatch.
std::vector<bench::ConvergenceRow> convergence_rows_from_json(const nlohmann::json& doc);
bench::ScalingReport scaling_from_json(const nlohmann::json& doc);
bench::PhaseProfile profile_from_json(const nlohmann::json& doc);

/// Label used in the pretty tables, e.g. "Tournament (tournament group: 10)".
std::string display_name(const SelectionKind& kind);
std::string display_name(CrossoverKind kind);

} // namespace ega::report
