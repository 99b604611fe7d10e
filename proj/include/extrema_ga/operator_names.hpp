#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extrema_ga/crossover.hpp"
#include "extrema_ga/selection.hpp"

namespace ega {

/// Canonical names: one-point, one-point-multi, two-point, three-point,
/// uniform-0.5, uniform-random, hux, arith-and, arith-or, arith-nor,
/// arith-nand, arith-xor, arith-random.
std::string_view to_string(CrossoverKind kind) noexcept;
std::optional<CrossoverKind> parse_crossover(std::string_view name);
std::vector<std::string> crossover_names();

/// roulette, tournament:<k>, linear-ranking (linear-ranking:<s> when s != 2).
std::string to_string(const SelectionKind& kind);
std::optional<SelectionKind> parse_selection(std::string_view name);
std::vector<std::string> selection_names();

} // namespace ega
