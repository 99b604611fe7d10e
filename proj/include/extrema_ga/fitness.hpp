#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "extrema_ga/objectives.hpp"

namespace ega {

/// Maximum keeps raw values, Minimum negates them, so the best individual is
/// always the argmax.
std::vector<double> adjust_fitness(std::span<const double> raw, SearchMode mode);
void adjust_fitness_into(std::span<const double> raw, SearchMode mode, std::span<double> out);

/// Classic linear fitness scaling f' = a f + b.
///
/// Keeps the mean and stretches the maximum to c_mult times the mean; if that
/// would push the minimum below zero, the map is re-solved so the minimum lands
/// on zero instead. All outputs are >= 0. Inputs with a negative minimum are
/// first translated by -min so the mean-preserving map exists. When all values
/// are equal the result is the mean (if positive) or 1 everywhere.
std::vector<double> linear_scale(std::span<const double> fitness, double c_mult = 2.0);
void linear_scale_into(std::span<const double> fitness, double c_mult, std::span<double> out);

/// Pairwise (cascade) summation with a sequential base case of 8 elements.
double pairwise_sum(std::span<const double> values) noexcept;

/// Index of the largest value, smallest index among ties. Non-empty input.
std::size_t argbest(std::span<const double> fitness) noexcept;

} // namespace ega
