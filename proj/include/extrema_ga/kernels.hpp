#pragma once

// Data-parallel inner loops with a scalar reference and SIMD variants.
//
// Every variant must produce results bit-identical to the scalar reference,
// so the engine's output does not depend on which ISA was picked at runtime.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "extrema_ga/genome.hpp"

namespace ega::kernels {

enum class Isa { Scalar, Avx2, Neon };

struct MinMax {
    double min = 0.0;
    double max = 0.0;
};

struct KernelTable {
    Isa isa;
    /// out[i] = phenotype of values[i]; each value must fit in `length` bits.
    void (*decode)(std::span<const std::uint64_t> values, unsigned length, Interval interval,
                   std::span<double> out);
    /// out[i] = max(0, scale * in[i] + offset). out may alias in.
    void (*affine_clamp)(std::span<const double> in, double scale, double offset,
                         std::span<double> out);
    /// Non-empty input.
    MinMax (*min_max)(std::span<const double> values);
    /// First index i with values[i] > target, or values.size() if none.
    std::size_t (*first_greater)(std::span<const double> values, double target);
};

namespace scalar {
void decode(std::span<const std::uint64_t> values, unsigned length, Interval interval,
            std::span<double> out);
void affine_clamp(std::span<const double> in, double scale, double offset,
                  std::span<double> out);
MinMax min_max(std::span<const double> values);
std::size_t first_greater(std::span<const double> values, double target);
} // namespace scalar

/// Table for `isa`, or nullptr when it is not compiled in or the CPU lacks it.
const KernelTable* table_for(Isa isa) noexcept;

/// Best available table. Chosen once on first use; the environment variable
/// EXTREMA_GA_ISA=scalar|avx2|neon overrides the choice when that ISA is available.
const KernelTable& active() noexcept;

/// Forces the active table; returns false (and changes nothing) if unavailable.
bool set_active(Isa isa) noexcept;

bool available(Isa isa) noexcept;
std::string_view to_string(Isa isa) noexcept;

} // namespace ega::kernels
