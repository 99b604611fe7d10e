#pragma once

#include "extrema_ga/kernels.hpp"

namespace ega::kernels {

#define EXTREMA_GA_DECLARE_KERNELS(ns)                                                        \
    namespace ns {                                                                            \
    void decode(std::span<const std::uint64_t> values, unsigned length, Interval interval,   \
                std::span<double> out);                                                       \
    void affine_clamp(std::span<const double> in, double scale, double offset,                \
                      std::span<double> out);                                                 \
    MinMax min_max(std::span<const double> values);                                           \
    std::size_t first_greater(std::span<const double> values, double target);                 \
    }

EXTREMA_GA_DECLARE_KERNELS(avx2)
EXTREMA_GA_DECLARE_KERNELS(neon)

#undef EXTREMA_GA_DECLARE_KERNELS

} // namespace ega::kernels
