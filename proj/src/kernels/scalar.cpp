#include <algorithm>

#include "extrema_ga/kernels.hpp"

namespace ega::kernels::scalar {

void decode(std::span<const std::uint64_t> values, unsigned length, Interval interval,
            std::span<double> out) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        out[i] = decode_value(values[i], length, interval);
    }
}

void affine_clamp(std::span<const double> in, double scale, double offset,
                  std::span<double> out) {
    for (std::size_t i = 0; i < in.size(); ++i) {
        const double v = scale * in[i] + offset;
        out[i] = v > 0.0 ? v : 0.0;
    }
}

MinMax min_max(std::span<const double> values) {
    MinMax r{values[0], values[0]};
    for (double v : values.subspan(1)) {
        r.min = std::min(r.min, v);
        r.max = std::max(r.max, v);
    }
    return r;
}

std::size_t first_greater(std::span<const double> values, double target) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] > target) return i;
    }
    return values.size();
}

} // namespace ega::kernels::scalar
