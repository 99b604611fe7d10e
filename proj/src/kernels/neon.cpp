#include <arm_neon.h>

#include <algorithm>

#include "kernels_internal.hpp"

namespace ega::kernels::neon {

void decode(std::span<const std::uint64_t> values, unsigned length, Interval interval,
            std::span<double> out) {
    const std::uint64_t top = Genome::mask_for(length);
    const float64x2_t lo = vdupq_n_f64(interval.lo);
    const float64x2_t hi = vdupq_n_f64(interval.hi);
    const float64x2_t width = vdupq_n_f64(interval.hi - interval.lo);
    const float64x2_t denom = vdupq_n_f64(static_cast<double>(top));
    const uint64x2_t top_v = vdupq_n_u64(top);
    std::size_t i = 0;
    const std::size_t n = values.size();
    for (; i + 2 <= n; i += 2) {
        const uint64x2_t v = vld1q_u64(values.data() + i);
        // Exact: values carry at most 53 significant bits.
        const float64x2_t u = vcvtq_f64_u64(v);
        const float64x2_t offset = vdivq_f64(vmulq_f64(u, width), denom);
        float64x2_t x = vaddq_f64(lo, offset);
        x = vbslq_f64(vcgtq_f64(x, hi), hi, x);
        x = vbslq_f64(vceqq_u64(v, top_v), hi, x);
        vst1q_f64(out.data() + i, x);
    }
    for (; i < n; ++i) out[i] = decode_value(values[i], length, interval);
}

void affine_clamp(std::span<const double> in, double scale, double offset,
                  std::span<double> out) {
    const float64x2_t a = vdupq_n_f64(scale);
    const float64x2_t b = vdupq_n_f64(offset);
    const float64x2_t zero = vdupq_n_f64(0.0);
    std::size_t i = 0;
    const std::size_t n = in.size();
    for (; i + 2 <= n; i += 2) {
        // vmulq + vaddq rather than vfmaq: the scalar reference rounds twice.
        const float64x2_t v = vaddq_f64(vmulq_f64(a, vld1q_f64(in.data() + i)), b);
        vst1q_f64(out.data() + i, vbslq_f64(vcgtq_f64(v, zero), v, zero));
    }
    for (; i < n; ++i) {
        const double v = scale * in[i] + offset;
        out[i] = v > 0.0 ? v : 0.0;
    }
}

MinMax min_max(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 4) return scalar::min_max(values);
    float64x2_t vmin = vld1q_f64(values.data());
    float64x2_t vmax = vmin;
    std::size_t i = 2;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t v = vld1q_f64(values.data() + i);
        vmin = vminq_f64(vmin, v);
        vmax = vmaxq_f64(vmax, v);
    }
    MinMax r{vminvq_f64(vmin), vmaxvq_f64(vmax)};
    for (; i < n; ++i) {
        r.min = std::min(r.min, values[i]);
        r.max = std::max(r.max, values[i]);
    }
    return r;
}

std::size_t first_greater(std::span<const double> values, double target) {
    const float64x2_t t = vdupq_n_f64(target);
    const double* p = values.data();
    const std::size_t n = values.size();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const uint64x2_t c0 = vcgtq_f64(vld1q_f64(p + i), t);
        const uint64x2_t c1 = vcgtq_f64(vld1q_f64(p + i + 2), t);
        const uint64x2_t c2 = vcgtq_f64(vld1q_f64(p + i + 4), t);
        const uint64x2_t c3 = vcgtq_f64(vld1q_f64(p + i + 6), t);
        const uint64x2_t any = vorrq_u64(vorrq_u64(c0, c1), vorrq_u64(c2, c3));
        if (vmaxvq_u32(vreinterpretq_u32_u64(any)) != 0) break;
    }
    for (; i < n; ++i) {
        if (p[i] > target) return i;
    }
    return n;
}

} // namespace ega::kernels::neon
