#include <immintrin.h>

#include <algorithm>

#include "kernels_internal.hpp"

namespace ega::kernels::avx2 {

namespace {

// Exact conversion of 32-bit unsigned lanes (held in 64-bit lanes) to double
// through the 2^52 exponent trick.
__attribute__((target("avx2"))) inline __m256d u32_lanes_to_pd(__m256i v) {
    const __m256i magic_bits = _mm256_set1_epi64x(0x4330000000000000LL);
    const __m256d magic = _mm256_set1_pd(0x1p52);
    return _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(v, magic_bits)), magic);
}

} // namespace

__attribute__((target("avx2"))) void decode(std::span<const std::uint64_t> values,
                                            unsigned length, Interval interval,
                                            std::span<double> out) {
    const std::uint64_t top = Genome::mask_for(length);
    const __m256d lo = _mm256_set1_pd(interval.lo);
    const __m256d hi = _mm256_set1_pd(interval.hi);
    const __m256d width = _mm256_set1_pd(interval.hi - interval.lo);
    const __m256d denom = _mm256_set1_pd(static_cast<double>(top));
    const __m256d two32 = _mm256_set1_pd(0x1p32);
    const __m256i low_mask = _mm256_set1_epi64x(0xFFFFFFFFLL);
    const __m256i top_v = _mm256_set1_epi64x(static_cast<long long>(top));

    std::size_t i = 0;
    const std::size_t n = values.size();
    for (; i + 4 <= n; i += 4) {
        const __m256i v =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values.data() + i));
        const __m256d low = u32_lanes_to_pd(_mm256_and_si256(v, low_mask));
        const __m256d high = _mm256_mul_pd(u32_lanes_to_pd(_mm256_srli_epi64(v, 32)), two32);
        const __m256d u = _mm256_add_pd(high, low);
        const __m256d offset = _mm256_div_pd(_mm256_mul_pd(u, width), denom);
        __m256d x = _mm256_min_pd(_mm256_add_pd(lo, offset), hi);
        const __m256d at_top = _mm256_castsi256_pd(_mm256_cmpeq_epi64(v, top_v));
        x = _mm256_blendv_pd(x, hi, at_top);
        _mm256_storeu_pd(out.data() + i, x);
    }
    for (; i < n; ++i) out[i] = decode_value(values[i], length, interval);
}

__attribute__((target("avx2"))) void affine_clamp(std::span<const double> in, double scale,
                                                  double offset, std::span<double> out) {
    const __m256d a = _mm256_set1_pd(scale);
    const __m256d b = _mm256_set1_pd(offset);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    const std::size_t n = in.size();
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_add_pd(_mm256_mul_pd(a, _mm256_loadu_pd(in.data() + i)), b);
        _mm256_storeu_pd(out.data() + i, _mm256_max_pd(v, zero));
    }
    for (; i < n; ++i) {
        const double v = scale * in[i] + offset;
        out[i] = v > 0.0 ? v : 0.0;
    }
}

__attribute__((target("avx2"))) MinMax min_max(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 8) return scalar::min_max(values);
    __m256d vmin = _mm256_loadu_pd(values.data());
    __m256d vmax = vmin;
    std::size_t i = 4;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(values.data() + i);
        vmin = _mm256_min_pd(vmin, v);
        vmax = _mm256_max_pd(vmax, v);
    }
    alignas(32) double lanes_min[4];
    alignas(32) double lanes_max[4];
    _mm256_store_pd(lanes_min, vmin);
    _mm256_store_pd(lanes_max, vmax);
    MinMax r{lanes_min[0], lanes_max[0]};
    for (int k = 1; k < 4; ++k) {
        r.min = std::min(r.min, lanes_min[k]);
        r.max = std::max(r.max, lanes_max[k]);
    }
    for (; i < n; ++i) {
        r.min = std::min(r.min, values[i]);
        r.max = std::max(r.max, values[i]);
    }
    return r;
}

__attribute__((target("avx2"))) std::size_t first_greater(std::span<const double> values,
                                                          double target) {
    const __m256d t = _mm256_set1_pd(target);
    const double* p = values.data();
    const std::size_t n = values.size();
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        const __m256d c0 = _mm256_cmp_pd(_mm256_loadu_pd(p + i), t, _CMP_GT_OQ);
        const __m256d c1 = _mm256_cmp_pd(_mm256_loadu_pd(p + i + 4), t, _CMP_GT_OQ);
        const __m256d c2 = _mm256_cmp_pd(_mm256_loadu_pd(p + i + 8), t, _CMP_GT_OQ);
        const __m256d c3 = _mm256_cmp_pd(_mm256_loadu_pd(p + i + 12), t, _CMP_GT_OQ);
        const __m256d any = _mm256_or_pd(_mm256_or_pd(c0, c1), _mm256_or_pd(c2, c3));
        if (_mm256_movemask_pd(any) != 0) {
            const unsigned mask = static_cast<unsigned>(_mm256_movemask_pd(c0)) |
                                  (static_cast<unsigned>(_mm256_movemask_pd(c1)) << 4) |
                                  (static_cast<unsigned>(_mm256_movemask_pd(c2)) << 8) |
                                  (static_cast<unsigned>(_mm256_movemask_pd(c3)) << 12);
            return i + static_cast<std::size_t>(__builtin_ctz(mask));
        }
    }
    for (; i < n; ++i) {
        if (p[i] > target) return i;
    }
    return n;
}

} // namespace ega::kernels::avx2
