#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>

namespace ega {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers: as easy as 1, 2, 3").
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;
PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key) noexcept;

/// Which part of a generation a stream feeds. Part of the counter, so streams
/// for different phases never overlap.
enum class StreamPhase : std::uint32_t {
    Init = 0,
    Plan = 1,
    Select = 2,
    Crossover = 3,
    Mutation = 4,
    Test = 0xFFFF,
};

/// Counter-based random stream keyed by (seed, generation, phase, slot).
///
/// Output depends only on the key and on how many values were drawn, never on
/// which thread draws them. Generation and slot occupy 32 counter bits each.
/// Satisfies UniformRandomBitGenerator.
class RandomStream {
  public:
    using result_type = std::uint64_t;

    RandomStream(std::uint64_t seed, std::uint64_t generation, StreamPhase phase,
                 std::uint64_t slot) noexcept;

    /// Convenience stream for tests and tools: phase Test, generation 0, slot 0.
    explicit RandomStream(std::uint64_t seed) noexcept
        : RandomStream(seed, 0, StreamPhase::Test, 0) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }
    result_type operator()() noexcept { return next_u64(); }

    std::uint64_t next_u64() noexcept;
    std::uint32_t next_u32() noexcept;

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() noexcept;

    /// Uniform integer in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) noexcept;

    /// Uniform integer in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) noexcept {
        return lo + below(hi - lo + 1);
    }

    /// True with probability p; p <= 0 never, p >= 1 always.
    bool bernoulli(double p) noexcept { return uniform() < p; }

  private:
    void refill() noexcept;

    PhiloxKey key_{};
    PhiloxCounter counter_{};
    PhiloxCounter block_{};
    unsigned used_ = 4;
};

} // namespace ega
