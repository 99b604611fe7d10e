#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ega {

class RandomStream;

/// Fixed-length bitstring genotype.
///
/// Bits are stored right-aligned in a 64-bit word in big-endian order: bit
/// position 0 is the most significant of the `length()` used bits, so the
/// word itself is the unsigned integer the genome encodes. Lengths are
/// limited to kMaxLength so every encoded value converts to double exactly.
class Genome {
  public:
    static constexpr unsigned kMaxLength = 53;

    Genome() = default;

    /// Builds a genome from the low `length` bits of `value`; higher bits are dropped.
    static Genome from_value(std::uint64_t value, unsigned length);

    /// Parses a string of '0'/'1' characters, most significant first.
    static Genome from_string(std::string_view bits);

    unsigned length() const noexcept { return length_; }
    std::uint64_t value() const noexcept { return bits_; }
    std::uint64_t mask() const noexcept { return mask_for(length_); }

    bool bit(unsigned position) const noexcept {
        return ((bits_ >> (length_ - 1 - position)) & 1U) != 0;
    }

    std::string to_string() const;

    static constexpr std::uint64_t mask_for(unsigned length) noexcept {
        return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
    }

    friend bool operator==(const Genome&, const Genome&) = default;

  private:
    Genome(std::uint64_t bits, unsigned length) : bits_(bits), length_(length) {}

    std::uint64_t bits_ = 0;
    unsigned length_ = 0;
};

/// Closed search interval [lo, hi] with lo < hi.
struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    Interval() = default;
    Interval(double lo_, double hi_);

    double width() const noexcept { return hi - lo; }
    bool contains(double x) const noexcept { return x >= lo && x <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Maps the genome's unsigned value u linearly onto the interval:
/// lo + u * (hi - lo) / (2^L - 1). All-zeros gives lo, all-ones gives hi.
double decode(const Genome& genome, const Interval& interval);

/// Same mapping on a raw right-aligned word; the kernel layer uses this as its scalar reference.
double decode_value(std::uint64_t value, unsigned length, const Interval& interval) noexcept;

/// Each bit an independent fair coin drawn from `stream`.
Genome random_genome(RandomStream& stream, unsigned length);

void validate_length(unsigned length);

} // namespace ega
