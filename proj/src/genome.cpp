#include "extrema_ga/genome.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "extrema_ga/random.hpp"

namespace ega {

void validate_length(unsigned length) {
    if (length < 1 || length > Genome::kMaxLength) {
        throw std::invalid_argument("chromosome length must be in [1, " +
                                    std::to_string(Genome::kMaxLength) + "], got " +
                                    std::to_string(length));
    }
}

Genome Genome::from_value(std::uint64_t value, unsigned length) {
    validate_length(length);
    return Genome(value & mask_for(length), length);
}

Genome Genome::from_string(std::string_view bits) {
    validate_length(static_cast<unsigned>(bits.size()));
    std::uint64_t value = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("genome string must contain only '0' and '1'");
        }
        value = (value << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return Genome(value, static_cast<unsigned>(bits.size()));
}

std::string Genome::to_string() const {
    std::string out(length_, '0');
    for (unsigned i = 0; i < length_; ++i) {
        if (bit(i)) out[i] = '1';
    }
    return out;
}

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
        throw std::invalid_argument("interval requires finite lo < hi");
    }
}

double decode_value(std::uint64_t value, unsigned length, const Interval& interval) noexcept {
    const std::uint64_t top = Genome::mask_for(length);
    if (value >= top) return interval.hi;
    const double offset = static_cast<double>(value) * (interval.hi - interval.lo) /
                          static_cast<double>(top);
    return std::min(interval.lo + offset, interval.hi);
}

double decode(const Genome& genome, const Interval& interval) {
    return decode_value(genome.value(), genome.length(), interval);
}

Genome random_genome(RandomStream& stream, unsigned length) {
    validate_length(length);
    // A uniform 64-bit word already carries independent fair bits.
    return Genome::from_value(stream.next_u64(), length);
}

} // namespace ega
