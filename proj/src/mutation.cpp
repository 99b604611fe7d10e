#include "extrema_ga/mutation.hpp"

#include <stdexcept>

namespace ega {

namespace {

void require_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("mutation probability outside [0, 1]");
}

} // namespace

Genome mutate_bit_inversion(const Genome& genome, double p_mut, RandomStream& rng) {
    require_probability(p_mut);
    if (p_mut == 0.0) return genome;
    if (p_mut == 1.0) return Genome::from_value(~genome.value(), genome.length());
    std::uint64_t flips = 0;
    for (unsigned b = 0; b < genome.length(); ++b) {
        if (rng.bernoulli(p_mut)) flips |= std::uint64_t{1} << b;
    }
    return Genome::from_value(genome.value() ^ flips, genome.length());
}

Genome mutate_single_bit(const Genome& genome, double p_mut, RandomStream& rng) {
    require_probability(p_mut);
    if (p_mut == 0.0 || !rng.bernoulli(p_mut)) return genome;
    const std::uint64_t flip = std::uint64_t{1} << rng.below(genome.length());
    return Genome::from_value(genome.value() ^ flip, genome.length());
}

} // namespace ega
