#pragma once

#include "extrema_ga/genome.hpp"
#include "extrema_ga/random.hpp"

namespace ega {

/// Flips every bit independently with probability p_mut in [0, 1].
Genome mutate_bit_inversion(const Genome& genome, double p_mut, RandomStream& rng);

/// With probability p_mut, flips exactly one uniformly chosen bit.
Genome mutate_single_bit(const Genome& genome, double p_mut, RandomStream& rng);

} // namespace ega
