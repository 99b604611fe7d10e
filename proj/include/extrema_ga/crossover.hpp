#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "extrema_ga/genome.hpp"
#include "extrema_ga/random.hpp"

namespace ega {

enum class CrossoverKind {
    OnePoint,
    OnePointMulti,
    TwoPoint,
    ThreePoint,
    UniformFixed,
    UniformRandom,
    HalfUniform,
    ArithAnd,
    ArithOr,
    ArithNor,
    ArithNand,
    ArithXor,
    ArithRandom,
};

/// Every crossover kind, in the order the convergence tables list them.
inline constexpr std::array kAllCrossovers{
    CrossoverKind::OnePoint,    CrossoverKind::OnePointMulti, CrossoverKind::TwoPoint,
    CrossoverKind::ThreePoint,  CrossoverKind::UniformFixed,  CrossoverKind::UniformRandom,
    CrossoverKind::HalfUniform, CrossoverKind::ArithAnd,      CrossoverKind::ArithOr,
    CrossoverKind::ArithNor,    CrossoverKind::ArithNand,     CrossoverKind::ArithXor,
    CrossoverKind::ArithRandom,
};

/// The twelve variants covered by the convergence experiments (no three-point).
inline constexpr std::array kTableCrossovers{
    CrossoverKind::OnePoint,    CrossoverKind::OnePointMulti, CrossoverKind::TwoPoint,
    CrossoverKind::UniformFixed, CrossoverKind::UniformRandom, CrossoverKind::HalfUniform,
    CrossoverKind::ArithAnd,    CrossoverKind::ArithOr,       CrossoverKind::ArithNor,
    CrossoverKind::ArithNand,   CrossoverKind::ArithXor,      CrossoverKind::ArithRandom,
};

enum class ArithFn { And, Or, Nor, Nand, Xor };

enum class MixingRatio { Fixed, RandomPerCall };

/// One to three children; only one_point_multi ever returns more than one.
struct Offspring {
    std::array<Genome, 3> children{};
    unsigned count = 0;

    std::span<const Genome> view() const noexcept { return {children.data(), count}; }
};

/// p1[0, cut) ++ p2[cut, L). cut must lie in [1, L - 1].
Genome one_point_at(const Genome& p1, const Genome& p2, unsigned cut);

/// Cut drawn uniformly from [1, L - 1]. Requires L >= 2.
Genome one_point(const Genome& p1, const Genome& p2, RandomStream& rng);

/// Number of children produced by the recursive one-point scheme: at depth
/// lvl < 3 a draw divisible by 3 recurses once more, and every invocation that
/// passes the depth guard emits one child. P(1) = 2/3, P(2) = 2/9, P(3) = 1/9.
unsigned multi_child_count(RandomStream& rng);

/// multi_child_count() children, each an independent one_point().
Offspring one_point_multi(const Genome& p1, const Genome& p2, RandomStream& rng);

/// Alternates source parent at each of the sorted distinct cuts, starting from p1.
Genome k_point_at(const Genome& p1, const Genome& p2, std::span<const unsigned> cuts);

/// k distinct cuts drawn from [1, L - 1]. Requires L > k.
Genome k_point(const Genome& p1, const Genome& p2, unsigned k, RandomStream& rng);

Genome uniform(const Genome& p1, const Genome& p2, MixingRatio ratio, RandomStream& rng);

/// Copies p1, then takes p2's bit at exactly floor(|D| / 2) of the differing
/// positions D, chosen uniformly.
Genome half_uniform(const Genome& p1, const Genome& p2, RandomStream& rng);

Genome arith(const Genome& p1, const Genome& p2, ArithFn fn);

/// Uniformly picks one of the five bitwise functions per call.
Genome arith_random(const Genome& p1, const Genome& p2, RandomStream& rng);

Offspring apply_crossover(CrossoverKind kind, const Genome& p1, const Genome& p2,
                          RandomStream& rng);

/// Minimum chromosome length the operator accepts.
unsigned min_length(CrossoverKind kind) noexcept;

} // namespace ega
