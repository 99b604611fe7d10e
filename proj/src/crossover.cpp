#include "extrema_ga/crossover.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ega {

namespace {

void require_same_length(const Genome& p1, const Genome& p2) {
    if (p1.length() != p2.length()) {
        throw std::invalid_argument("crossover parents differ in length (" +
                                    std::to_string(p1.length()) + " vs " +
                                    std::to_string(p2.length()) + ")");
    }
}

// Mask selecting bit positions [from, L) of an L-bit genome.
constexpr std::uint64_t tail_mask(unsigned length, unsigned from) noexcept {
    return Genome::mask_for(length - from);
}

} // namespace

unsigned min_length(CrossoverKind kind) noexcept {
    switch (kind) {
    case CrossoverKind::OnePoint:
    case CrossoverKind::OnePointMulti:
        return 2;
    case CrossoverKind::TwoPoint:
        return 3;
    case CrossoverKind::ThreePoint:
        return 4;
    default:
        return 1;
    }
}

Genome one_point_at(const Genome& p1, const Genome& p2, unsigned cut) {
    require_same_length(p1, p2);
    const unsigned length = p1.length();
    if (cut < 1 || cut >= length) {
        throw std::invalid_argument("one-point cut must lie in [1, L - 1]");
    }
    const std::uint64_t tail = tail_mask(length, cut);
    return Genome::from_value((p1.value() & ~tail) | (p2.value() & tail), length);
}

Genome one_point(const Genome& p1, const Genome& p2, RandomStream& rng) {
    require_same_length(p1, p2);
    if (p1.length() < 2) throw std::invalid_argument("one-point crossover needs L >= 2");
    const auto cut = static_cast<unsigned>(rng.between(1, p1.length() - 1));
    return one_point_at(p1, p2, cut);
}

unsigned multi_child_count(RandomStream& rng) {
    unsigned children = 0;
    // Iterative form of the recursion: each level below the guard emits a child,
    // and the recursive call happens when the draw is divisible by three.
    for (unsigned lvl = 0; lvl < 3; ++lvl) {
        ++children;
        if (rng.below(3) != 0) break;
    }
    return children;
}

Offspring one_point_multi(const Genome& p1, const Genome& p2, RandomStream& rng) {
    require_same_length(p1, p2);
    if (p1.length() < 2) throw std::invalid_argument("one-point crossover needs L >= 2");
    Offspring out;
    out.count = multi_child_count(rng);
    for (unsigned i = 0; i < out.count; ++i) out.children[i] = one_point(p1, p2, rng);
    return out;
}

Genome k_point_at(const Genome& p1, const Genome& p2, std::span<const unsigned> cuts) {
    require_same_length(p1, p2);
    const unsigned length = p1.length();
    std::uint64_t from_p2 = 0;
    unsigned previous = 0;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (cuts[i] <= previous || cuts[i] >= length) {
            throw std::invalid_argument("k-point cuts must be strictly increasing in [1, L - 1]");
        }
        previous = cuts[i];
    }
    // Segments alternate p1, p2, p1, ...; segment s spans [cut_{s-1}, cut_s).
    for (std::size_t s = 1; s <= cuts.size(); s += 2) {
        const unsigned begin = cuts[s - 1];
        const unsigned end = s < cuts.size() ? cuts[s] : length;
        from_p2 |= tail_mask(length, begin) & ~tail_mask(length, end);
    }
    return Genome::from_value((p1.value() & ~from_p2) | (p2.value() & from_p2), length);
}

Genome k_point(const Genome& p1, const Genome& p2, unsigned k, RandomStream& rng) {
    require_same_length(p1, p2);
    const unsigned length = p1.length();
    if (k < 1 || k > 3) throw std::invalid_argument("k-point crossover supports k in {1, 2, 3}");
    if (length <= k) throw std::invalid_argument("k-point crossover needs L > k");
    std::array<unsigned, 3> cuts{};
    unsigned drawn = 0;
    while (drawn < k) {
        const auto c = static_cast<unsigned>(rng.between(1, length - 1));
        if (std::find(cuts.begin(), cuts.begin() + drawn, c) == cuts.begin() + drawn) {
            cuts[drawn++] = c;
        }
    }
    std::sort(cuts.begin(), cuts.begin() + k);
    return k_point_at(p1, p2, std::span<const unsigned>(cuts.data(), k));
}

Genome uniform(const Genome& p1, const Genome& p2, MixingRatio ratio, RandomStream& rng) {
    require_same_length(p1, p2);
    const unsigned length = p1.length();
    std::uint64_t take_p1 = 0;
    if (ratio == MixingRatio::Fixed) {
        take_p1 = rng.next_u64();
    } else {
        const double m = rng.uniform();
        for (unsigned i = 0; i < length; ++i) {
            if (rng.bernoulli(m)) take_p1 |= std::uint64_t{1} << i;
        }
    }
    return Genome::from_value((p1.value() & take_p1) | (p2.value() & ~take_p1), length);
}

Genome half_uniform(const Genome& p1, const Genome& p2, RandomStream& rng) {
    require_same_length(p1, p2);
    const unsigned length = p1.length();
    std::array<unsigned, Genome::kMaxLength> differing{};
    unsigned d = 0;
    const std::uint64_t diff = p1.value() ^ p2.value();
    for (unsigned b = 0; b < length; ++b) {
        if ((diff >> b) & 1U) differing[d++] = b;
    }
    const unsigned swaps = d / 2;
    // Partial Fisher-Yates: the first `swaps` entries become a uniform subset.
    std::uint64_t flip = 0;
    for (unsigned i = 0; i < swaps; ++i) {
        const auto j = static_cast<unsigned>(rng.between(i, d - 1));
        std::swap(differing[i], differing[j]);
        flip |= std::uint64_t{1} << differing[i];
    }
    // Flipping a differing bit of p1 yields p2's bit there.
    return Genome::from_value(p1.value() ^ flip, length);
}

Genome arith(const Genome& p1, const Genome& p2, ArithFn fn) {
    require_same_length(p1, p2);
    const std::uint64_t a = p1.value();
    const std::uint64_t b = p2.value();
    std::uint64_t r = 0;
    switch (fn) {
    case ArithFn::And:
        r = a & b;
        break;
    case ArithFn::Or:
        r = a | b;
        break;
    case ArithFn::Nor:
        r = ~(a | b);
        break;
    case ArithFn::Nand:
        r = ~(a & b);
        break;
    case ArithFn::Xor:
        r = a ^ b;
        break;
    }
    return Genome::from_value(r, p1.length());
}

Genome arith_random(const Genome& p1, const Genome& p2, RandomStream& rng) {
    return arith(p1, p2, static_cast<ArithFn>(rng.below(5)));
}

Offspring apply_crossover(CrossoverKind kind, const Genome& p1, const Genome& p2,
                          RandomStream& rng) {
    if (kind == CrossoverKind::OnePointMulti) return one_point_multi(p1, p2, rng);
    Offspring out;
    out.count = 1;
    Genome& child = out.children[0];
    switch (kind) {
    case CrossoverKind::OnePoint:
        child = one_point(p1, p2, rng);
        break;
    case CrossoverKind::TwoPoint:
        child = k_point(p1, p2, 2, rng);
        break;
    case CrossoverKind::ThreePoint:
        child = k_point(p1, p2, 3, rng);
        break;
    case CrossoverKind::UniformFixed:
        child = uniform(p1, p2, MixingRatio::Fixed, rng);
        break;
    case CrossoverKind::UniformRandom:
        child = uniform(p1, p2, MixingRatio::RandomPerCall, rng);
        break;
    case CrossoverKind::HalfUniform:
        child = half_uniform(p1, p2, rng);
        break;
    case CrossoverKind::ArithAnd:
        child = arith(p1, p2, ArithFn::And);
        break;
    case CrossoverKind::ArithOr:
        child = arith(p1, p2, ArithFn::Or);
        break;
    case CrossoverKind::ArithNor:
        child = arith(p1, p2, ArithFn::Nor);
        break;
    case CrossoverKind::ArithNand:
        child = arith(p1, p2, ArithFn::Nand);
        break;
    case CrossoverKind::ArithXor:
        child = arith(p1, p2, ArithFn::Xor);
        break;
    case CrossoverKind::ArithRandom:
        child = arith_random(p1, p2, rng);
        break;
    case CrossoverKind::OnePointMulti:
        break;
    }
    return out;
}

} // namespace ega
