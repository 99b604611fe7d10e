#include "extrema_ga/selection.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "extrema_ga/kernels.hpp"

namespace ega {

RouletteWheel::RouletteWheel(std::span<const double> weights) : cumulative_(weights.size()) {
    if (weights.empty()) throw std::invalid_argument("roulette needs at least one weight");
    double running = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double w = weights[i];
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw std::invalid_argument("roulette weights must be finite and non-negative");
        }
        running += w;
        cumulative_[i] = running;
        if (w > 0.0) last_positive_ = i;
    }
    uniform_ = !(running > 0.0);
}

std::size_t RouletteWheel::spin(RandomStream& rng) const {
    if (uniform_) return static_cast<std::size_t>(rng.below(cumulative_.size()));
    const double target = rng.uniform() * cumulative_.back();
    const std::size_t i = kernels::active().first_greater(cumulative_, target);
    // target can round up to the total; the last positive weight owns that edge.
    return i < cumulative_.size() ? i : last_positive_;
}

std::vector<double> linear_ranking_probabilities(std::size_t n, double pressure) {
    if (!(pressure > 1.0 && pressure <= 2.0)) {
        throw std::invalid_argument("linear ranking pressure must lie in (1, 2]");
    }
    if (n == 0) throw std::invalid_argument("linear ranking needs at least one individual");
    if (n == 1) return {1.0};
    std::vector<double> p(n);
    const double dn = static_cast<double>(n);
    for (std::size_t r = 0; r < n; ++r) {
        p[r] = (2.0 - pressure) / dn +
               2.0 * static_cast<double>(r) * (pressure - 1.0) / (dn * (dn - 1.0));
    }
    return p;
}

RankingWheel::RankingWheel(std::span<const double> fitness, double pressure)
    : by_rank_(fitness.size()) {
    rank_p_ = linear_ranking_probabilities(fitness.size(), pressure);
    const std::vector<double>& p = rank_p_;
    std::iota(by_rank_.begin(), by_rank_.end(), std::size_t{0});
    std::stable_sort(by_rank_.begin(), by_rank_.end(),
                     [&](std::size_t a, std::size_t b) { return fitness[a] < fitness[b]; });
    cumulative_.resize(p.size());
    std::partial_sum(p.begin(), p.end(), cumulative_.begin());
}

std::size_t RankingWheel::spin(RandomStream& rng) const {
    const double target = rng.uniform() * cumulative_.back();
    std::size_t r = kernels::active().first_greater(cumulative_, target);
    if (r >= cumulative_.size()) r = cumulative_.size() - 1;
    return by_rank_[r];
}

std::vector<double> RankingWheel::probabilities() const {
    std::vector<double> out(by_rank_.size());
    for (std::size_t r = 0; r < by_rank_.size(); ++r) out[by_rank_[r]] = rank_p_[r];
    return out;
}

std::size_t select_roulette(std::span<const double> weights, RandomStream& rng) {
    return RouletteWheel(weights).spin(rng);
}

std::size_t select_tournament(std::span<const double> fitness, std::size_t k,
                              RandomStream& rng) {
    const std::size_t n = fitness.size();
    if (k < 2 || k > n) {
        throw std::invalid_argument("tournament group size must lie in [2, population size]");
    }
    std::size_t best = n;
    auto enter = [&](std::size_t i) {
        if (best == n || fitness[i] > fitness[best] || (fitness[i] == fitness[best] && i < best)) {
            best = i;
        }
    };
    // Floyd's sampling: k distinct indices, each k-subset equally likely.
    if (k <= 32) {
        std::array<std::size_t, 32> group{};
        std::size_t size = 0;
        for (std::size_t j = n - k; j < n; ++j) {
            const auto t = static_cast<std::size_t>(rng.below(j + 1));
            const bool seen = std::find(group.begin(), group.begin() + size, t) != group.begin() + size;
            group[size++] = seen ? j : t;
        }
        for (std::size_t i = 0; i < size; ++i) enter(group[i]);
    } else {
        std::vector<bool> taken(n, false);
        for (std::size_t j = n - k; j < n; ++j) {
            const auto t = static_cast<std::size_t>(rng.below(j + 1));
            const std::size_t pick = taken[t] ? j : t;
            taken[pick] = true;
            enter(pick);
        }
    }
    return best;
}

std::size_t select_linear_ranking(std::span<const double> fitness, double pressure,
                                  RandomStream& rng) {
    return RankingWheel(fitness, pressure).spin(rng);
}

Selector::Selector(const SelectionKind& kind, std::span<const double> fitness)
    : kind_(kind), fitness_(fitness) {
    switch (kind.tag) {
    case SelectionKind::Tag::Roulette:
        roulette_.emplace(fitness);
        break;
    case SelectionKind::Tag::LinearRanking:
        ranking_.emplace(fitness, kind.pressure);
        break;
    case SelectionKind::Tag::Tournament:
        if (kind.group_size < 2 || kind.group_size > fitness.size()) {
            throw std::invalid_argument("tournament group size must lie in [2, population size]");
        }
        break;
    }
}

std::size_t Selector::draw(RandomStream& rng) const {
    switch (kind_.tag) {
    case SelectionKind::Tag::Roulette:
        return roulette_->spin(rng);
    case SelectionKind::Tag::LinearRanking:
        return ranking_->spin(rng);
    case SelectionKind::Tag::Tournament:
        return select_tournament(fitness_, kind_.group_size, rng);
    }
    return 0;
}

} // namespace ega
