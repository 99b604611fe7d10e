#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "extrema_ga/random.hpp"

namespace ega {

struct SelectionKind {
    enum class Tag { Roulette, Tournament, LinearRanking };

    Tag tag = Tag::LinearRanking;
    std::size_t group_size = 2;  ///< Tournament only.
    double pressure = 2.0;       ///< Linear ranking only, in (1, 2].

    static SelectionKind roulette() { return {Tag::Roulette, 2, 2.0}; }
    static SelectionKind tournament(std::size_t k) { return {Tag::Tournament, k, 2.0}; }
    static SelectionKind linear_ranking(double s = 2.0) { return {Tag::LinearRanking, 2, s}; }

    friend bool operator==(const SelectionKind& a, const SelectionKind& b) {
        if (a.tag != b.tag) return false;
        if (a.tag == Tag::Tournament) return a.group_size == b.group_size;
        if (a.tag == Tag::LinearRanking) return a.pressure == b.pressure;
        return true;
    }
};

/// Cumulative-weight wheel spun by a linear scan over the running sums.
///
/// The scan runs through the active SIMD kernel. A wheel whose weights sum to
/// zero selects uniformly.
class RouletteWheel {
  public:
    /// Weights must be finite and >= 0.
    explicit RouletteWheel(std::span<const double> weights);

    std::size_t spin(RandomStream& rng) const;
    std::size_t size() const noexcept { return cumulative_.size(); }

  private:
    std::vector<double> cumulative_;
    std::size_t last_positive_ = 0;
    bool uniform_ = false;
};

/// Linear ranking (Baker): ascending fitness rank r in {0..n-1}, ties keep
/// their original order, p_r = (2 - s) / n + 2 r (s - 1) / (n (n - 1)).
class RankingWheel {
  public:
    RankingWheel(std::span<const double> fitness, double pressure = 2.0);

    std::size_t spin(RandomStream& rng) const;

    /// Selection probability of each individual, by original index.
    std::vector<double> probabilities() const;

  private:
    std::vector<std::size_t> by_rank_;
    std::vector<double> rank_p_;
    std::vector<double> cumulative_;
};

std::size_t select_roulette(std::span<const double> weights, RandomStream& rng);

/// Best of k distinct uniformly drawn indices; ties go to the smaller index.
/// Throws std::invalid_argument unless 2 <= k <= n.
std::size_t select_tournament(std::span<const double> fitness, std::size_t k,
                              RandomStream& rng);

std::size_t select_linear_ranking(std::span<const double> fitness, double pressure,
                                  RandomStream& rng);

std::vector<double> linear_ranking_probabilities(std::size_t n, double pressure);

/// Per-generation selection state: prepared once from the selection fitness,
/// then drawn from concurrently with per-slot streams.
class Selector {
  public:
    Selector(const SelectionKind& kind, std::span<const double> fitness);

    std::size_t draw(RandomStream& rng) const;

  private:
    SelectionKind kind_;
    std::span<const double> fitness_;
    std::optional<RouletteWheel> roulette_;
    std::optional<RankingWheel> ranking_;
};

} // namespace ega
