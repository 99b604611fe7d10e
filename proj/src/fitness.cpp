#include "extrema_ga/fitness.hpp"

#include <stdexcept>

#include "extrema_ga/kernels.hpp"

namespace ega {

void adjust_fitness_into(std::span<const double> raw, SearchMode mode, std::span<double> out) {
    if (mode == SearchMode::Maximum) {
        for (std::size_t i = 0; i < raw.size(); ++i) out[i] = raw[i];
    } else {
        for (std::size_t i = 0; i < raw.size(); ++i) out[i] = -raw[i];
    }
}

std::vector<double> adjust_fitness(std::span<const double> raw, SearchMode mode) {
    std::vector<double> out(raw.size());
    adjust_fitness_into(raw, mode, out);
    return out;
}

double pairwise_sum(std::span<const double> values) noexcept {
    if (values.size() <= 8) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

std::size_t argbest(std::span<const double> fitness) noexcept {
    std::size_t best = 0;
    for (std::size_t i = 1; i < fitness.size(); ++i) {
        if (fitness[i] > fitness[best]) best = i;
    }
    return best;
}

void linear_scale_into(std::span<const double> fitness, double c_mult, std::span<double> out) {
    if (fitness.empty()) throw std::invalid_argument("linear scaling needs at least one value");
    if (!(c_mult > 1.0)) throw std::invalid_argument("linear scaling multiplier must exceed 1");
    const auto& k = kernels::active();
    const std::size_t n = fitness.size();

    auto extremes = k.min_max(fitness);
    std::span<const double> source = fitness;
    if (extremes.min < 0.0) {
        // Translate so the minimum sits on zero; order and spread are unchanged.
        k.affine_clamp(fitness, 1.0, -extremes.min, out);
        source = out;
        extremes = k.min_max(source);
    }
    const double avg = pairwise_sum(source) / static_cast<double>(n);
    const double fmax = extremes.max;
    const double fmin = extremes.min;

    if (!(fmax > avg)) {
        k.affine_clamp(source, 0.0, avg > 0.0 ? avg : 1.0, out);
        return;
    }
    double a, b;
    if (fmin > (c_mult * avg - fmax) / (c_mult - 1.0)) {
        a = (c_mult - 1.0) * avg / (fmax - avg);
        b = avg * (fmax - c_mult * avg) / (fmax - avg);
    } else {
        a = avg / (avg - fmin);
        b = -fmin * avg / (avg - fmin);
    }
    k.affine_clamp(source, a, b, out);
}

std::vector<double> linear_scale(std::span<const double> fitness, double c_mult) {
    std::vector<double> out(fitness.size());
    linear_scale_into(fitness, c_mult, out);
    return out;
}

} // namespace ega
