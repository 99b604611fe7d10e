#include "extrema_ga/operator_names.hpp"

#include <charconv>
#include <cstdlib>

#include <fmt/format.h>

namespace ega {

std::string_view to_string(CrossoverKind kind) noexcept {
    switch (kind) {
    case CrossoverKind::OnePoint:
        return "one-point";
    case CrossoverKind::OnePointMulti:
        return "one-point-multi";
    case CrossoverKind::TwoPoint:
        return "two-point";
    case CrossoverKind::ThreePoint:
        return "three-point";
    case CrossoverKind::UniformFixed:
        return "uniform-0.5";
    case CrossoverKind::UniformRandom:
        return "uniform-random";
    case CrossoverKind::HalfUniform:
        return "hux";
    case CrossoverKind::ArithAnd:
        return "arith-and";
    case CrossoverKind::ArithOr:
        return "arith-or";
    case CrossoverKind::ArithNor:
        return "arith-nor";
    case CrossoverKind::ArithNand:
        return "arith-nand";
    case CrossoverKind::ArithXor:
        return "arith-xor";
    case CrossoverKind::ArithRandom:
        return "arith-random";
    }
    return "unknown";
}

std::optional<CrossoverKind> parse_crossover(std::string_view name) {
    for (CrossoverKind kind : kAllCrossovers) {
        if (to_string(kind) == name) return kind;
    }
    return std::nullopt;
}

std::vector<std::string> crossover_names() {
    std::vector<std::string> names;
    for (CrossoverKind kind : kAllCrossovers) names.emplace_back(to_string(kind));
    return names;
}

std::string to_string(const SelectionKind& kind) {
    switch (kind.tag) {
    case SelectionKind::Tag::Roulette:
        return "roulette";
    case SelectionKind::Tag::Tournament:
        return fmt::format("tournament:{}", kind.group_size);
    case SelectionKind::Tag::LinearRanking:
        if (kind.pressure == 2.0) return "linear-ranking";
        return fmt::format("linear-ranking:{}", kind.pressure);
    }
    return "unknown";
}

std::optional<SelectionKind> parse_selection(std::string_view name) {
    const auto colon = name.find(':');
    const std::string_view head = name.substr(0, colon);
    const std::string_view arg =
        colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);
    if (head == "roulette" && colon == std::string_view::npos) return SelectionKind::roulette();
    if (head == "tournament") {
        std::size_t k = 0;
        const auto [end, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), k);
        if (arg.empty() || ec != std::errc{} || end != arg.data() + arg.size() || k < 2) {
            return std::nullopt;
        }
        return SelectionKind::tournament(k);
    }
    if (head == "linear-ranking") {
        if (colon == std::string_view::npos) return SelectionKind::linear_ranking();
        const std::string text(arg);
        char* end = nullptr;
        const double s = std::strtod(text.c_str(), &end);
        if (text.empty() || end != text.c_str() + text.size() || !(s > 1.0 && s <= 2.0)) {
            return std::nullopt;
        }
        return SelectionKind::linear_ranking(s);
    }
    return std::nullopt;
}

std::vector<std::string> selection_names() {
    return {"roulette", "tournament:<k>", "linear-ranking"};
}

} // namespace ega
