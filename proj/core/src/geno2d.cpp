#include "metaca/geno2d.hpp"

#include <charconv>
#include <stdexcept>

namespace metaca {

namespace {

int parse_component(std::string_view text) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("genotype component is not an integer: '" + std::string(text) + "'");
    }
    return value;
}

} // namespace

genotype2d parse_genotype(std::string_view text, int s_max) {
    const auto first = text.find(',');
    const auto second = first == std::string_view::npos ? std::string_view::npos : text.find(',', first + 1);
    if (first == std::string_view::npos || second == std::string_view::npos ||
        text.find(',', second + 1) != std::string_view::npos) {
        throw std::invalid_argument("genotype literal must be 'x,y,z'");
    }
    const genotype2d g{parse_component(text.substr(0, first)),
                       parse_component(text.substr(first + 1, second - first - 1)),
                       parse_component(text.substr(second + 1))};
    if (!well_formed(g, s_max)) {
        throw std::invalid_argument("genotype " + to_string(g) + " violates 0 <= x <= y <= z <= " +
                                    std::to_string(s_max));
    }
    return g;
}

std::string to_string(const genotype2d& g) {
    return std::to_string(g.x) + "," + std::to_string(g.y) + "," + std::to_string(g.z);
}

bool classify(int stimulus, const genotype2d& g, bool currently_alive) {
    if (stimulus < 0) {
        throw std::out_of_range("stimulus must be non-negative");
    }
    if (stimulus < g.x) {
        return false; // underpopulation
    }
    if (stimulus <= g.y) {
        return true; // reproduce / survive
    }
    if (stimulus < g.z) {
        return currently_alive;
    }
    return false; // overcrowding
}

genotype2d average_blend(std::span<const genotype2d> genotypes) {
    if (genotypes.empty()) {
        throw std::invalid_argument("average blend requires at least one genotype");
    }
    long long sx = 0, sy = 0, sz = 0;
    for (const genotype2d& g : genotypes) {
        sx += g.x;
        sy += g.y;
        sz += g.z;
    }
    const long long n = static_cast<long long>(genotypes.size());
    genotype2d g{static_cast<int>(round_half_up(sx, n)), static_cast<int>(round_half_up(sy, n)),
                 static_cast<int>(round_half_up(sz, n))};
    if (g.y < g.x) {
        g.y = g.x;
    }
    if (g.z < g.y) {
        g.z = g.y;
    }
    return g;
}

} // namespace metaca
