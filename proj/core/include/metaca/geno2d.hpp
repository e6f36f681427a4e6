#pragma once

#include <span>
#include <string>
#include <string_view>

namespace metaca {

// Survival partitions on the stimulus line [0, s_max]:
// [0,x) dies, [x,y] lives (reproduce or survive), (y,z) keeps the current
// status, [z,inf) dies. Conway's variant is (3,3,5) on the [0,8] line.
struct genotype2d {
    int x = 0;
    int y = 0;
    int z = 0;

    friend constexpr bool operator==(const genotype2d&, const genotype2d&) noexcept = default;
};

constexpr bool well_formed(const genotype2d& g, int s_max) noexcept {
    return 0 <= g.x && g.x <= g.y && g.y <= g.z && g.z <= s_max;
}

// "x,y,z" integer triple. Throws std::invalid_argument on malformed text
// or a violated 0 <= x <= y <= z <= s_max invariant.
genotype2d parse_genotype(std::string_view text, int s_max);

std::string to_string(const genotype2d& g);

// Life-or-death decision for one cell. Throws std::out_of_range for a
// negative stimulus; stimulus values above z always mean death.
bool classify(int stimulus, const genotype2d& g, bool currently_alive);

// Widen the survival partitions: smallest lower bound, largest bounds
// above. Preserves x <= y <= z without clamping.
constexpr genotype2d union_blend(const genotype2d& a, const genotype2d& b) noexcept {
    return {a.x < b.x ? a.x : b.x, a.y > b.y ? a.y : b.y, a.z > b.z ? a.z : b.z};
}

// Narrow the survival partitions, then restore x <= y <= z by raising y
// to x and z to y where violated.
constexpr genotype2d intersection_blend(const genotype2d& a, const genotype2d& b) noexcept {
    genotype2d g{a.x > b.x ? a.x : b.x, a.y < b.y ? a.y : b.y, a.z < b.z ? a.z : b.z};
    if (g.y < g.x) {
        g.y = g.x;
    }
    if (g.z < g.y) {
        g.z = g.y;
    }
    return g;
}

// Componentwise mean, rounded half-up, clamped to x <= y <= z.
// Throws std::invalid_argument on an empty list.
genotype2d average_blend(std::span<const genotype2d> genotypes);

// Half-up rounding of sum/count for non-negative sums.
constexpr long long round_half_up(long long sum, long long count) noexcept {
    return (2 * sum + count) / (2 * count);
}

} // namespace metaca
