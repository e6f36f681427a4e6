#pragma once

#include "metaca/geno2d.hpp"
#include "metaca/rng.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace metaca {

// Phenotype (alive, weight) plus the locally stored genotype. Dead cells
// keep their last weight and genotype as inert bookkeeping so blends over
// all neighbours have defined operands.
struct cell2d {
    bool alive = false;
    int weight = 0;
    genotype2d genotype{};

    friend constexpr bool operator==(const cell2d&, const cell2d&) noexcept = default;
};

enum class topology2d { torus, bounded };

class grid2d {
public:
    grid2d(int width, int height, topology2d topology = topology2d::torus);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    topology2d topology() const noexcept { return topology_; }

    cell2d& at(int x, int y) noexcept { return cells_[index(x, y)]; }
    const cell2d& at(int x, int y) const noexcept { return cells_[index(x, y)]; }

    const std::vector<cell2d>& cells() const noexcept { return cells_; }
    std::vector<cell2d>& cells() noexcept { return cells_; }

    // Seed pattern text: one row per line, '.' dead, hex digit 0..f an
    // alive cell whose weight is the bucket scaled onto [0, w_max].
    static grid2d parse(std::string_view text, int w_max, const genotype2d& fill_genotype,
                        topology2d topology = topology2d::torus);

    friend bool operator==(const grid2d&, const grid2d&) = default;

private:
    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    int width_;
    int height_;
    topology2d topology_;
    std::vector<cell2d> cells_;
};

enum class stimulus_mode { count_scaled, weight_sum };

enum class blend_kind2d { union_, intersection, average };
enum class blend_source { alive_neighbors, all_neighbors };
enum class blend_condition { alive_after_propagation, always };

struct blend_strategy2d {
    blend_kind2d kind = blend_kind2d::union_;
    blend_source source = blend_source::all_neighbors;
    blend_condition condition = blend_condition::alive_after_propagation;

    friend constexpr bool operator==(const blend_strategy2d&, const blend_strategy2d&) noexcept = default;
};

// Moore neighbourhood in blend fold order: N, NE, E, SE, S, SW, W, NW.
inline constexpr std::array<std::pair<int, int>, 8> moore_offsets{
    {{0, -1}, {1, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}}};

// Neighbourhood quantity driving life and death. count_scaled spreads the
// alive count onto [0, s_max]; weight_sum adds the weights of alive
// neighbours (callers keep 8 * w_max <= s_max so the sum stays in range).
int stimulus(const grid2d& grid, int x, int y, stimulus_mode mode, int s_max) noexcept;

// One cell of the synchronous update, reading only the pre-step grid.
// A null strategy disables genotype blending.
cell2d next_cell(const grid2d& grid, int x, int y, const std::optional<blend_strategy2d>& strategy,
                 stimulus_mode mode, int s_max);

grid2d step(const grid2d& grid, const std::optional<blend_strategy2d>& strategy, stimulus_mode mode,
            int s_max);

// Random-seed parameters. Every cell draws alive, weight and (when no
// fixed genotype is given) a sorted uniform triple, in row-major order.
struct grid_seed_spec {
    double density = 0.3;
    int weight_min = 0;
    int weight_max = 125;
    std::optional<genotype2d> fixed_genotype{};
    int genotype_low = 1;
    int genotype_high = 1000;

    friend bool operator==(const grid_seed_spec&, const grid_seed_spec&) = default;
};

grid2d random_grid(int width, int height, topology2d topology, const grid_seed_spec& spec,
                   xoshiro256ss& rng);

} // namespace metaca
