#include "metaca/sim2d.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace metaca {

namespace {

// Resolves a Moore offset; false when the neighbour falls off a bounded grid.
bool resolve(const grid2d& grid, int x, int y, int dx, int dy, int& nx, int& ny) noexcept {
    nx = x + dx;
    ny = y + dy;
    if (grid.topology() == topology2d::torus) {
        nx = (nx + grid.width()) % grid.width();
        ny = (ny + grid.height()) % grid.height();
        return true;
    }
    return nx >= 0 && nx < grid.width() && ny >= 0 && ny < grid.height();
}

int weight_from_bucket(int bucket, int w_max) noexcept {
    return static_cast<int>(round_half_up(static_cast<long long>(bucket) * w_max, 15));
}

} // namespace

grid2d::grid2d(int width, int height, topology2d topology)
    : width_(width), height_(height), topology_(topology) {
    if (width < 3 || height < 3) {
        throw std::invalid_argument("grid dimensions must be at least 3x3");
    }
    cells_.resize(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
}

grid2d grid2d::parse(std::string_view text, int w_max, const genotype2d& fill_genotype,
                     topology2d topology) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (!line.empty()) {
            lines.push_back(line);
        }
        if (eol == std::string_view::npos) {
            break;
        }
        text.remove_prefix(eol + 1);
    }
    if (lines.empty()) {
        throw std::invalid_argument("seed pattern is empty");
    }
    const std::size_t width = lines.front().size();
    for (const auto& line : lines) {
        if (line.size() != width) {
            throw std::invalid_argument("seed pattern rows must all have the same length");
        }
    }
    grid2d grid(static_cast<int>(width), static_cast<int>(lines.size()), topology);
    for (int y = 0; y < grid.height(); ++y) {
        for (int x = 0; x < grid.width(); ++x) {
            const char c = lines[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
            cell2d& cell = grid.at(x, y);
            cell.genotype = fill_genotype;
            if (c == '.') {
                continue;
            }
            int bucket = 0;
            if (c >= '0' && c <= '9') {
                bucket = c - '0';
            } else if (c >= 'a' && c <= 'f') {
                bucket = 10 + (c - 'a');
            } else if (c >= 'A' && c <= 'F') {
                bucket = 10 + (c - 'A');
            } else {
                throw std::invalid_argument(std::string("seed pattern cell must be '.' or a hex digit, got '") +
                                            c + "'");
            }
            cell.alive = true;
            cell.weight = weight_from_bucket(bucket, w_max);
        }
    }
    return grid;
}

int stimulus(const grid2d& grid, int x, int y, stimulus_mode mode, int s_max) noexcept {
    int count = 0;
    long long weight_sum = 0;
    for (const auto& [dx, dy] : moore_offsets) {
        int nx = 0, ny = 0;
        if (!resolve(grid, x, y, dx, dy, nx, ny)) {
            continue;
        }
        const cell2d& neighbour = grid.at(nx, ny);
        if (neighbour.alive) {
            ++count;
            weight_sum += neighbour.weight;
        }
    }
    if (mode == stimulus_mode::count_scaled) {
        return count * (s_max / 8);
    }
    assert(weight_sum <= s_max);
    return static_cast<int>(weight_sum);
}

cell2d next_cell(const grid2d& grid, int x, int y, const std::optional<blend_strategy2d>& strategy,
                 stimulus_mode mode, int s_max) {
    const cell2d& self = grid.at(x, y);
    cell2d out = self;
    out.alive = classify(stimulus(grid, x, y, mode, s_max), self.genotype, self.alive);

    if (out.alive) {
        long long weight_sum = 0;
        int alive_neighbours = 0;
        for (const auto& [dx, dy] : moore_offsets) {
            int nx = 0, ny = 0;
            if (!resolve(grid, x, y, dx, dy, nx, ny)) {
                continue;
            }
            const cell2d& neighbour = grid.at(nx, ny);
            if (neighbour.alive) {
                weight_sum += neighbour.weight;
                ++alive_neighbours;
            }
        }
        if (alive_neighbours > 0) {
            out.weight = static_cast<int>(round_half_up(weight_sum, alive_neighbours));
        }
        // isolated birth keeps the stored weight
    }

    if (strategy &&
        (strategy->condition == blend_condition::always || out.alive)) {
        genotype2d sources[9];
        std::size_t count = 0;
        sources[count++] = self.genotype;
        for (const auto& [dx, dy] : moore_offsets) {
            int nx = 0, ny = 0;
            if (!resolve(grid, x, y, dx, dy, nx, ny)) {
                continue;
            }
            const cell2d& neighbour = grid.at(nx, ny);
            if (strategy->source == blend_source::alive_neighbors && !neighbour.alive) {
                continue;
            }
            sources[count++] = neighbour.genotype;
        }
        switch (strategy->kind) {
        case blend_kind2d::union_: {
            genotype2d acc = sources[0];
            for (std::size_t i = 1; i < count; ++i) {
                acc = union_blend(acc, sources[i]);
            }
            out.genotype = acc;
            break;
        }
        case blend_kind2d::intersection: {
            genotype2d acc = sources[0];
            for (std::size_t i = 1; i < count; ++i) {
                acc = intersection_blend(acc, sources[i]);
            }
            out.genotype = acc;
            break;
        }
        case blend_kind2d::average:
            out.genotype = average_blend(std::span<const genotype2d>(sources, count));
            break;
        }
    }
    return out;
}

grid2d step(const grid2d& grid, const std::optional<blend_strategy2d>& strategy, stimulus_mode mode,
            int s_max) {
    grid2d next(grid.width(), grid.height(), grid.topology());
    for (int y = 0; y < grid.height(); ++y) {
        for (int x = 0; x < grid.width(); ++x) {
            next.at(x, y) = next_cell(grid, x, y, strategy, mode, s_max);
        }
    }
    return next;
}

grid2d random_grid(int width, int height, topology2d topology, const grid_seed_spec& spec,
                   xoshiro256ss& rng) {
    if (spec.density < 0.0 || spec.density > 1.0) {
        throw std::invalid_argument("seed density must be in [0,1]");
    }
    if (spec.weight_min < 0 || spec.weight_min > spec.weight_max) {
        throw std::invalid_argument("seed weight bounds must satisfy 0 <= min <= max");
    }
    if (spec.genotype_low < 0 || spec.genotype_low > spec.genotype_high) {
        throw std::invalid_argument("genotype bounds must satisfy 0 <= low <= high");
    }
    grid2d grid(width, height, topology);
    const std::uint64_t weight_span = static_cast<std::uint64_t>(spec.weight_max - spec.weight_min) + 1;
    const std::uint64_t genotype_span =
        static_cast<std::uint64_t>(spec.genotype_high - spec.genotype_low) + 1;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            cell2d& cell = grid.at(x, y);
            cell.alive = rng.next_double() < spec.density;
            cell.weight = spec.weight_min + static_cast<int>(rng.next_below(weight_span));
            if (spec.fixed_genotype) {
                cell.genotype = *spec.fixed_genotype;
            } else {
                int triple[3];
                for (int& v : triple) {
                    v = spec.genotype_low + static_cast<int>(rng.next_below(genotype_span));
                }
                std::sort(std::begin(triple), std::end(triple));
                cell.genotype = {triple[0], triple[1], triple[2]};
            }
        }
    }
    return grid;
}

} // namespace metaca
