#include "metaca/render.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace metaca {

rgb hsv_to_rgb(double hue_degrees, double saturation, double value) noexcept {
    const double c = value * saturation;
    const double sector = hue_degrees / 60.0;
    const double x = c * (1.0 - std::fabs(std::fmod(sector, 2.0) - 1.0));
    const double m = value - c;
    double r = 0.0, g = 0.0, b = 0.0;
    switch (static_cast<int>(sector) % 6) {
    case 0: r = c, g = x; break;
    case 1: r = x, g = c; break;
    case 2: g = c, b = x; break;
    case 3: g = x, b = c; break;
    case 4: r = x, b = c; break;
    case 5: r = c, b = x; break;
    }
    const auto channel = [m](double v) {
        return static_cast<std::uint8_t>(std::lround((v + m) * 255.0));
    };
    return {channel(r), channel(g), channel(b)};
}

rgb rule_color(const palette& pal, rule_table rule) noexcept {
    if (pal.kind == palette_kind::hue256) {
        const int number = rule.to_number(rule_convention::ascending);
        return hsv_to_rgb(number * 360.0 / 256.0, 1.0, 0.9);
    }
    const rule_family family = classify(rule);
    if (family != rule_family::other) {
        return pal.family_colors[static_cast<std::size_t>(family)];
    }
    const auto level = static_cast<std::uint8_t>(std::lround(255.0 * rule.popcount() / 8.0));
    return {level, level, level};
}

rgb weight_color(int weight, int w_max) noexcept {
    assert(w_max >= 1 && weight >= 0 && weight <= w_max);
    const auto level = static_cast<std::uint8_t>(
        std::lround(255.0 * static_cast<double>(weight) / static_cast<double>(w_max)));
    return {level, 0, 0};
}

image render_1d(const history1d& history, const palette& pal, layer1d layer) {
    if (history.rows.empty()) {
        throw std::invalid_argument("history is empty");
    }
    const int width = history.rows.front().width();
    const int rows = static_cast<int>(history.rows.size());
    const int height = layer == layer1d::stacked ? 2 * rows : rows;
    image img(width, height);

    const auto paint_genotype = [&](int y_offset) {
        for (int g = 0; g < rows; ++g) {
            const lattice1d& row = history.rows[static_cast<std::size_t>(g)];
            for (int j = 0; j < width; ++j) {
                img.at(j, y_offset + g) = rule_color(pal, row.genotypes[static_cast<std::size_t>(j)]);
            }
        }
    };
    const auto paint_phenotype = [&](int y_offset) {
        for (int g = 0; g < rows; ++g) {
            const lattice1d& row = history.rows[static_cast<std::size_t>(g)];
            for (int j = 0; j < width; ++j) {
                img.at(j, y_offset + g) = row.phenotypes[static_cast<std::size_t>(j)] ? black : white;
            }
        }
    };

    switch (layer) {
    case layer1d::genotype: paint_genotype(0); break;
    case layer1d::phenotype: paint_phenotype(0); break;
    case layer1d::stacked:
        paint_genotype(0);
        paint_phenotype(rows);
        break;
    }
    return img;
}

image render_2d(const grid2d& grid, int w_max) {
    image img(grid.width(), grid.height());
    for (int y = 0; y < grid.height(); ++y) {
        for (int x = 0; x < grid.width(); ++x) {
            const cell2d& cell = grid.at(x, y);
            img.at(x, y) = cell.alive ? weight_color(cell.weight, w_max) : white;
        }
    }
    return img;
}

} // namespace metaca
