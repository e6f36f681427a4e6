#pragma once

#include "metaca/image.hpp"
#include "metaca/rule.hpp"
#include "metaca/sim1d.hpp"
#include "metaca/sim2d.hpp"

namespace metaca {

enum class palette_kind { hue256, greyscale_highlight, weight_map };

// Genotype colouring. hue256 maps each of the 256 ascending rule numbers
// to its own hue (s = 1.0, v = 0.9 on the full HSV circle). The greyscale
// palette shades a rule by its output popcount and paints the interesting
// families in fixed colours, Rule 110 variants in red.
struct palette {
    palette_kind kind = palette_kind::hue256;
    std::array<rgb, 4> family_colors{{
        {255, 0, 0},   // family110: red
        {0, 0, 255},   // family30: blue
        {0, 255, 0},   // family90: green
        {255, 165, 0}, // family184: orange
    }};

    friend bool operator==(const palette&, const palette&) = default;
};

rgb hsv_to_rgb(double hue_degrees, double saturation, double value) noexcept;

rgb rule_color(const palette& pal, rule_table rule) noexcept;

// Dead cells are white; alive cells ramp linearly from black (weight 0)
// to pure red (weight w_max).
rgb weight_color(int weight, int w_max) noexcept;

enum class layer1d { genotype, phenotype, stacked };

// One pixel row per generation. The phenotype layer is black-on-white
// (1 -> black); stacked puts the genotype block above the phenotype block.
image render_1d(const history1d& history, const palette& pal, layer1d layer);

image render_2d(const grid2d& grid, int w_max);

} // namespace metaca
