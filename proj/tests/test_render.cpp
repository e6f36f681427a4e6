#include <doctest.h>

#include "metaca/render.hpp"

#include <set>
#include <sstream>
#include <tuple>

using namespace metaca;

TEST_CASE("the hue palette gives all 256 rules distinct colours") {
    palette pal;
    std::set<std::tuple<int, int, int>> seen;
    for (int number = 0; number < 256; ++number) {
        const rgb c = rule_color(pal, rule_table::from_number(number, rule_convention::ascending));
        seen.insert({c.r, c.g, c.b});
    }
    CHECK(seen.size() == 256);
}

TEST_CASE("hsv conversion hits the expected corners") {
    CHECK(hsv_to_rgb(0.0, 1.0, 0.9) == rgb{230, 0, 0});
    CHECK(hsv_to_rgb(120.0, 1.0, 0.9) == rgb{0, 230, 0});
    CHECK(hsv_to_rgb(240.0, 1.0, 0.9) == rgb{0, 0, 230});
    CHECK(hsv_to_rgb(0.0, 0.0, 1.0) == white);
}

TEST_CASE("the greyscale palette shades by popcount and highlights families") {
    palette pal;
    pal.kind = palette_kind::greyscale_highlight;

    CHECK(rule_color(pal, rule_table()) == black);
    CHECK(rule_color(pal, rule_table::from_number(255, rule_convention::wolfram)) ==
          rgb{255, 255, 255});
    // popcount 4 rules sit mid-grey
    CHECK(rule_color(pal, rule_table::from_string("11110000")) == rgb{128, 128, 128});

    CHECK(rule_color(pal, rule_table::from_number(110, rule_convention::wolfram)) == rgb{255, 0, 0});
    CHECK(rule_color(pal, rule_table::from_number(124, rule_convention::wolfram)) == rgb{255, 0, 0});
    CHECK(rule_color(pal, rule_table::from_number(30, rule_convention::wolfram)) == rgb{0, 0, 255});
    CHECK(rule_color(pal, rule_table::from_number(90, rule_convention::wolfram)) == rgb{0, 255, 0});
    CHECK(rule_color(pal, rule_table::from_number(184, rule_convention::wolfram)) == rgb{255, 165, 0});
}

TEST_CASE("weight colours ramp from black to red, dead cells are white") {
    CHECK(weight_color(0, 125) == black);
    CHECK(weight_color(125, 125) == rgb{255, 0, 0});
    CHECK(weight_color(62, 125) == rgb{126, 0, 0});

    grid2d grid(3, 3);
    const image img = render_2d(grid, 125);
    for (int y = 0; y < 3; ++y) {
        for (int x = 0; x < 3; ++x) {
            CHECK(img.at(x, y) == white);
        }
    }
    grid.at(1, 1) = {true, 125, {3, 3, 5}};
    CHECK(render_2d(grid, 125).at(1, 1) == rgb{255, 0, 0});
}

TEST_CASE("1D layers render one pixel row per generation") {
    history1d history;
    lattice1d row;
    row.genotypes = {rule_table::from_number(110, rule_convention::wolfram),
                     rule_table::from_number(255, rule_convention::wolfram), rule_table()};
    row.phenotypes = {1, 0, 1};
    history.rows = {row, row};

    palette grey;
    grey.kind = palette_kind::greyscale_highlight;

    const image phenotype = render_1d(history, grey, layer1d::phenotype);
    CHECK(phenotype.width() == 3);
    CHECK(phenotype.height() == 2);
    CHECK(phenotype.at(0, 0) == black);
    CHECK(phenotype.at(1, 0) == white);
    CHECK(phenotype.at(2, 1) == black);

    const image genotype = render_1d(history, grey, layer1d::genotype);
    CHECK(genotype.at(0, 0) == rgb{255, 0, 0}); // Rule 110 highlighted in red
    CHECK(genotype.at(1, 0) == rgb{255, 255, 255});
    CHECK(genotype.at(2, 0) == black);

    const image stacked = render_1d(history, grey, layer1d::stacked);
    CHECK(stacked.height() == 4);
    CHECK(stacked.at(0, 0) == rgb{255, 0, 0}); // genotype block on top
    CHECK(stacked.at(0, 2) == black);          // phenotype block below

    history1d empty;
    CHECK_THROWS_AS(render_1d(empty, grey, layer1d::stacked), std::invalid_argument);
}

TEST_CASE("an all-zero phenotype history renders white") {
    history1d history;
    lattice1d row;
    row.genotypes.assign(8, rule_table());
    row.phenotypes.assign(8, 0);
    history.rows.assign(5, row);
    const image img = render_1d(history, palette{}, layer1d::phenotype);
    for (const rgb& px : img.pixels()) {
        REQUIRE(px == white);
    }
}

TEST_CASE("ppm output is byte-exact and repeatable") {
    image img(2, 1);
    img.at(0, 0) = {1, 2, 3};
    img.at(1, 0) = {255, 0, 128};

    std::ostringstream first, second;
    img.write_ppm(first);
    img.write_ppm(second);
    const std::string expected = std::string("P6\n2 1\n255\n") +
                                 std::string{'\x01', '\x02', '\x03'} +
                                 std::string{'\xff', '\x00', '\x80'};
    CHECK(first.str() == expected);
    CHECK(second.str() == expected);

    CHECK_THROWS_AS(image(0, 5), std::invalid_argument);
}
