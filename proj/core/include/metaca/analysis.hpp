#pragma once

#include "metaca/sim1d.hpp"
#include "metaca/sim2d.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>

namespace metaca {

// Per-generation measurements. The 1D fields quantify the rule ecology of
// a lattice row, the 2D fields the colony; a runner fills whichever side
// applies and leaves the other at its zero value.
struct metrics_row {
    int generation = 0;
    std::array<std::uint32_t, 256> rule_histogram{}; // indexed by ascending rule number
    std::array<double, 4> interesting_occupancy{};   // family 110, 30, 90, 184
    double phenotype_density = 0.0;
    double genotype_entropy = 0.0;                   // bits, in [0,8]
    std::optional<double> stability{};               // needs a window of history
    long population = 0;
    double mean_weight = 0.0;
};

// Fraction of cells whose genotype matches the comparison row/grid.
double stability_between(const lattice1d& now, const lattice1d& back);
double stability_between(const grid2d& now, const grid2d& back);

// Stability of generation `generation` against the row `window` steps
// earlier. Throws std::invalid_argument when window < 1 and
// std::out_of_range when the window exceeds the available history.
double stability_1d(const history1d& history, int generation, int window);

// All 1D metrics for one generation; stability present once the window
// fits.
metrics_row metrics_1d(const history1d& history, int generation, int window);

long population(const grid2d& grid);
double mean_alive_weight(const grid2d& grid); // 0 when nothing is alive

// First generation after which stability(., window) stays >= threshold,
// nullopt if it never settles. A history too short to measure counts as
// settled from generation 0. Throws std::invalid_argument for a threshold
// outside (0,1] or window < 1.
std::optional<int> stabilization_generation(const history1d& history, double threshold, int window);

// CSV emitters; locale-independent, one row per generation.
// 1D columns: generation,phenotype_density,genotype_entropy,stability,
//             occ_family110,occ_family30,occ_family90,occ_family184,
//             hist_0..hist_255 (stability empty while the window does not fit)
// 2D columns: generation,population,mean_weight,stability
void write_metrics_csv_1d(std::ostream& out, std::span<const metrics_row> rows);
void write_metrics_csv_2d(std::ostream& out, std::span<const metrics_row> rows);

std::string format_double(double value); // shortest round-trip text, locale-free

} // namespace metaca
