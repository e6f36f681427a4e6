#include "metaca/analysis.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace metaca {

double stability_between(const lattice1d& now, const lattice1d& back) {
    const int w = now.width();
    if (w == 0 || back.width() != w) {
        throw std::invalid_argument("rows must be non-empty and equally sized");
    }
    int same = 0;
    for (int j = 0; j < w; ++j) {
        if (now.genotypes[static_cast<std::size_t>(j)] == back.genotypes[static_cast<std::size_t>(j)]) {
            ++same;
        }
    }
    return static_cast<double>(same) / static_cast<double>(w);
}

double stability_between(const grid2d& now, const grid2d& back) {
    if (now.width() != back.width() || now.height() != back.height()) {
        throw std::invalid_argument("grids must be equally sized");
    }
    const std::size_t n = now.cells().size();
    std::size_t same = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (now.cells()[i].genotype == back.cells()[i].genotype) {
            ++same;
        }
    }
    return static_cast<double>(same) / static_cast<double>(n);
}

double stability_1d(const history1d& history, int generation, int window) {
    if (window < 1) {
        throw std::invalid_argument("stability window must be at least 1");
    }
    if (generation < 0 || generation > history.generations()) {
        throw std::out_of_range("generation outside the recorded history");
    }
    if (generation < window) {
        throw std::out_of_range("stability window exceeds the available history");
    }
    return stability_between(history.rows[static_cast<std::size_t>(generation)],
                             history.rows[static_cast<std::size_t>(generation - window)]);
}

metrics_row metrics_1d(const history1d& history, int generation, int window) {
    if (window < 1) {
        throw std::invalid_argument("stability window must be at least 1");
    }
    if (generation < 0 || generation > history.generations()) {
        throw std::out_of_range("generation outside the recorded history");
    }
    const lattice1d& row = history.rows[static_cast<std::size_t>(generation)];
    const int w = row.width();

    metrics_row m;
    m.generation = generation;
    for (const rule_table& g : row.genotypes) {
        ++m.rule_histogram[static_cast<std::size_t>(g.to_number(rule_convention::ascending))];
    }

    int family_counts[4] = {0, 0, 0, 0};
    for (int number = 0; number < 256; ++number) {
        const auto count = m.rule_histogram[static_cast<std::size_t>(number)];
        if (count == 0) {
            continue;
        }
        const rule_family family =
            classify(rule_table::from_number(number, rule_convention::ascending));
        if (family != rule_family::other) {
            family_counts[static_cast<int>(family)] += static_cast<int>(count);
        }
    }
    for (int f = 0; f < 4; ++f) {
        m.interesting_occupancy[static_cast<std::size_t>(f)] =
            static_cast<double>(family_counts[f]) / static_cast<double>(w);
    }

    int ones = 0;
    for (std::uint8_t bit : row.phenotypes) {
        ones += bit;
    }
    m.phenotype_density = static_cast<double>(ones) / static_cast<double>(w);

    double entropy = 0.0;
    for (const auto count : m.rule_histogram) {
        if (count == 0) {
            continue;
        }
        const double p = static_cast<double>(count) / static_cast<double>(w);
        entropy -= p * std::log2(p);
    }
    m.genotype_entropy = entropy;

    if (generation >= window) {
        m.stability = stability_1d(history, generation, window);
    }
    return m;
}

long population(const grid2d& grid) {
    long alive = 0;
    for (const cell2d& cell : grid.cells()) {
        alive += cell.alive ? 1 : 0;
    }
    return alive;
}

double mean_alive_weight(const grid2d& grid) {
    long long sum = 0;
    long alive = 0;
    for (const cell2d& cell : grid.cells()) {
        if (cell.alive) {
            sum += cell.weight;
            ++alive;
        }
    }
    return alive == 0 ? 0.0 : static_cast<double>(sum) / static_cast<double>(alive);
}

std::optional<int> stabilization_generation(const history1d& history, double threshold, int window) {
    if (!(threshold > 0.0 && threshold <= 1.0)) {
        throw std::invalid_argument("stabilization threshold must be in (0,1]");
    }
    if (window < 1) {
        throw std::invalid_argument("stability window must be at least 1");
    }
    const int last = history.generations();
    int first_settled = 0;
    for (int g = window; g <= last; ++g) {
        if (stability_1d(history, g, window) < threshold) {
            first_settled = g + 1;
        }
    }
    if (first_settled > last) {
        return std::nullopt;
    }
    return first_settled;
}

std::string format_double(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc{}) {
        return "nan";
    }
    return std::string(buffer, ptr);
}

namespace {

void write_common_prefix(std::ostream& out, const metrics_row& row) {
    out << row.generation;
}

} // namespace

void write_metrics_csv_1d(std::ostream& out, std::span<const metrics_row> rows) {
    out << "generation,phenotype_density,genotype_entropy,stability,occ_family110,occ_family30,"
           "occ_family90,occ_family184";
    for (int i = 0; i < 256; ++i) {
        out << ",hist_" << i;
    }
    out << '\n';
    for (const metrics_row& row : rows) {
        write_common_prefix(out, row);
        out << ',' << format_double(row.phenotype_density) << ',' << format_double(row.genotype_entropy)
            << ',';
        if (row.stability) {
            out << format_double(*row.stability);
        }
        for (double occ : row.interesting_occupancy) {
            out << ',' << format_double(occ);
        }
        for (const auto count : row.rule_histogram) {
            out << ',' << count;
        }
        out << '\n';
    }
}

void write_metrics_csv_2d(std::ostream& out, std::span<const metrics_row> rows) {
    out << "generation,population,mean_weight,stability\n";
    for (const metrics_row& row : rows) {
        write_common_prefix(out, row);
        out << ',' << row.population << ',' << format_double(row.mean_weight) << ',';
        if (row.stability) {
            out << format_double(*row.stability);
        }
        out << '\n';
    }
}

} // namespace metaca
