#pragma once

#include "metaca/blend.hpp"
#include "metaca/rng.hpp"
#include "metaca/rule.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace metaca {

// Paired genotype and phenotype rows of the 1D MetaCA.
struct lattice1d {
    std::vector<rule_table> genotypes;
    std::vector<std::uint8_t> phenotypes; // 0/1 per cell

    int width() const noexcept { return static_cast<int>(genotypes.size()); }

    friend bool operator==(const lattice1d&, const lattice1d&) = default;
};

enum class meta_rule_kind { multiply, blend, template_blend };

struct meta_rule1d {
    meta_rule_kind kind = meta_rule_kind::blend;
    blend_template tmpl{}; // consulted only by template_blend

    friend bool operator==(const meta_rule1d&, const meta_rule1d&) = default;
};

rule_table apply_meta(const meta_rule1d& meta, rule_table left, rule_table local, rule_table right) noexcept;

enum class mutation_mode { none, uniform_bit_flip, first_bit_only };

// Bit-flip probability per cell per generation. uniform_bit_flip draws one
// uniform per allele (8 per cell), first_bit_only draws one per cell and
// can only flip the 000-allele output; none draws nothing.
struct mutation_spec {
    mutation_mode mode = mutation_mode::none;
    double rate = 0.0;

    friend bool operator==(const mutation_spec&, const mutation_spec&) = default;
};

inline constexpr double mutation_rate_high = 0.05;
inline constexpr double mutation_rate_low = 0.002;

enum class boundary1d { ring, fixed_zero };

// Uniform random genotypes (all 256 tables) then uniform phenotype bits,
// drawn in cell order.
lattice1d random_lattice(int width, xoshiro256ss& rng);

rule_table mutate(rule_table genotype, const mutation_spec& mutation, xoshiro256ss& rng);

// Meta-rule over (left, self, right) genotypes, then mutation, advancing
// the rng in cell order 0..W-1 and bit order 0..7.
std::vector<rule_table> step_genotype(const lattice1d& lattice, const meta_rule1d& meta,
                                      const mutation_spec& mutation, boundary1d boundary,
                                      xoshiro256ss& rng);

// Each cell's current genotype applied to the phenotype triple around it.
std::vector<std::uint8_t> step_phenotype(const lattice1d& lattice, boundary1d boundary);

struct history1d {
    std::vector<lattice1d> rows; // rows[0] is the seed row

    int generations() const noexcept { return static_cast<int>(rows.size()) - 1; }
};

struct run1d_params {
    int width = 256;
    int generations = 200;
    meta_rule1d meta{};
    mutation_spec mutation{};
    boundary1d boundary = boundary1d::ring;
};

// Seeds a lattice from rng and runs it. Within a generation the phenotype
// steps first against the current genotype row, then the genotype row
// steps. rows.size() == generations + 1.
history1d run1d(const run1d_params& params, xoshiro256ss& rng);

// Same, from an explicit seed row.
history1d run1d(const run1d_params& params, lattice1d seed_row, xoshiro256ss& rng);

// One line per generation: space-separated genotype strings, " | ", then
// the phenotype as a 0/1 string.
void write_history_text(std::ostream& out, const history1d& history);

} // namespace metaca
