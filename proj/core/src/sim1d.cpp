#include "metaca/sim1d.hpp"

#include <cassert>
#include <ostream>
#include <stdexcept>

namespace metaca {

namespace {

void validate(const run1d_params& params) {
    if (params.width < 3) {
        throw std::invalid_argument("lattice width must be at least 3");
    }
    if (params.generations < 0) {
        throw std::invalid_argument("generation count must be non-negative");
    }
    if (params.mutation.rate < 0.0 || params.mutation.rate > 1.0) {
        throw std::invalid_argument("mutation rate must be in [0,1]");
    }
}

} // namespace

rule_table apply_meta(const meta_rule1d& meta, rule_table left, rule_table local, rule_table right) noexcept {
    switch (meta.kind) {
    case meta_rule_kind::multiply: return multiply(left, local, right);
    case meta_rule_kind::blend: return blend(left, local, right);
    case meta_rule_kind::template_blend: return template_blend(meta.tmpl, left, local, right);
    }
    return local;
}

lattice1d random_lattice(int width, xoshiro256ss& rng) {
    if (width < 3) {
        throw std::invalid_argument("lattice width must be at least 3");
    }
    lattice1d lattice;
    lattice.genotypes.reserve(static_cast<std::size_t>(width));
    lattice.phenotypes.reserve(static_cast<std::size_t>(width));
    for (int j = 0; j < width; ++j) {
        lattice.genotypes.push_back(
            rule_table::from_number(rng.next_byte(), rule_convention::ascending));
    }
    for (int j = 0; j < width; ++j) {
        lattice.phenotypes.push_back(static_cast<std::uint8_t>(rng.next_bit()));
    }
    return lattice;
}

rule_table mutate(rule_table genotype, const mutation_spec& mutation, xoshiro256ss& rng) {
    switch (mutation.mode) {
    case mutation_mode::none:
        return genotype;
    case mutation_mode::uniform_bit_flip:
        for (int n = 0; n < 8; ++n) {
            if (rng.next_double() < mutation.rate) {
                genotype = genotype.with_output(n, !genotype.output(n));
            }
        }
        return genotype;
    case mutation_mode::first_bit_only:
        if (rng.next_double() < mutation.rate) {
            genotype = genotype.with_output(0, !genotype.output(0));
        }
        return genotype;
    }
    return genotype;
}

std::vector<rule_table> step_genotype(const lattice1d& lattice, const meta_rule1d& meta,
                                      const mutation_spec& mutation, boundary1d boundary,
                                      xoshiro256ss& rng) {
    const int w = lattice.width();
    assert(w >= 3);
    std::vector<rule_table> next(static_cast<std::size_t>(w));
    const rule_table border; // all-zeros table outside a fixed lattice
    for (int j = 0; j < w; ++j) {
        const auto jz = static_cast<std::size_t>(j);
        rule_table left, right;
        if (boundary == boundary1d::ring) {
            left = lattice.genotypes[static_cast<std::size_t>((j + w - 1) % w)];
            right = lattice.genotypes[static_cast<std::size_t>((j + 1) % w)];
        } else {
            left = j > 0 ? lattice.genotypes[jz - 1] : border;
            right = j < w - 1 ? lattice.genotypes[jz + 1] : border;
        }
        const rule_table evolved = apply_meta(meta, left, lattice.genotypes[jz], right);
        next[jz] = mutate(evolved, mutation, rng);
    }
    return next;
}

std::vector<std::uint8_t> step_phenotype(const lattice1d& lattice, boundary1d boundary) {
    const int w = lattice.width();
    assert(w >= 3);
    assert(lattice.phenotypes.size() == lattice.genotypes.size());
    std::vector<std::uint8_t> next(static_cast<std::size_t>(w));
    for (int j = 0; j < w; ++j) {
        const auto jz = static_cast<std::size_t>(j);
        bool left = false, right = false;
        if (boundary == boundary1d::ring) {
            left = lattice.phenotypes[static_cast<std::size_t>((j + w - 1) % w)];
            right = lattice.phenotypes[static_cast<std::size_t>((j + 1) % w)];
        } else {
            left = j > 0 && lattice.phenotypes[jz - 1];
            right = j < w - 1 && lattice.phenotypes[jz + 1];
        }
        next[jz] = lattice.genotypes[jz].apply(left, lattice.phenotypes[jz], right);
    }
    return next;
}

history1d run1d(const run1d_params& params, lattice1d seed_row, xoshiro256ss& rng) {
    validate(params);
    if (seed_row.width() != params.width || seed_row.phenotypes.size() != seed_row.genotypes.size()) {
        throw std::invalid_argument("seed row does not match the configured width");
    }
    history1d history;
    history.rows.reserve(static_cast<std::size_t>(params.generations) + 1);
    history.rows.push_back(std::move(seed_row));
    for (int g = 0; g < params.generations; ++g) {
        const lattice1d& current = history.rows.back();
        lattice1d next;
        next.phenotypes = step_phenotype(current, params.boundary);
        next.genotypes = step_genotype(current, params.meta, params.mutation, params.boundary, rng);
        history.rows.push_back(std::move(next));
    }
    return history;
}

history1d run1d(const run1d_params& params, xoshiro256ss& rng) {
    validate(params);
    return run1d(params, random_lattice(params.width, rng), rng);
}

void write_history_text(std::ostream& out, const history1d& history) {
    for (const lattice1d& row : history.rows) {
        for (int j = 0; j < row.width(); ++j) {
            if (j > 0) {
                out << ' ';
            }
            out << row.genotypes[static_cast<std::size_t>(j)].to_string();
        }
        out << " | ";
        for (std::uint8_t bit : row.phenotypes) {
            out << (bit ? '1' : '0');
        }
        out << '\n';
    }
}

} // namespace metaca
