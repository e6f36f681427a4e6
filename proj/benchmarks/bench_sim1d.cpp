#include <benchmark/benchmark.h>

#include "metaca/sim1d.hpp"

using namespace metaca;

namespace {

void bench_step_genotype(benchmark::State& state, meta_rule_kind kind) {
    const int width = static_cast<int>(state.range(0));
    xoshiro256ss rng(11);
    lattice1d lattice = random_lattice(width, rng);
    const meta_rule1d meta{kind, {}};
    for (auto _ : state) {
        lattice.genotypes = step_genotype(lattice, meta, {}, boundary1d::ring, rng);
        benchmark::DoNotOptimize(lattice.genotypes.data());
    }
    state.SetItemsProcessed(state.iterations() * width);
}

void bench_multiply_step(benchmark::State& state) {
    bench_step_genotype(state, meta_rule_kind::multiply);
}
BENCHMARK(bench_multiply_step)->Arg(500)->Arg(4096);

void bench_blend_step(benchmark::State& state) {
    bench_step_genotype(state, meta_rule_kind::blend);
}
BENCHMARK(bench_blend_step)->Arg(500)->Arg(4096);

void bench_full_generation(benchmark::State& state) {
    const int width = static_cast<int>(state.range(0));
    xoshiro256ss rng(13);
    lattice1d lattice = random_lattice(width, rng);
    const meta_rule1d meta{meta_rule_kind::blend, {}};
    const mutation_spec mutation{mutation_mode::uniform_bit_flip, 0.002};
    for (auto _ : state) {
        lattice.phenotypes = step_phenotype(lattice, boundary1d::ring);
        lattice.genotypes = step_genotype(lattice, meta, mutation, boundary1d::ring, rng);
        benchmark::DoNotOptimize(lattice.genotypes.data());
    }
    state.SetItemsProcessed(state.iterations() * width);
}
BENCHMARK(bench_full_generation)->Arg(500);

} // namespace
