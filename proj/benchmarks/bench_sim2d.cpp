#include <benchmark/benchmark.h>

#include "metaca/sim2d.hpp"

using namespace metaca;

namespace {

grid2d bench_grid(int side, std::uint64_t seed) {
    xoshiro256ss rng(seed);
    grid_seed_spec spec;
    spec.density = 0.4;
    spec.genotype_high = 960;
    return random_grid(side, side, topology2d::torus, spec, rng);
}

void bench_step_union(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    grid2d grid = bench_grid(side, 21);
    const blend_strategy2d strategy{blend_kind2d::union_, blend_source::all_neighbors,
                                    blend_condition::alive_after_propagation};
    for (auto _ : state) {
        grid = step(grid, strategy, stimulus_mode::weight_sum, 1000);
        benchmark::DoNotOptimize(grid.cells().data());
    }
    state.SetItemsProcessed(state.iterations() * side * side);
}
BENCHMARK(bench_step_union)->Arg(64)->Arg(128);

void bench_step_average(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    grid2d grid = bench_grid(side, 22);
    const blend_strategy2d strategy{blend_kind2d::average, blend_source::all_neighbors,
                                    blend_condition::always};
    for (auto _ : state) {
        grid = step(grid, strategy, stimulus_mode::weight_sum, 1000);
        benchmark::DoNotOptimize(grid.cells().data());
    }
    state.SetItemsProcessed(state.iterations() * side * side);
}
BENCHMARK(bench_step_average)->Arg(64)->Arg(128);

void bench_step_no_blend(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    grid2d grid = bench_grid(side, 23);
    for (auto _ : state) {
        grid = step(grid, std::nullopt, stimulus_mode::weight_sum, 1000);
        benchmark::DoNotOptimize(grid.cells().data());
    }
    state.SetItemsProcessed(state.iterations() * side * side);
}
BENCHMARK(bench_step_no_blend)->Arg(128);

} // namespace
