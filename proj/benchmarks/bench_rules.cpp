#include <benchmark/benchmark.h>

#include "metaca/blend.hpp"
#include "metaca/rng.hpp"

using namespace metaca;

namespace {

std::vector<rule_table> random_rules(std::size_t count, std::uint64_t seed) {
    xoshiro256ss rng(seed);
    std::vector<rule_table> rules(count);
    for (auto& r : rules) {
        r = rule_table::from_number(rng.next_byte(), rule_convention::ascending);
    }
    return rules;
}

void bench_multiply(benchmark::State& state) {
    const auto rules = random_rules(3 * 1024, 1);
    std::size_t i = 0;
    for (auto _ : state) {
        const rule_table out = multiply(rules[i], rules[i + 1], rules[i + 2]);
        benchmark::DoNotOptimize(out);
        i = (i + 3) % (rules.size() - 3);
    }
}
BENCHMARK(bench_multiply);

void bench_blend(benchmark::State& state) {
    const auto rules = random_rules(3 * 1024, 2);
    std::size_t i = 0;
    for (auto _ : state) {
        const rule_table out = blend(rules[i], rules[i + 1], rules[i + 2]);
        benchmark::DoNotOptimize(out);
        i = (i + 3) % (rules.size() - 3);
    }
}
BENCHMARK(bench_blend);

void bench_blend_via_weakening(benchmark::State& state) {
    const auto rules = random_rules(3 * 1024, 3);
    std::size_t i = 0;
    for (auto _ : state) {
        const rule_table out = blend_via_weakening(rules[i], rules[i + 1], rules[i + 2]);
        benchmark::DoNotOptimize(out);
        i = (i + 3) % (rules.size() - 3);
    }
}
BENCHMARK(bench_blend_via_weakening);

void bench_classify(benchmark::State& state) {
    const auto rules = random_rules(1024, 4);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(rules[i]));
        i = (i + 1) % rules.size();
    }
}
BENCHMARK(bench_classify);

} // namespace
