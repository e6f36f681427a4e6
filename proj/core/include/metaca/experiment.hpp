#pragma once

#include "metaca/analysis.hpp"
#include "metaca/config.hpp"

#include <filesystem>
#include <utility>
#include <vector>

namespace metaca {

// The deterministic 1D run described by a config: stream run_index of the
// master seed, seeded lattice, generations+1 rows.
history1d run1d_from_config(const experiment_config& config, std::uint64_t run_index = 0);

// Seed grid for a 2D run: the pattern file when configured, otherwise the
// random generator.
grid2d seed_grid(const experiment_config& config, xoshiro256ss& rng);

// Snapshots of the 2D run at the configured cadence (generation 0 and the
// final generation always included).
std::vector<std::pair<int, grid2d>> run2d_snapshots(const experiment_config& config,
                                                    std::uint64_t run_index = 0);

// Runs the configured experiment and writes frames, metrics.csv, the run
// manifest and (for sweeps) per-run subdirectories plus sweep.csv under
// config.out. Returns 0 on success; throws on I/O or configuration
// failure.
int execute(const experiment_config& config);

} // namespace metaca
