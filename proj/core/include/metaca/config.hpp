#pragma once

#include "metaca/render.hpp"
#include "metaca/sim1d.hpp"
#include "metaca/sim2d.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace metaca {

enum class run_mode { run1d, run2d, sweep };

// Full, seedable description of an experiment. Every field except `mode`
// has a default; unknown keys are rejected while parsing.
struct experiment_config {
    run_mode mode = run_mode::run1d;
    std::string name = "run";
    std::uint64_t seed = 42;
    std::string out = "out";
    int generations = 200;
    int snapshot_every = 1;
    int metrics_window = 10;
    double metrics_threshold = 0.95;
    int jobs = 0; // sweep parallelism; 0 = all cores

    // 1D
    int width = 256;
    meta_rule1d meta{};
    std::string template_text = "0*0**1*1"; // censored pattern, used when meta = template
    mutation_spec mutation{mutation_mode::none, mutation_rate_high};
    boundary1d boundary = boundary1d::ring;
    palette_kind palette = palette_kind::hue256;
    layer1d layer = layer1d::stacked;
    bool export_history = true;

    // 2D
    int grid_width = 128;
    int grid_height = 128;
    std::optional<blend_strategy2d> blend{blend_strategy2d{}};
    stimulus_mode stimulus = stimulus_mode::weight_sum;
    int s_max = 1000;
    int w_max = 125;
    topology2d topology = topology2d::torus;
    grid_seed_spec seeding{};
    std::string pattern_file{};

    // sweep
    run_mode sweep_mode = run_mode::run1d;
    int sweep_runs = 10;

    friend bool operator==(const experiment_config&, const experiment_config&) = default;
};

// Parse failure with the offending 1-based line (0 for whole-file errors).
struct config_error : std::runtime_error {
    config_error(int line_number, const std::string& message)
        : std::runtime_error(line_number > 0 ? "line " + std::to_string(line_number) + ": " + message
                                             : message),
          line(line_number) {}

    int line;
};

// Line-oriented `key = value` text with '#' comments.
experiment_config parse_config(std::string_view text);

experiment_config load_config(const std::filesystem::path& path);

// Canonical, parseable form: fixed key order, normalized values, only the
// keys relevant to the configured mode.
std::string serialize_config(const experiment_config& config);

// The canonical form minus the location-only keys (out, jobs); what the
// manifest embeds and the hash covers.
std::string canonical_config_text(const experiment_config& config);

// FNV-1a over canonical_config_text: the hash moves exactly when a
// semantically meaningful field moves.
std::uint64_t config_hash(const experiment_config& config);

// Version, supported meta-rules / strategies / palettes, and the config
// schema with defaults.
std::string info_text();

} // namespace metaca
