#include "metaca/config.hpp"
#include "metaca/experiment.hpp"
#include "metaca/version.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct common_overrides {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
};

metaca::experiment_config load_with_overrides(const common_overrides& opts) {
    metaca::experiment_config cfg = metaca::load_config(opts.config_path);
    if (opts.seed) {
        cfg.seed = *opts.seed;
    }
    if (opts.out) {
        cfg.out = *opts.out;
    }
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"metaca - deterministic MetaCA simulator"};
    app.set_version_flag("--version", std::string(metaca::version));
    app.require_subcommand(1);

    common_overrides run_opts;
    auto* run = app.add_subcommand("run", "Run the experiment described by a config file");
    run->add_option("config", run_opts.config_path, "config file")->required();
    run->add_option("--seed", run_opts.seed, "override the master seed");
    run->add_option("--out", run_opts.out, "override the output directory");

    common_overrides sweep_opts;
    std::optional<int> sweep_seeds;
    auto* sweep = app.add_subcommand("sweep", "Run a config across several derived seed streams");
    sweep->add_option("config", sweep_opts.config_path, "config file")->required();
    sweep->add_option("--seeds", sweep_seeds, "number of runs (overrides sweep_runs)");
    sweep->add_option("--seed", sweep_opts.seed, "override the master seed");
    sweep->add_option("--out", sweep_opts.out, "override the output directory");

    auto* info = app.add_subcommand("info", "Print version, supported options and the config schema");

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) {
            std::cout << metaca::info_text();
            return 0;
        }
        if (run->parsed()) {
            return metaca::execute(load_with_overrides(run_opts));
        }
        metaca::experiment_config cfg = load_with_overrides(sweep_opts);
        if (cfg.mode != metaca::run_mode::sweep) {
            cfg.sweep_mode = cfg.mode;
            cfg.mode = metaca::run_mode::sweep;
        }
        if (sweep_seeds) {
            cfg.sweep_runs = *sweep_seeds;
        }
        if (cfg.sweep_runs < 1) {
            throw std::runtime_error("--seeds must be at least 1");
        }
        return metaca::execute(cfg);
    } catch (const std::exception& e) {
        std::cerr << "metaca: " << e.what() << '\n';
        return 1;
    }
}
