#include "metaca/experiment.hpp"

#include "metaca/render.hpp"
#include "metaca/version.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace metaca {

namespace {

namespace fs = std::filesystem;

run1d_params params_from(const experiment_config& cfg) {
    run1d_params p;
    p.width = cfg.width;
    p.generations = cfg.generations;
    p.meta = cfg.meta;
    p.mutation = cfg.mutation;
    p.boundary = cfg.boundary;
    return p;
}

std::string pad_generation(int generation, int last_generation) {
    int digits = 1;
    for (int g = last_generation; g >= 10; g /= 10) {
        ++digits;
    }
    digits = std::max(digits, 4);
    std::string text = std::to_string(generation);
    return std::string(static_cast<std::size_t>(digits) - std::min<std::size_t>(digits, text.size()), '0') +
           text;
}

std::ofstream open_out(const fs::path& path, std::ios::openmode mode = std::ios::out) {
    std::ofstream out(path, mode);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    return out;
}

void write_ppm_file(const fs::path& path, const image& img) {
    auto out = open_out(path, std::ios::out | std::ios::binary);
    img.write_ppm(out);
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

void write_manifest(const fs::path& dir, const experiment_config& cfg, std::uint64_t run_index) {
    auto out = open_out(dir / "manifest.txt");
    char hash_text[32];
    std::snprintf(hash_text, sizeof(hash_text), "%016llx",
                  static_cast<unsigned long long>(config_hash(cfg)));
    out << "# metaca manifest\n";
    out << "version = " << version << '\n';
    out << "config_hash = 0x" << hash_text << '\n';
    out << "seed = " << cfg.seed << '\n';
    out << "run_index = " << run_index << '\n';
    out << '\n' << "# canonical config\n" << canonical_config_text(cfg);
}

struct run_summary {
    std::optional<int> stabilization{};
    double phenotype_density = 0.0;
    double genotype_entropy = 0.0;
    long population = 0;
    double mean_weight = 0.0;
};

run_summary execute_1d(const experiment_config& cfg, std::uint64_t run_index, const fs::path& dir) {
    const history1d history = run1d_from_config(cfg, run_index);

    std::vector<metrics_row> rows;
    rows.reserve(history.rows.size());
    for (int g = 0; g <= history.generations(); ++g) {
        rows.push_back(metrics_1d(history, g, cfg.metrics_window));
    }
    {
        auto out = open_out(dir / "metrics.csv");
        write_metrics_csv_1d(out, rows);
    }

    palette pal;
    pal.kind = cfg.palette;
    const std::string layer_name = cfg.layer == layer1d::genotype    ? "genotype"
                                   : cfg.layer == layer1d::phenotype ? "phenotype"
                                                                     : "stacked";
    const std::string frame_name = cfg.name + "_" + layer_name + "_" +
                                   pad_generation(history.generations(), history.generations()) + ".ppm";
    write_ppm_file(dir / frame_name, render_1d(history, pal, cfg.layer));

    if (cfg.export_history) {
        auto out = open_out(dir / (cfg.name + "_history.txt"));
        write_history_text(out, history);
    }

    write_manifest(dir, cfg, run_index);

    run_summary summary;
    summary.stabilization = stabilization_generation(history, cfg.metrics_threshold, cfg.metrics_window);
    summary.phenotype_density = rows.back().phenotype_density;
    summary.genotype_entropy = rows.back().genotype_entropy;
    return summary;
}

run_summary execute_2d(const experiment_config& cfg, std::uint64_t run_index, const fs::path& dir) {
    xoshiro256ss rng = run_stream(cfg.seed, run_index);
    grid2d grid = seed_grid(cfg, rng);

    std::vector<metrics_row> rows;
    rows.reserve(static_cast<std::size_t>(cfg.generations) + 1);

    // rolling window of past grids for the stability column
    std::vector<grid2d> window;
    window.reserve(static_cast<std::size_t>(cfg.metrics_window));

    const auto record = [&](int generation, const grid2d& g) {
        metrics_row row;
        row.generation = generation;
        row.population = population(g);
        row.mean_weight = mean_alive_weight(g);
        if (generation >= cfg.metrics_window) {
            row.stability =
                stability_between(g, window[static_cast<std::size_t>(generation % cfg.metrics_window)]);
        }
        rows.push_back(row);
        if (window.size() < static_cast<std::size_t>(cfg.metrics_window)) {
            window.push_back(g);
        } else {
            window[static_cast<std::size_t>(generation % cfg.metrics_window)] = g;
        }
        if (generation % cfg.snapshot_every == 0 || generation == cfg.generations) {
            write_ppm_file(dir / (cfg.name + "_grid_" + pad_generation(generation, cfg.generations) + ".ppm"),
                           render_2d(g, cfg.w_max));
        }
    };

    record(0, grid);
    for (int g = 1; g <= cfg.generations; ++g) {
        grid = step(grid, cfg.blend, cfg.stimulus, cfg.s_max);
        record(g, grid);
    }

    {
        auto out = open_out(dir / "metrics.csv");
        write_metrics_csv_2d(out, rows);
    }
    write_manifest(dir, cfg, run_index);

    run_summary summary;
    summary.population = rows.back().population;
    summary.mean_weight = rows.back().mean_weight;
    return summary;
}

run_summary execute_single(const experiment_config& cfg, run_mode mode, std::uint64_t run_index,
                           const fs::path& dir) {
    fs::create_directories(dir);
    return mode == run_mode::run1d ? execute_1d(cfg, run_index, dir) : execute_2d(cfg, run_index, dir);
}

int execute_sweep(const experiment_config& cfg) {
    const fs::path root(cfg.out);
    fs::create_directories(root);

    const int runs = cfg.sweep_runs;
    std::vector<run_summary> summaries(static_cast<std::size_t>(runs));

    int jobs = cfg.jobs > 0 ? cfg.jobs : static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::clamp(jobs, 1, runs);

    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    const auto worker = [&] {
        for (;;) {
            const int index = next.fetch_add(1);
            if (index >= runs) {
                return;
            }
            try {
                char sub[16];
                std::snprintf(sub, sizeof(sub), "run_%03d", index);
                summaries[static_cast<std::size_t>(index)] = execute_single(
                    cfg, cfg.sweep_mode, static_cast<std::uint64_t>(index), root / sub);
            } catch (...) {
                const std::lock_guard lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                }
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back(worker);
    }
    for (auto& thread : pool) {
        thread.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }

    {
        auto out = open_out(root / "sweep.csv");
        if (cfg.sweep_mode == run_mode::run1d) {
            out << "run,stabilization_generation,final_phenotype_density,final_genotype_entropy\n";
            for (int r = 0; r < runs; ++r) {
                const run_summary& s = summaries[static_cast<std::size_t>(r)];
                out << r << ',';
                if (s.stabilization) {
                    out << *s.stabilization;
                }
                out << ',' << format_double(s.phenotype_density) << ','
                    << format_double(s.genotype_entropy) << '\n';
            }
        } else {
            out << "run,final_population,final_mean_weight\n";
            for (int r = 0; r < runs; ++r) {
                const run_summary& s = summaries[static_cast<std::size_t>(r)];
                out << r << ',' << s.population << ',' << format_double(s.mean_weight) << '\n';
            }
        }
    }
    write_manifest(root, cfg, 0);
    return 0;
}

} // namespace

history1d run1d_from_config(const experiment_config& config, std::uint64_t run_index) {
    xoshiro256ss rng = run_stream(config.seed, run_index);
    return run1d(params_from(config), rng);
}

grid2d seed_grid(const experiment_config& config, xoshiro256ss& rng) {
    if (config.pattern_file.empty()) {
        return random_grid(config.grid_width, config.grid_height, config.topology, config.seeding, rng);
    }
    std::ifstream in{fs::path(config.pattern_file)};
    if (!in) {
        throw std::runtime_error("cannot open pattern file: " + config.pattern_file);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const genotype2d fill = config.seeding.fixed_genotype.value_or(genotype2d{});
    grid2d grid = grid2d::parse(buffer.str(), config.w_max, fill, config.topology);
    if (!config.seeding.fixed_genotype) {
        // pattern cells draw their genotypes in row-major order
        const auto span = static_cast<std::uint64_t>(config.seeding.genotype_high -
                                                     config.seeding.genotype_low) +
                          1;
        for (cell2d& cell : grid.cells()) {
            int triple[3];
            for (int& v : triple) {
                v = config.seeding.genotype_low + static_cast<int>(rng.next_below(span));
            }
            std::sort(std::begin(triple), std::end(triple));
            cell.genotype = {triple[0], triple[1], triple[2]};
        }
    }
    return grid;
}

std::vector<std::pair<int, grid2d>> run2d_snapshots(const experiment_config& config,
                                                    std::uint64_t run_index) {
    xoshiro256ss rng = run_stream(config.seed, run_index);
    grid2d grid = seed_grid(config, rng);
    std::vector<std::pair<int, grid2d>> snapshots;
    snapshots.emplace_back(0, grid);
    for (int g = 1; g <= config.generations; ++g) {
        grid = step(grid, config.blend, config.stimulus, config.s_max);
        if (g % config.snapshot_every == 0 || g == config.generations) {
            snapshots.emplace_back(g, grid);
        }
    }
    return snapshots;
}

int execute(const experiment_config& config) {
    if (config.mode == run_mode::sweep) {
        return execute_sweep(config);
    }
    execute_single(config, config.mode, 0, fs::path(config.out));
    return 0;
}

} // namespace metaca
