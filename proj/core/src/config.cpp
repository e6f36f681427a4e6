#include "metaca/config.hpp"

#include "metaca/analysis.hpp"
#include "metaca/version.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace metaca {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

template <typename T>
T parse_number(std::string_view text, int line, const char* what) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw config_error(line, std::string(what) + " is not a valid number: '" + std::string(text) + "'");
    }
    return value;
}

bool parse_bool(std::string_view text, int line, const char* what) {
    if (text == "true") {
        return true;
    }
    if (text == "false") {
        return false;
    }
    throw config_error(line, std::string(what) + " must be 'true' or 'false', got '" + std::string(text) + "'");
}

struct enum_entry {
    std::string_view token;
    int value;
};

int parse_enum(std::string_view text, std::span<const enum_entry> table, int line, const char* what) {
    for (const auto& e : table) {
        if (e.token == text) {
            return e.value;
        }
    }
    std::string valid;
    for (const auto& e : table) {
        if (!valid.empty()) {
            valid += " | ";
        }
        valid += e.token;
    }
    throw config_error(line, std::string(what) + " must be one of {" + valid + "}, got '" +
                                 std::string(text) + "'");
}

std::string_view enum_token(int value, std::span<const enum_entry> table) {
    for (const auto& e : table) {
        if (e.value == value) {
            return e.token;
        }
    }
    return "?";
}

constexpr enum_entry mode_table[] = {{"run1d", static_cast<int>(run_mode::run1d)},
                                     {"run2d", static_cast<int>(run_mode::run2d)},
                                     {"sweep", static_cast<int>(run_mode::sweep)}};
constexpr enum_entry meta_table[] = {{"multiply", static_cast<int>(meta_rule_kind::multiply)},
                                     {"blend", static_cast<int>(meta_rule_kind::blend)},
                                     {"template", static_cast<int>(meta_rule_kind::template_blend)}};
constexpr enum_entry mutation_table[] = {{"none", static_cast<int>(mutation_mode::none)},
                                         {"uniform", static_cast<int>(mutation_mode::uniform_bit_flip)},
                                         {"first_bit", static_cast<int>(mutation_mode::first_bit_only)}};
constexpr enum_entry boundary_table[] = {{"ring", static_cast<int>(boundary1d::ring)},
                                         {"fixed", static_cast<int>(boundary1d::fixed_zero)}};
constexpr enum_entry palette_table[] = {{"hue", static_cast<int>(palette_kind::hue256)},
                                        {"grey", static_cast<int>(palette_kind::greyscale_highlight)}};
constexpr enum_entry layer_table[] = {{"genotype", static_cast<int>(layer1d::genotype)},
                                      {"phenotype", static_cast<int>(layer1d::phenotype)},
                                      {"stacked", static_cast<int>(layer1d::stacked)}};
constexpr enum_entry blend_kind_table[] = {{"union", static_cast<int>(blend_kind2d::union_)},
                                           {"intersection", static_cast<int>(blend_kind2d::intersection)},
                                           {"average", static_cast<int>(blend_kind2d::average)}};
constexpr enum_entry source_table[] = {{"alive", static_cast<int>(blend_source::alive_neighbors)},
                                       {"all", static_cast<int>(blend_source::all_neighbors)}};
constexpr enum_entry condition_table[] = {
    {"alive_next", static_cast<int>(blend_condition::alive_after_propagation)},
    {"always", static_cast<int>(blend_condition::always)}};
constexpr enum_entry stimulus_table[] = {{"count", static_cast<int>(stimulus_mode::count_scaled)},
                                         {"weight", static_cast<int>(stimulus_mode::weight_sum)}};
constexpr enum_entry topology_table[] = {{"torus", static_cast<int>(topology2d::torus)},
                                         {"bounded", static_cast<int>(topology2d::bounded)}};

// Parse state that cannot be finalized line-by-line.
struct parse_scratch {
    bool blend_enabled = true;
    blend_strategy2d strategy{};
    std::string genotype_text = "random";
    std::map<std::string, int, std::less<>> line_of; // key -> line for late diagnostics
};

int key_line(const parse_scratch& scratch, std::string_view key) {
    const auto it = scratch.line_of.find(key);
    return it == scratch.line_of.end() ? 0 : it->second;
}

void finalize(experiment_config& cfg, parse_scratch& scratch) {
    cfg.blend = scratch.blend_enabled ? std::optional<blend_strategy2d>(scratch.strategy) : std::nullopt;
    try {
        cfg.meta.tmpl = blend_template::from_string(cfg.template_text);
    } catch (const std::invalid_argument& e) {
        throw config_error(key_line(scratch, "template"), e.what());
    }
    if (!scratch.line_of.contains("weight_max")) {
        cfg.seeding.weight_max = cfg.w_max;
    }
    if (!scratch.line_of.contains("genotype_high")) {
        cfg.seeding.genotype_high = cfg.s_max;
    }

    if (scratch.genotype_text == "random") {
        cfg.seeding.fixed_genotype.reset();
    } else {
        try {
            cfg.seeding.fixed_genotype = parse_genotype(scratch.genotype_text, cfg.s_max);
        } catch (const std::invalid_argument& e) {
            throw config_error(key_line(scratch, "genotype"), e.what());
        }
    }

    const auto fail = [&](std::string_view key, const std::string& message) {
        throw config_error(key_line(scratch, key), message);
    };
    if (cfg.generations < 0) {
        fail("generations", "generations must be non-negative");
    }
    if (cfg.snapshot_every < 1) {
        fail("snapshot_every", "snapshot_every must be at least 1");
    }
    if (cfg.metrics_window < 1) {
        fail("metrics_window", "metrics_window must be at least 1");
    }
    if (!(cfg.metrics_threshold > 0.0 && cfg.metrics_threshold <= 1.0)) {
        fail("metrics_threshold", "metrics_threshold must be in (0,1]");
    }
    if (cfg.jobs < 0) {
        fail("jobs", "jobs must be non-negative");
    }
    if (cfg.width < 3) {
        fail("width", "width must be at least 3");
    }
    if (cfg.mutation.rate < 0.0 || cfg.mutation.rate > 1.0) {
        fail("mutation_rate", "mutation_rate must be in [0,1]");
    }
    if (cfg.grid_width < 3) {
        fail("grid_width", "grid_width must be at least 3");
    }
    if (cfg.grid_height < 3) {
        fail("grid_height", "grid_height must be at least 3");
    }
    if (cfg.s_max < 8 || cfg.s_max % 8 != 0) {
        fail("s_max", "s_max must be a positive multiple of 8");
    }
    if (cfg.w_max < 1) {
        fail("w_max", "w_max must be at least 1");
    }
    const bool is_2d = cfg.mode == run_mode::run2d ||
                       (cfg.mode == run_mode::sweep && cfg.sweep_mode == run_mode::run2d);
    if (is_2d && cfg.stimulus == stimulus_mode::weight_sum && 8 * cfg.w_max > cfg.s_max) {
        fail("w_max", "weight stimulus requires 8 * w_max <= s_max");
    }
    if (cfg.seeding.weight_min < 0 || cfg.seeding.weight_min > cfg.seeding.weight_max) {
        fail("weight_min", "weight bounds must satisfy 0 <= weight_min <= weight_max");
    }
    if (cfg.seeding.weight_max > cfg.w_max) {
        fail("weight_max", "weight_max cannot exceed w_max");
    }
    if (cfg.seeding.genotype_low < 0 || cfg.seeding.genotype_low > cfg.seeding.genotype_high) {
        fail("genotype_low", "genotype bounds must satisfy 0 <= genotype_low <= genotype_high");
    }
    if (cfg.seeding.genotype_high > cfg.s_max) {
        fail("genotype_high", "genotype_high cannot exceed s_max");
    }
    if (cfg.seeding.density < 0.0 || cfg.seeding.density > 1.0) {
        fail("density", "density must be in [0,1]");
    }
    if (cfg.sweep_runs < 1) {
        fail("sweep_runs", "sweep_runs must be at least 1");
    }
    if (cfg.mode == run_mode::sweep && cfg.sweep_mode == run_mode::sweep) {
        fail("sweep_mode", "sweep_mode must be run1d or run2d");
    }
    if (cfg.name.empty() ||
        cfg.name.find_first_not_of(
            "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_.-") != std::string::npos) {
        fail("name", "name may only contain letters, digits, '_', '.', '-'");
    }
}

void assign(experiment_config& cfg, parse_scratch& scratch, std::string_view key,
            std::string_view value, int line) {
    if (key == "mode") {
        cfg.mode = static_cast<run_mode>(parse_enum(value, mode_table, line, "mode"));
    } else if (key == "name") {
        cfg.name = std::string(value);
    } else if (key == "seed") {
        cfg.seed = parse_number<std::uint64_t>(value, line, "seed");
    } else if (key == "out") {
        cfg.out = std::string(value);
    } else if (key == "generations") {
        cfg.generations = parse_number<int>(value, line, "generations");
    } else if (key == "snapshot_every") {
        cfg.snapshot_every = parse_number<int>(value, line, "snapshot_every");
    } else if (key == "metrics_window") {
        cfg.metrics_window = parse_number<int>(value, line, "metrics_window");
    } else if (key == "metrics_threshold") {
        cfg.metrics_threshold = parse_number<double>(value, line, "metrics_threshold");
    } else if (key == "jobs") {
        cfg.jobs = parse_number<int>(value, line, "jobs");
    } else if (key == "width") {
        cfg.width = parse_number<int>(value, line, "width");
    } else if (key == "meta") {
        cfg.meta.kind = static_cast<meta_rule_kind>(parse_enum(value, meta_table, line, "meta"));
    } else if (key == "template") {
        cfg.template_text = std::string(value);
    } else if (key == "mutation") {
        cfg.mutation.mode = static_cast<mutation_mode>(parse_enum(value, mutation_table, line, "mutation"));
    } else if (key == "mutation_rate") {
        if (value == "high") {
            cfg.mutation.rate = mutation_rate_high;
        } else if (value == "low") {
            cfg.mutation.rate = mutation_rate_low;
        } else {
            cfg.mutation.rate = parse_number<double>(value, line, "mutation_rate");
        }
        if (cfg.mutation.rate < 0.0 || cfg.mutation.rate > 1.0) {
            throw config_error(line, "mutation_rate must be in [0,1]");
        }
    } else if (key == "boundary") {
        cfg.boundary = static_cast<boundary1d>(parse_enum(value, boundary_table, line, "boundary"));
    } else if (key == "palette") {
        cfg.palette = static_cast<palette_kind>(parse_enum(value, palette_table, line, "palette"));
    } else if (key == "layer") {
        cfg.layer = static_cast<layer1d>(parse_enum(value, layer_table, line, "layer"));
    } else if (key == "export_history") {
        cfg.export_history = parse_bool(value, line, "export_history");
    } else if (key == "grid_width") {
        cfg.grid_width = parse_number<int>(value, line, "grid_width");
    } else if (key == "grid_height") {
        cfg.grid_height = parse_number<int>(value, line, "grid_height");
    } else if (key == "blend") {
        if (value == "none") {
            scratch.blend_enabled = false;
        } else {
            scratch.blend_enabled = true;
            scratch.strategy.kind =
                static_cast<blend_kind2d>(parse_enum(value, blend_kind_table, line, "blend"));
        }
    } else if (key == "blend_source") {
        scratch.strategy.source = static_cast<blend_source>(parse_enum(value, source_table, line, "blend_source"));
    } else if (key == "blend_condition") {
        scratch.strategy.condition =
            static_cast<blend_condition>(parse_enum(value, condition_table, line, "blend_condition"));
    } else if (key == "stimulus") {
        cfg.stimulus = static_cast<stimulus_mode>(parse_enum(value, stimulus_table, line, "stimulus"));
    } else if (key == "s_max") {
        cfg.s_max = parse_number<int>(value, line, "s_max");
    } else if (key == "w_max") {
        cfg.w_max = parse_number<int>(value, line, "w_max");
    } else if (key == "topology") {
        cfg.topology = static_cast<topology2d>(parse_enum(value, topology_table, line, "topology"));
    } else if (key == "density") {
        cfg.seeding.density = parse_number<double>(value, line, "density");
    } else if (key == "weight_min") {
        cfg.seeding.weight_min = parse_number<int>(value, line, "weight_min");
    } else if (key == "weight_max") {
        cfg.seeding.weight_max = parse_number<int>(value, line, "weight_max");
    } else if (key == "genotype") {
        scratch.genotype_text = std::string(value);
    } else if (key == "genotype_low") {
        cfg.seeding.genotype_low = parse_number<int>(value, line, "genotype_low");
    } else if (key == "genotype_high") {
        cfg.seeding.genotype_high = parse_number<int>(value, line, "genotype_high");
    } else if (key == "pattern_file") {
        cfg.pattern_file = std::string(value);
    } else if (key == "sweep_mode") {
        cfg.sweep_mode = static_cast<run_mode>(parse_enum(value, mode_table, line, "sweep_mode"));
    } else if (key == "sweep_runs") {
        cfg.sweep_runs = parse_number<int>(value, line, "sweep_runs");
    } else {
        throw config_error(line, "unknown key '" + std::string(key) + "'");
    }
}

} // namespace

experiment_config parse_config(std::string_view text) {
    experiment_config cfg;
    parse_scratch scratch;
    bool mode_seen = false;

    int line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_number;

        const auto hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw config_error(line_number, "expected 'key = value'");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw config_error(line_number, "missing key before '='");
        }
        if (value.empty()) {
            throw config_error(line_number, "missing value for '" + std::string(key) + "'");
        }
        if (scratch.line_of.contains(key)) {
            throw config_error(line_number, "duplicate key '" + std::string(key) + "'");
        }
        assign(cfg, scratch, key, value, line_number);
        scratch.line_of.emplace(std::string(key), line_number);
        if (key == "mode") {
            mode_seen = true;
        }
    }

    if (!mode_seen) {
        throw config_error(0, "missing required key 'mode'");
    }
    finalize(cfg, scratch);
    return cfg;
}

experiment_config load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

namespace {

void emit_1d(std::ostringstream& out, const experiment_config& cfg) {
    out << "width = " << cfg.width << '\n';
    out << "meta = " << enum_token(static_cast<int>(cfg.meta.kind), meta_table) << '\n';
    out << "template = " << cfg.template_text << '\n';
    out << "mutation = " << enum_token(static_cast<int>(cfg.mutation.mode), mutation_table) << '\n';
    out << "mutation_rate = " << format_double(cfg.mutation.rate) << '\n';
    out << "boundary = " << enum_token(static_cast<int>(cfg.boundary), boundary_table) << '\n';
    out << "palette = " << enum_token(static_cast<int>(cfg.palette), palette_table) << '\n';
    out << "layer = " << enum_token(static_cast<int>(cfg.layer), layer_table) << '\n';
    out << "export_history = " << (cfg.export_history ? "true" : "false") << '\n';
}

void emit_2d(std::ostringstream& out, const experiment_config& cfg) {
    out << "grid_width = " << cfg.grid_width << '\n';
    out << "grid_height = " << cfg.grid_height << '\n';
    if (cfg.blend) {
        out << "blend = " << enum_token(static_cast<int>(cfg.blend->kind), blend_kind_table) << '\n';
        out << "blend_source = " << enum_token(static_cast<int>(cfg.blend->source), source_table) << '\n';
        out << "blend_condition = " << enum_token(static_cast<int>(cfg.blend->condition), condition_table)
            << '\n';
    } else {
        out << "blend = none\n";
    }
    out << "stimulus = " << enum_token(static_cast<int>(cfg.stimulus), stimulus_table) << '\n';
    out << "s_max = " << cfg.s_max << '\n';
    out << "w_max = " << cfg.w_max << '\n';
    out << "topology = " << enum_token(static_cast<int>(cfg.topology), topology_table) << '\n';
    out << "density = " << format_double(cfg.seeding.density) << '\n';
    out << "weight_min = " << cfg.seeding.weight_min << '\n';
    out << "weight_max = " << cfg.seeding.weight_max << '\n';
    if (cfg.seeding.fixed_genotype) {
        out << "genotype = " << to_string(*cfg.seeding.fixed_genotype) << '\n';
    } else {
        out << "genotype = random\n";
        out << "genotype_low = " << cfg.seeding.genotype_low << '\n';
        out << "genotype_high = " << cfg.seeding.genotype_high << '\n';
    }
    if (!cfg.pattern_file.empty()) {
        out << "pattern_file = " << cfg.pattern_file << '\n';
    }
}

std::string serialize_impl(const experiment_config& cfg, bool include_location_keys) {
    std::ostringstream out;
    out << "mode = " << enum_token(static_cast<int>(cfg.mode), mode_table) << '\n';
    out << "name = " << cfg.name << '\n';
    out << "seed = " << cfg.seed << '\n';
    if (include_location_keys) {
        out << "out = " << cfg.out << '\n';
        out << "jobs = " << cfg.jobs << '\n';
    }
    out << "generations = " << cfg.generations << '\n';
    out << "snapshot_every = " << cfg.snapshot_every << '\n';
    out << "metrics_window = " << cfg.metrics_window << '\n';
    out << "metrics_threshold = " << format_double(cfg.metrics_threshold) << '\n';

    run_mode payload = cfg.mode;
    if (cfg.mode == run_mode::sweep) {
        out << "sweep_mode = " << enum_token(static_cast<int>(cfg.sweep_mode), mode_table) << '\n';
        out << "sweep_runs = " << cfg.sweep_runs << '\n';
        payload = cfg.sweep_mode;
    }
    if (payload == run_mode::run1d) {
        emit_1d(out, cfg);
    } else {
        emit_2d(out, cfg);
    }
    return out.str();
}

} // namespace

std::string serialize_config(const experiment_config& config) {
    return serialize_impl(config, true);
}

std::string canonical_config_text(const experiment_config& config) {
    return serialize_impl(config, false);
}

std::uint64_t config_hash(const experiment_config& config) {
    const std::string canonical = canonical_config_text(config);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : canonical) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string info_text() {
    std::ostringstream out;
    out << "metaca " << version << " - deterministic MetaCA simulator\n\n";
    out << "meta-rules (1D genotype evolution): multiply, blend, template\n";
    out << "blend strategies (2D):              union, intersection, average (or none)\n";
    out << "blend sources (2D):                 alive, all\n";
    out << "blend conditions (2D):              alive_next, always\n";
    out << "stimulus modes (2D):                count, weight\n";
    out << "palettes:                           hue, grey (1D genotype), weight (2D)\n";
    out << "mutation modes (1D):                none, uniform, first_bit\n";
    out << "mutation rate presets:              high = " << format_double(mutation_rate_high)
        << ", low = " << format_double(mutation_rate_low) << "\n\n";
    out << "config schema (key = default):\n"
           "  mode = <required>        run1d | run2d | sweep\n"
           "  name = run               artifact file prefix\n"
           "  seed = 42                64-bit master seed\n"
           "  out = out                output directory\n"
           "  jobs = 0                 sweep worker threads, 0 = all cores\n"
           "  generations = 200        steps after the seed row/grid\n"
           "  snapshot_every = 1       2D frame cadence\n"
           "  metrics_window = 10      stability window k\n"
           "  metrics_threshold = 0.95 stabilization threshold\n"
           "  width = 256              [1d] lattice width (>= 3)\n"
           "  meta = blend             [1d] multiply | blend | template\n"
           "  template = 0*0**1*1      [1d] 8 chars of 0/1/* for meta = template\n"
           "  mutation = none          [1d] none | uniform | first_bit\n"
           "  mutation_rate = 0.05     [1d] probability, or preset high | low\n"
           "  boundary = ring          [1d] ring | fixed\n"
           "  palette = hue            [1d] hue | grey\n"
           "  layer = stacked          [1d] genotype | phenotype | stacked\n"
           "  export_history = true    [1d] write history.txt\n"
           "  grid_width = 128         [2d] columns (>= 3)\n"
           "  grid_height = 128        [2d] rows (>= 3)\n"
           "  blend = union            [2d] union | intersection | average | none\n"
           "  blend_source = all       [2d] alive | all\n"
           "  blend_condition = alive_next  [2d] alive_next | always\n"
           "  stimulus = weight        [2d] count | weight\n"
           "  s_max = 1000             [2d] stimulus line, multiple of 8\n"
           "  w_max = 125              [2d] weight ceiling (weight mode: 8*w_max <= s_max)\n"
           "  topology = torus         [2d] torus | bounded\n"
           "  density = 0.3            [2d] random seed alive fraction\n"
           "  weight_min = 0           [2d] random seed weight lower bound\n"
           "  weight_max = w_max       [2d] random seed weight upper bound\n"
           "  genotype = random        [2d] 'x,y,z' fixed, or random sorted triples\n"
           "  genotype_low = 1         [2d] random genotype lower bound\n"
           "  genotype_high = s_max    [2d] random genotype upper bound\n"
           "  pattern_file =           [2d] optional seed pattern ('.'/hex rows)\n"
           "  sweep_mode = run1d       [sweep] run1d | run2d\n"
           "  sweep_runs = 10          [sweep] number of runs\n";
    return out.str();
}

} // namespace metaca
