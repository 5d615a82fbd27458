// lanecraft CLI: run matches and experiment suites, export heatmaps and
// replays. Outputs are deterministic for identical flags and inputs.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lanecraft/config.hpp"
#include "lanecraft/experiments.hpp"
#include "lanecraft/grid_io.hpp"
#include "lanecraft/influence.hpp"

namespace fs = std::filesystem;
using namespace lanecraft;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitAssert = 3;

struct CommonOpts {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_dir = "out";
    std::string phi;  // "", "on", "off"
    int jobs = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_jobs) {
    cmd->add_option("--config", opts.config_path, "match config JSON document");
    cmd->add_option("--seed", opts.seed, "seed (fallback: LANECRAFT_SEED, then config)");
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--phi", opts.phi, "override the creep-HP term: on|off")
        ->check(CLI::IsMember({"on", "off"}));
    if (with_jobs) {
        cmd->add_option("--jobs", opts.jobs, "worker threads (default: available CPUs)");
    }
}

// Flag beats environment beats config document.
MatchConfig resolve_config(const CommonOpts& opts) {
    MatchConfig config;
    if (!opts.config_path.empty()) config = load_config_file(opts.config_path);
    if (const char* env = std::getenv("LANECRAFT_SEED"); env && !opts.seed) {
        config.seed = std::stoull(env);
    }
    if (opts.seed) config.seed = *opts.seed;
    if (opts.phi == "on") config.tuning.phi_enabled = true;
    if (opts.phi == "off") config.tuning.phi_enabled = false;
    return config;
}

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

int cmd_simulate(const CommonOpts& opts) {
    const MatchConfig config = resolve_config(opts);
    fs::create_directories(opts.out_dir);
    const fs::path replay_path = fs::path(opts.out_dir) / "replay.jsonl";
    const MatchStats stats = run_match(config, config.seed, replay_path.string());
    write_text_file(fs::path(opts.out_dir) / "stats.json", match_stats_to_json(stats));
    std::cout << match_stats_to_json(stats);
    return kExitOk;
}

int cmd_solo_suite(const CommonOpts& opts, int n, bool check, bool keep_replays) {
    const MatchConfig config = resolve_config(opts);
    fs::create_directories(opts.out_dir);
    std::string replay_dir;
    if (keep_replays) {
        replay_dir = (fs::path(opts.out_dir) / "replays").string();
        fs::create_directories(replay_dir);
    }
    const SoloSummary summary =
        run_solo_win_suite(config, n, config.seed, opts.jobs, replay_dir);
    write_text_file(fs::path(opts.out_dir) / "solo_summary.json",
                    solo_summary_to_json(summary));
    const std::string text = solo_summary_to_text(summary);
    write_text_file(fs::path(opts.out_dir) / "solo_summary.txt", text);
    std::cout << text;
    if (check && (summary.wins != summary.n || summary.total_deaths != 0 ||
                  summary.total_safety_violations != 0)) {
        std::cerr << "assertion failed: expected " << summary.n
                  << " wins with 0 deaths and 0 safety violations\n";
        return kExitAssert;
    }
    return kExitOk;
}

int cmd_farm_ablation(const CommonOpts& opts, int n, bool check) {
    const MatchConfig config = resolve_config(opts);
    fs::create_directories(opts.out_dir);
    const AblationReport report = run_farm_ablation(config, n, config.seed, opts.jobs);
    write_text_file(fs::path(opts.out_dir) / "ablation.json", ablation_to_json(report));
    const std::string text = ablation_to_text(report);
    write_text_file(fs::path(opts.out_dir) / "ablation.txt", text);
    std::cout << text;
    if (check && report.ratio() < 1.15) {
        std::cerr << "assertion failed: cpm ratio " << report.ratio() << " < 1.15\n";
        return kExitAssert;
    }
    return kExitOk;
}

void write_heatmap_files(const fs::path& dir, const std::string& stem,
                         const InfluenceGrid& grid) {
    std::ofstream csv(dir / (stem + ".csv"), std::ios::binary);
    write_grid_csv(grid, csv);
    std::ofstream pgm(dir / (stem + ".pgm"), std::ios::binary);
    write_grid_pgm(grid, pgm);
}

int cmd_heatmap(const CommonOpts& opts, const std::string& scenario) {
    const auto scene = make_heatmap_scene(scenario);
    if (!scene) {
        std::cerr << "unknown scenario '" << scenario << "'; valid names:";
        for (const auto& name : heatmap_scene_names()) std::cerr << ' ' << name;
        std::cerr << '\n';
        return kExitUsage;
    }
    fs::create_directories(opts.out_dir);
    const fs::path dir(opts.out_dir);
    if (scene->sum_variant) {
        write_heatmap_files(dir, scene->name + "_max",
                            compose(scene->view, scene->spec, scene->tuning));
        write_heatmap_files(
            dir, scene->name + "_sum",
            compose(scene->view, scene->spec, scene->tuning, CreepCombine::Sum));
    } else {
        write_heatmap_files(dir, scene->name,
                            compose(scene->view, scene->spec, scene->tuning));
    }
    std::cout << "wrote heatmap '" << scene->name << "' to " << opts.out_dir << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lanecraft: influence-map lane agent, simulator and experiments"};
    app.require_subcommand(1);

    CommonOpts sim_opts;
    CLI::App* simulate = app.add_subcommand("simulate", "run one match, write stats + replay");
    add_common(simulate, sim_opts, false);

    CommonOpts solo_opts;
    int solo_n = 20;
    bool solo_assert = false;
    bool solo_replays = false;
    CLI::App* solo = app.add_subcommand("solo-suite", "seeded solo-win experiment");
    add_common(solo, solo_opts, true);
    solo->add_option("--n", solo_n, "number of matches")->check(CLI::PositiveNumber);
    solo->add_flag("--assert", solo_assert, "exit 3 unless all matches are deathless wins");
    solo->add_flag("--replays", solo_replays, "persist one replay file per seed");

    CommonOpts farm_opts;
    int farm_n = 10;
    bool farm_assert = false;
    CLI::App* farm = app.add_subcommand("farm-ablation", "creep-score ablation, both arms");
    add_common(farm, farm_opts, true);
    farm->add_option("--n", farm_n, "matches per arm")->check(CLI::PositiveNumber);
    farm->add_flag("--assert", farm_assert, "exit 3 if cpm ratio falls below 1.15");

    CommonOpts heat_opts;
    std::string scenario;
    CLI::App* heat = app.add_subcommand("heatmap", "export a canned influence scene");
    add_common(heat, heat_opts, false);
    heat->add_option("--scenario", scenario, "scene name (see --help)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(sim_opts);
        if (solo->parsed()) return cmd_solo_suite(solo_opts, solo_n, solo_assert, solo_replays);
        if (farm->parsed()) return cmd_farm_ablation(farm_opts, farm_n, farm_assert);
        if (heat->parsed()) return cmd_heatmap(heat_opts, scenario);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
