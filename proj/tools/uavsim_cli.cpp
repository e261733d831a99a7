// Command-line front end: `simulate` runs the deployment loop and writes the
// CSV/PGM artifacts, `plot` renders a grid CSV as a PGM heatmap.

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "uavsim/config.hpp"
#include "uavsim/sim.hpp"

namespace {

const char* role_name(uavsim::UavRole role) {
    switch (role) {
        case uavsim::UavRole::Serving: return "serving";
        case uavsim::UavRole::Root: return "root";
        case uavsim::UavRole::Suspended: return "suspended";
    }
    return "?";
}

void print_summary(const uavsim::RunReport& report) {
    using uavsim::traffic_to_string;
    uavsim::Traffic offered = 0, served = 0, da = 0, dr = 0;
    for (const auto& m : report.per_tick) {
        offered += m.offered;
        served += m.served;
        da += m.dropped_access;
        dr += m.dropped_relay;
    }
    std::printf("ticks: %zu\n", report.per_tick.size());
    std::printf("offered: %s  served: %s  dropped_access: %s  dropped_relay: %s\n",
                traffic_to_string(offered).c_str(), traffic_to_string(served).c_str(),
                traffic_to_string(da).c_str(), traffic_to_string(dr).c_str());
    int serving = 0, suspended = 0;
    for (const auto& u : report.roster) {
        if (u.role == uavsim::UavRole::Serving) ++serving;
        if (u.role == uavsim::UavRole::Suspended) ++suspended;
    }
    std::printf("final roster: %zu UAVs (%d serving, %d suspended)\n",
                report.roster.size(), serving, suspended);
    for (const auto& u : report.roster)
        std::printf("  uav %d: (%.2f, %.2f) %s sector=%d\n", u.id, u.x, u.y,
                    role_name(u.role), u.sector_id);
    std::printf("files:\n");
    for (const auto& f : report.manifest)
        std::printf("  %s (%llu bytes)\n", f.path.c_str(),
                    static_cast<unsigned long long>(f.size_bytes));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SDN-assisted UAV base-station network simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    int ticks = 0;
    int max_uavs = 0;
    double grid_step = 0.0;
    int kill_root_at = 0;
    bool emit_pgm = false;

    auto* sim = app.add_subcommand("simulate", "Run the deployment simulation");
    sim->add_option("--config", config_path, "Scenario file (key = value lines)");
    sim->add_option("--seed", seed, "Override the RNG seed");
    sim->add_option("--ticks", ticks, "Override the number of ticks");
    sim->add_option("--out-dir", out_dir, "Output directory (default: out)");
    sim->add_option("--max-uavs", max_uavs, "Override the UAV cap (0 = unlimited)");
    sim->add_option("--grid-step", grid_step, "Override the SNR lattice spacing");
    sim->add_option("--kill-root-at", kill_root_at,
                    "Fail the root at this tick (fault injection)");
    sim->add_flag("--pgm", emit_pgm, "Also emit PGM heatmaps");

    std::string plot_in, plot_out;
    auto* plot = app.add_subcommand("plot", "Render a grid CSV as a PGM heatmap");
    plot->add_option("--in", plot_in, "Input grid CSV")->required();
    plot->add_option("--out", plot_out, "Output PGM path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (sim->parsed()) {
            uavsim::SimConfig cfg;
            if (!config_path.empty()) cfg = uavsim::load_config_file(config_path);
            if (sim->count("--seed")) cfg.seed = seed;
            if (sim->count("--ticks")) cfg.ticks = ticks;
            if (sim->count("--max-uavs")) cfg.max_uavs = max_uavs;
            if (sim->count("--grid-step")) cfg.grid_step = grid_step;
            uavsim::validate_config(cfg);

            uavsim::RunOptions opt;
            opt.out_dir = out_dir;
            opt.kill_root_at = kill_root_at;
            opt.emit_pgm = emit_pgm;
            print_summary(uavsim::run(cfg, opt));
        } else {
            uavsim::plot_grid_csv_to_pgm(plot_in, plot_out);
            std::printf("wrote %s\n", plot_out.c_str());
        }
    } catch (const uavsim::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
