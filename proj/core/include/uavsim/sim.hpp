#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "uavsim/config.hpp"
#include "uavsim/model.hpp"
#include "uavsim/scenario.hpp"
#include "uavsim/traffic_engine.hpp"

namespace uavsim {

struct RunOptions {
    std::string out_dir = "out";
    int kill_root_at = 0;  // fault injection; 0 = never (ticks start at 1)
    bool emit_pgm = false;
    // Test hook; phase is one of "traffic", "placement", "congestion",
    // "routing", "metrics".
    std::function<void(std::string_view phase, int tick)> trace;
};

struct FinalUavEntry {
    int id = -1;
    double x = 0.0;
    double y = 0.0;
    UavRole role = UavRole::Serving;
    int sector_id = -1;
};

struct ManifestEntry {
    std::string path;
    std::uint64_t size_bytes = 0;
};

struct RunReport {
    SimConfig config;
    std::vector<TickMetrics> per_tick;
    std::vector<FinalUavEntry> roster;
    std::vector<UserDevice> final_users;
    std::vector<ManifestEntry> manifest;
};

// Full run: sectorize, place, assign, then per tick
//   traffic -> placement -> congestion control -> multi-hop routing -> metrics.
// Writes drops.csv, tree.csv, snr_initial.csv and snr_final.csv (plus PGMs on
// request) under opt.out_dir.
RunReport run(const SimConfig& cfg, const RunOptions& opt);

// Same driver on a caller-built scenario (fixed user positions and rates).
RunReport run(const SimConfig& cfg, Scenario scenario, const RunOptions& opt);

// grid.csv -> binary PGM (the plot subcommand). Idempotent.
void plot_grid_csv_to_pgm(const std::string& csv_path, const std::string& pgm_path);

}  // namespace uavsim
