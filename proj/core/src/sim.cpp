#include "uavsim/sim.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "uavsim/placement.hpp"
#include "uavsim/radio.hpp"
#include "uavsim/routing.hpp"
#include "uavsim/sectorize.hpp"

namespace fs = std::filesystem;

namespace uavsim {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SimError("cannot write '" + path + "'");
    return out;
}

void add_manifest(RunReport& report, const std::string& path) {
    report.manifest.push_back(
        ManifestEntry{path, static_cast<std::uint64_t>(fs::file_size(path))});
}

void emit_grid(RunReport& report, const PlacementState& state, const SimConfig& cfg,
               const RunOptions& opt, const std::string& stem) {
    const SnrGrid grid = compute_grid(state.uavs, cfg);
    const std::string csv = (fs::path(opt.out_dir) / (stem + ".csv")).string();
    write_grid_csv(grid, csv);
    add_manifest(report, csv);
    if (opt.emit_pgm) {
        const std::string pgm = (fs::path(opt.out_dir) / (stem + ".pgm")).string();
        write_pgm(grid, pgm);
        add_manifest(report, pgm);
    }
}

}  // namespace

RunReport run(const SimConfig& cfg, const RunOptions& opt) {
    validate_config(cfg);
    return run(cfg, init_scenario(cfg), opt);
}

RunReport run(const SimConfig& cfg, Scenario scenario, const RunOptions& opt) {
    validate_config(cfg);
    auto trace = [&](std::string_view phase, int tick) {
        if (opt.trace) opt.trace(phase, tick);
    };

    fs::create_directories(opt.out_dir);
    auto& users = scenario.users;
    const ControllerPos controller = scenario.controller;

    const int S = compute_sector_count(cfg.venue_radius_Rp, cfg.uav_range_R);
    auto sectors = assign_users_to_sectors(users, S);
    PlacementState state = initial_placement(sectors, controller, cfg);
    assign_users_to_uavs(state, users, sectors, cfg);

    RunReport report;
    report.config = cfg;

    emit_grid(report, state, cfg, opt, "snr_initial");

    const std::string drops_path = (fs::path(opt.out_dir) / "drops.csv").string();
    const std::string tree_path = (fs::path(opt.out_dir) / "tree.csv").string();
    auto drops_csv = open_out(drops_path);
    auto tree_csv = open_out(tree_path);
    drops_csv << "tick,offered,served,dropped_access,dropped_relay,"
                 "avg_dropped_per_uav,active_uavs\n";
    tree_csv << "tick,uav,parent,path_cost\n";

    char buf[256];
    for (int tick = 1; tick <= cfg.ticks; ++tick) {
        trace("traffic", tick);
        const auto offered = generate_traffic(users, tick, cfg);

        trace("placement", tick);
        refresh_sector_traffic(sectors, users);
        bool surge_fired = false;
        for (auto& sec : sectors) {
            if (detect_surge(state.traffic_history[sec.id], sec.traffic_T, cfg))
                surge_fired = true;
            push_traffic_sample(state.traffic_history[sec.id], sec.traffic_T,
                                cfg.ma_window_W);
        }
        update_sector_scores(state, sectors, cfg);
        const auto actions = placement_update(state, sectors, users, surge_fired, cfg);

        trace("congestion", tick);
        const auto access = enqueue_and_drop(state, offered, cfg);
        const auto feedback =
            congestion_control(state, users, actions.feedback_uavs, tick, cfg);
        recover_rates(users, state, access, cfg);

        trace("routing", tick);
        if (opt.kill_root_at > 0 && tick == opt.kill_root_at) {
            if (const int rid = find_root_id(state.uavs); rid >= 0)
                state.uavs[rid].failed = true;
        }
        const auto election = elect_root(state.uavs, controller, tick, cfg);
        if (election.root_changed || !election.demoted_uavs.empty()) {
            prune_sector_uavs(sectors, state.uavs);
            assign_users_to_uavs(state, users, sectors, cfg);
        }
        const auto graph = build_graph(state.uavs, cfg);
        const auto tree = dijkstra_tree(graph);
        const auto relay = forward_relay(state.uavs, tree, access.intake, cfg);

        trace("metrics", tick);
        TickMetrics m;
        m.tick = tick;
        m.offered = access.total_offered;
        m.served = relay.controller_received;
        m.dropped_access = access.total_dropped;
        m.dropped_relay = relay.total_dropped;
        m.active_uavs = count_active(state.uavs);
        m.avg_dropped_per_uav =
            m.active_uavs > 0
                ? traffic_to_units(m.dropped_access + m.dropped_relay) / m.active_uavs
                : 0.0;
        m.surge_fired = surge_fired;
        m.deployed = actions.deployed;
        m.moved = actions.moved;
        m.suspended = actions.suspended;
        m.feedback_count = static_cast<int>(feedback.size());
        m.root_id = election.root_id;
        m.root_served_users =
            static_cast<int>(state.uavs[election.root_id].served_users.size());

        if (m.offered != m.served + m.dropped_access + m.dropped_relay)
            throw SimError("flow conservation violated at tick " + std::to_string(tick));

        std::snprintf(buf, sizeof buf, "%d,%s,%s,%s,%s,%.6f,%d\n", m.tick,
                      traffic_to_string(m.offered).c_str(),
                      traffic_to_string(m.served).c_str(),
                      traffic_to_string(m.dropped_access).c_str(),
                      traffic_to_string(m.dropped_relay).c_str(),
                      m.avg_dropped_per_uav, m.active_uavs);
        drops_csv << buf;
        for (const auto& [id, parent] : tree.parent) {
            std::snprintf(buf, sizeof buf, "%d,%d,%d,%.6f\n", tick, id, parent,
                          tree.path_cost.at(id));
            tree_csv << buf;
        }

        report.per_tick.push_back(m);
    }

    drops_csv.close();
    tree_csv.close();
    add_manifest(report, drops_path);
    add_manifest(report, tree_path);

    emit_grid(report, state, cfg, opt, "snr_final");

    for (const auto& u : state.uavs)
        report.roster.push_back(FinalUavEntry{u.id, u.x, u.y, u.role, u.sector_id});
    report.final_users = users;
    return report;
}

void plot_grid_csv_to_pgm(const std::string& csv_path, const std::string& pgm_path) {
    write_pgm(read_grid_csv(csv_path), pgm_path);
}

}  // namespace uavsim
