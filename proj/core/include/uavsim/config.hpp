#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "uavsim/traffic_units.hpp"

namespace uavsim {

// Scenario description or input file is invalid (CLI exit code 1).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// The simulation reached an unusable state (CLI exit code 2).
struct SimError : std::runtime_error {
    explicit SimError(const std::string& what) : std::runtime_error(what) {}
};

// All scenario parameters. Geometry in meters, angles in radians, traffic in
// fixed-point traffic-units per tick (see traffic_units.hpp).
struct SimConfig {
    double venue_radius_Rp = 200.0;  // R': radius of the user ring
    double uav_range_R = 40.0;       // R: maximum service range of one UAV
    double altitude_H = 90.0;        // constant flight altitude
    int num_users_N = 150;
    Traffic buffer_access_B = 50 * kTrafficScale;  // user-facing buffer per tick
    Traffic buffer_relay = 250 * kTrafficScale;    // UAV-UAV buffer per tick
    double wavelength_lambda = 0.010;  // meters
    double noise_power = 1.0;          // watts (30 dBm)
    double link_budget_K = 0.0;        // watts*m^4 (P_t*A_t*A_r); set by ctor
    double edge_weight_alpha = 0.5;    // distance vs load mix in edge weights
    int surge_tick = 11;               // tick whose demand gets multiplied
    double surge_factor = 2.0;
    int ma_window_W = 5;               // moving-average window, ticks
    double surge_threshold = 1.5;
    int max_uavs = 0;                  // 0 = unlimited
    int ticks = 30;
    double grid_step = 2.0;            // SNR lattice spacing, meters
    std::uint64_t seed = 7;
    Traffic rate_control = 1 * kTrafficScale;  // per user per tick
    Traffic rate_realtime = -1;     // negative: draw uniform integer in [2,8]
    Traffic rate_nonrealtime = -1;  // negative: draw uniform integer in [1,5]
    int heartbeat_timeout = 3;      // ticks

    SimConfig();

    bool unlimited_uavs() const { return max_uavs <= 0; }
};

// Link budget such that the SNR at the maximum service distance
// sqrt(R^2 + H^2) is exactly 15 dB.
double calibrated_link_budget(double range_R, double altitude_H,
                              double wavelength, double noise_power);

// Returns cfg when every invariant holds; throws ConfigError naming the
// first violated one.
const SimConfig& validate_config(const SimConfig& cfg);

// Flat "key = value" lines, '#' starts a comment, unknown keys are an error.
// Missing keys keep their defaults. link_budget_K is recalibrated from the
// parsed geometry unless the file pins it explicitly.
SimConfig parse_config_text(const std::string& text);
SimConfig load_config_file(const std::string& path);

}  // namespace uavsim
