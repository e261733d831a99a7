#pragma once

#include <vector>

#include "uavsim/config.hpp"
#include "uavsim/model.hpp"
#include "uavsim/placement.hpp"

namespace uavsim {

// Congestion feedback rides the three reserved RLC header bits.
struct FeedbackMessage {
    int user_id = -1;
    int code = 0;  // 0..7
    int issued_tick = 0;
};

struct TickMetrics {
    int tick = 0;
    Traffic offered = 0;
    Traffic served = 0;  // delivered to the controller
    Traffic dropped_access = 0;
    Traffic dropped_relay = 0;
    double avg_dropped_per_uav = 0.0;  // traffic-units
    int active_uavs = 0;

    // Diagnostics; not part of drops.csv.
    bool surge_fired = false;
    int deployed = 0;
    int moved = 0;
    int suspended = 0;
    int feedback_count = 0;
    int root_id = -1;
    int root_served_users = 0;
};

// Applies the surge multiplier once, when tick == surge_tick, then returns
// every user's offered demand (current gen_rate total), indexed by user id.
std::vector<Traffic> generate_traffic(std::vector<UserDevice>& users, int tick,
                                      const SimConfig& cfg);

struct AccessAccounting {
    std::vector<Traffic> intake;   // per UAV id, capped at buffer_access_B
    std::vector<Traffic> dropped;  // per UAV id
    Traffic total_offered = 0;
    Traffic total_intake = 0;
    Traffic total_dropped = 0;

    bool uav_busy(int uav_id, const SimConfig& cfg) const {
        return intake[uav_id] + dropped[uav_id] >= cfg.buffer_access_B;
    }
};

// Per-UAV access-buffer intake and overflow drops under the current
// association. Updates access_buffer_used.
AccessAccounting enqueue_and_drop(PlacementState& state,
                                  const std::vector<Traffic>& offered,
                                  const SimConfig& cfg);

// Diagnostic from the feedback equation: k = B / rate. Requires rate > 0.
double compute_feedback_k(Traffic buffer_B, Traffic user_rate);
// k clamped into the 3-bit wire field.
int feedback_code(double k);

// Class multipliers: realtime *0.9, nonrealtime *0.8, control unchanged.
void apply_feedback(UserDevice& user);

// Issues feedback to every user served by a case-(c) UAV. Zero-rate users
// are skipped. A no-op while the UAV budget is unlimited.
std::vector<FeedbackMessage> congestion_control(PlacementState& state,
                                                std::vector<UserDevice>& users,
                                                const std::vector<int>& marked_uavs,
                                                int tick, const SimConfig& cfg);

// Users on non-busy UAVs drift back toward their base rates (factor 1.05,
// clamped at base).
void recover_rates(std::vector<UserDevice>& users, const PlacementState& state,
                   const AccessAccounting& access, const SimConfig& cfg);

}  // namespace uavsim
