#pragma once

#include <deque>
#include <vector>

#include "uavsim/config.hpp"
#include "uavsim/model.hpp"

namespace uavsim {

struct PlacementState {
    std::vector<UavNode> uavs;  // index == UAV id; suspended nodes stay put
    std::vector<double> sector_scores;
    std::vector<std::deque<Traffic>> traffic_history;  // per sector, last W samples
};

// Sizes each sector by ceil(T/B), spreads its UAVs evenly inside the slice
// at radius R' and adds one extra UAV as root at the ring point nearest the
// controller. Throws SimError("max_uavs exceeded") when the cap is too small.
PlacementState initial_placement(std::vector<Sector>& sectors,
                                 const ControllerPos& controller,
                                 const SimConfig& cfg);

// Demand currently assigned to one UAV under the present association.
Traffic assigned_demand(const UavNode& uav, const std::vector<UserDevice>& users);

// Each user goes to the nearest active serving UAV (3D distance) of its own
// or an adjacent sector that still has buffer headroom; when nobody has room
// the nearest one takes the overflow. Ties break toward the lower UAV id.
void assign_users_to_uavs(PlacementState& state, std::vector<UserDevice>& users,
                          const std::vector<Sector>& sectors, const SimConfig& cfg);

// score(n) = (1.5*T_control + 1.2*T_realtime + 1.0*T_nonrealtime) / (k*B).
// A sector with traffic but no UAV scores +infinity.
std::vector<double> update_sector_scores(PlacementState& state,
                                         std::vector<Sector>& sectors,
                                         const SimConfig& cfg);

// True when the sample exceeds threshold times the mean of a full W-sample
// window. Short histories never fire.
bool detect_surge(const std::deque<Traffic>& history, Traffic current,
                  const SimConfig& cfg);

// Appends a sample, keeping at most window entries.
void push_traffic_sample(std::deque<Traffic>& history, Traffic sample, int window);

struct PlacementActions {
    int moved = 0;
    int deployed = 0;
    int suspended = 0;
    std::vector<int> feedback_uavs;  // busy, no helper, cap reached (case c)
    std::vector<int> feedback_sectors;
};

// One placement pass in descending sector-score order: borrow a free or
// partially free neighbour onto the shared boundary, else deploy a fresh UAV
// at the sector midpoint, else mark the sector for congestion feedback.
// Calm ticks suspend UAVs idle for >= W ticks. Any change re-spaces the home
// UAVs symmetrically; users are reassigned either way.
PlacementActions placement_update(PlacementState& state, std::vector<Sector>& sectors,
                                  std::vector<UserDevice>& users, bool surge_fired,
                                  const SimConfig& cfg);

// Drops stale ids (suspended or promoted nodes) from the sector UAV lists.
void prune_sector_uavs(std::vector<Sector>& sectors, const std::vector<UavNode>& uavs);

}  // namespace uavsim
