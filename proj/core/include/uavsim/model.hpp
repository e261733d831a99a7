#pragma once

#include <cmath>
#include <vector>

#include "uavsim/traffic_units.hpp"

namespace uavsim {

// Per-class rates: control / real-time / non-real-time, traffic-units per tick.
struct RateTriple {
    Traffic control = 0;
    Traffic realtime = 0;
    Traffic nonrealtime = 0;

    Traffic total() const { return control + realtime + nonrealtime; }
};

struct UserDevice {
    int id = -1;
    double radius = 0.0;  // polar position, meters from the venue center
    double angle = 0.0;   // radians in [0, 2*pi)
    int sector_id = -1;
    int serving_uav = -1;  // -1 while unassigned
    RateTriple gen_rate;       // current, after surge / feedback / recovery
    RateTriple base_gen_rate;  // pre-feedback reference

    double x() const { return radius * std::cos(angle); }
    double y() const { return radius * std::sin(angle); }
};

enum class UavRole { Serving, Root, Suspended };

struct UavNode {
    int id = -1;
    double x = 0.0;
    double y = 0.0;
    double altitude = 0.0;  // always the configured H while active
    UavRole role = UavRole::Serving;
    int sector_id = -1;              // -1 for the root
    Traffic access_buffer_used = 0;  // this tick's access intake
    Traffic relay_buffer_used = 0;   // this tick's relay outflow
    Traffic load = 0;                // last tick's forwarded + served traffic
    std::vector<int> served_users;   // ascending user ids
    int last_heartbeat = 0;
    bool failed = false;  // stops heartbeating; demoted once the timeout hits
    bool parked = false;  // sits on a sector boundary to help a neighbour
    int idle_ticks = 0;   // consecutive ticks with an empty served set

    bool active() const { return role != UavRole::Suspended; }
};

struct Sector {
    int id = -1;
    double angle_lo = 0.0;
    double angle_hi = 0.0;
    std::vector<int> user_ids;
    Traffic traffic_control = 0;
    Traffic traffic_realtime = 0;
    Traffic traffic_nonrealtime = 0;
    Traffic traffic_T = 0;     // total demand, sum over classes
    std::vector<int> uav_ids;  // home UAVs; never contains the root
    double score = 0.0;

    double width() const { return angle_hi - angle_lo; }
    double midpoint() const { return 0.5 * (angle_lo + angle_hi); }
};

// Ground position of the base station / SDN controller.
struct ControllerPos {
    double xb = 0.0;
    double yb = 0.0;
};

inline double dist2d(double ax, double ay, double bx, double by) {
    const double dx = ax - bx, dy = ay - by;
    return std::sqrt(dx * dx + dy * dy);
}

// Ground point to an airborne UAV.
inline double dist3d_ground_to_uav(double px, double py, const UavNode& u) {
    const double dx = px - u.x, dy = py - u.y;
    return std::sqrt(dx * dx + dy * dy + u.altitude * u.altitude);
}

// Id of the active root, or -1.
inline int find_root_id(const std::vector<UavNode>& uavs) {
    for (const auto& u : uavs)
        if (u.active() && u.role == UavRole::Root) return u.id;
    return -1;
}

inline int count_active(const std::vector<UavNode>& uavs) {
    int n = 0;
    for (const auto& u : uavs) n += u.active() ? 1 : 0;
    return n;
}

}  // namespace uavsim
