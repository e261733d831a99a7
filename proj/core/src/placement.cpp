#include "uavsim/placement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "uavsim/sectorize.hpp"

namespace uavsim {

namespace {

constexpr double kScoreWeightControl = 1.5;
constexpr double kScoreWeightRealtime = 1.2;
constexpr double kScoreWeightNonrealtime = 1.0;

bool is_serving(const UavNode& u) { return u.active() && u.role == UavRole::Serving; }

UavNode make_uav(int id, double angle, double radius, int sector_id,
                 const SimConfig& cfg) {
    UavNode u;
    u.id = id;
    u.x = radius * std::cos(angle);
    u.y = radius * std::sin(angle);
    u.altitude = cfg.altitude_H;
    u.role = UavRole::Serving;
    u.sector_id = sector_id;
    return u;
}

// Home UAVs (not parked on a boundary) get the slots
// angle_lo + (i+1) * width / (k+1), assigned in ascending id order.
void respace_sectors(PlacementState& state, const std::vector<Sector>& sectors,
                     const SimConfig& cfg) {
    for (const auto& sec : sectors) {
        std::vector<int> home;
        for (int id : sec.uav_ids) {
            const auto& u = state.uavs[id];
            if (is_serving(u) && !u.parked) home.push_back(id);
        }
        std::sort(home.begin(), home.end());
        const int k = static_cast<int>(home.size());
        for (int i = 0; i < k; ++i) {
            const double angle = sec.angle_lo + (i + 1) * sec.width() / (k + 1);
            state.uavs[home[i]].x = cfg.venue_radius_Rp * std::cos(angle);
            state.uavs[home[i]].y = cfg.venue_radius_Rp * std::sin(angle);
        }
    }
}

}  // namespace

PlacementState initial_placement(std::vector<Sector>& sectors,
                                 const ControllerPos& controller,
                                 const SimConfig& cfg) {
    PlacementState state;
    state.sector_scores.assign(sectors.size(), 0.0);
    state.traffic_history.resize(sectors.size());

    int total = 0;
    for (const auto& sec : sectors)
        total += required_uavs(sec.traffic_T, cfg.buffer_access_B);
    if (!cfg.unlimited_uavs() && total + 1 > cfg.max_uavs)
        throw SimError("max_uavs exceeded");

    int next_id = 0;
    for (auto& sec : sectors) {
        const int k = required_uavs(sec.traffic_T, cfg.buffer_access_B);
        for (int i = 0; i < k; ++i) {
            const double angle = sec.angle_lo + (i + 1) * sec.width() / (k + 1);
            state.uavs.push_back(make_uav(next_id, angle, cfg.venue_radius_Rp,
                                          sec.id, cfg));
            sec.uav_ids.push_back(next_id);
            ++next_id;
        }
    }

    // Root on the UAV ring, at the point nearest the controller.
    const double root_angle = std::atan2(controller.yb, controller.xb);
    UavNode root = make_uav(next_id, root_angle, cfg.venue_radius_Rp, -1, cfg);
    root.role = UavRole::Root;
    state.uavs.push_back(root);
    return state;
}

Traffic assigned_demand(const UavNode& uav, const std::vector<UserDevice>& users) {
    Traffic sum = 0;
    for (int uid : uav.served_users) sum += users[uid].gen_rate.total();
    return sum;
}

void assign_users_to_uavs(PlacementState& state, std::vector<UserDevice>& users,
                          const std::vector<Sector>& sectors, const SimConfig& cfg) {
    for (auto& u : state.uavs) u.served_users.clear();
    if (users.empty()) return;

    std::vector<int> serving;
    for (const auto& u : state.uavs)
        if (is_serving(u)) serving.push_back(u.id);
    if (serving.empty()) throw SimError("no active UAV");

    const int S = static_cast<int>(sectors.size());
    std::vector<Traffic> pending(state.uavs.size(), 0);
    std::vector<std::pair<double, int>> candidates;

    for (auto& user : users) {
        candidates.clear();
        const int left = (user.sector_id - 1 + S) % S;
        const int right = (user.sector_id + 1) % S;
        for (int id : serving) {
            const int s = state.uavs[id].sector_id;
            if (s == user.sector_id || s == left || s == right)
                candidates.emplace_back(
                    dist3d_ground_to_uav(user.x(), user.y(), state.uavs[id]), id);
        }
        if (candidates.empty()) {
            // No UAV near this user's slice at all; fall back to the full roster.
            for (int id : serving)
                candidates.emplace_back(
                    dist3d_ground_to_uav(user.x(), user.y(), state.uavs[id]), id);
        }
        std::sort(candidates.begin(), candidates.end());

        const Traffic demand = user.gen_rate.total();
        int pick = candidates.front().second;
        for (const auto& [d, id] : candidates) {
            if (pending[id] + demand <= cfg.buffer_access_B) {
                pick = id;
                break;
            }
        }
        pending[pick] += demand;
        user.serving_uav = pick;
        state.uavs[pick].served_users.push_back(user.id);
    }
}

std::vector<double> update_sector_scores(PlacementState& state,
                                         std::vector<Sector>& sectors,
                                         const SimConfig& cfg) {
    for (auto& sec : sectors) {
        int k = 0;
        for (int id : sec.uav_ids)
            if (is_serving(state.uavs[id])) ++k;
        const double weighted =
            kScoreWeightControl * static_cast<double>(sec.traffic_control) +
            kScoreWeightRealtime * static_cast<double>(sec.traffic_realtime) +
            kScoreWeightNonrealtime * static_cast<double>(sec.traffic_nonrealtime);
        if (k == 0) {
            sec.score = weighted > 0 ? std::numeric_limits<double>::infinity() : 0.0;
        } else {
            sec.score =
                weighted / (static_cast<double>(k) * static_cast<double>(cfg.buffer_access_B));
        }
        state.sector_scores[sec.id] = sec.score;
    }
    return state.sector_scores;
}

bool detect_surge(const std::deque<Traffic>& history, Traffic current,
                  const SimConfig& cfg) {
    if (static_cast<int>(history.size()) < cfg.ma_window_W) return false;
    Traffic sum = 0;
    for (Traffic v : history) sum += v;
    // current > threshold * mean, strict
    return static_cast<double>(current) * static_cast<double>(history.size()) >
           cfg.surge_threshold * static_cast<double>(sum);
}

void push_traffic_sample(std::deque<Traffic>& history, Traffic sample, int window) {
    history.push_back(sample);
    while (static_cast<int>(history.size()) > window) history.pop_front();
}

PlacementActions placement_update(PlacementState& state, std::vector<Sector>& sectors,
                                  std::vector<UserDevice>& users, bool surge_fired,
                                  const SimConfig& cfg) {
    PlacementActions out;
    const int S = static_cast<int>(sectors.size());

    // Demand under the association we entered the tick with.
    std::vector<Traffic> demand(state.uavs.size(), 0);
    for (const auto& u : state.uavs)
        if (is_serving(u)) demand[u.id] = assigned_demand(u, users);
    auto busy = [&](int id) { return demand[id] >= cfg.buffer_access_B; };

    std::vector<int> order(sectors.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (sectors[a].score != sectors[b].score) return sectors[a].score > sectors[b].score;
        return a < b;
    });

    std::vector<char> claimed(state.uavs.size(), 0);
    int active = count_active(state.uavs);
    bool changed = false;

    for (int n : order) {
        Sector& sec = sectors[n];
        bool congested = false;
        for (int id : sec.uav_ids)
            if (is_serving(state.uavs[id]) && busy(id)) congested = true;
        if (!congested) continue;

        // (a) borrow a free or partially free neighbour onto the shared boundary
        int mover = -1;
        for (int m : {(n - 1 + S) % S, (n + 1) % S}) {
            if (m == n) continue;
            for (int id : sectors[m].uav_ids) {
                const auto& u = state.uavs[id];
                if (!is_serving(u) || claimed[id] || busy(id)) continue;
                if (mover < 0 || demand[id] < demand[mover] ||
                    (demand[id] == demand[mover] && id < mover))
                    mover = id;
            }
        }
        if (mover >= 0) {
            auto& u = state.uavs[mover];
            const double boundary =
                (u.sector_id == (n - 1 + S) % S) ? sec.angle_lo : sec.angle_hi;
            u.x = cfg.venue_radius_Rp * std::cos(boundary);
            u.y = cfg.venue_radius_Rp * std::sin(boundary);
            u.parked = true;
            claimed[mover] = 1;
            ++out.moved;
            changed = true;
        } else if (cfg.unlimited_uavs() || active < cfg.max_uavs) {
            // (b) fresh deployment at the congested sector's midpoint
            const int id = static_cast<int>(state.uavs.size());
            state.uavs.push_back(make_uav(id, sec.midpoint(), cfg.venue_radius_Rp,
                                          sec.id, cfg));
            sec.uav_ids.push_back(id);
            demand.push_back(0);
            claimed.push_back(0);
            ++active;
            ++out.deployed;
            changed = true;
        } else {
            // (c) out of UAVs; hand the sector to congestion feedback
            out.feedback_sectors.push_back(n);
            for (int id : sec.uav_ids)
                if (is_serving(state.uavs[id]) && busy(id))
                    out.feedback_uavs.push_back(id);
        }
    }

    // Idle suspension, only in calm ticks with nobody busy.
    if (!surge_fired) {
        bool any_busy = false;
        for (const auto& u : state.uavs)
            if (is_serving(u) && busy(u.id)) any_busy = true;
        if (!any_busy) {
            for (auto& u : state.uavs) {
                if (!is_serving(u) || u.idle_ticks < cfg.ma_window_W) continue;
                u.role = UavRole::Suspended;
                ++out.suspended;
                changed = true;
            }
            if (out.suspended > 0) prune_sector_uavs(sectors, state.uavs);
        }
    }

    if (changed) respace_sectors(state, sectors, cfg);
    assign_users_to_uavs(state, users, sectors, cfg);

    for (auto& u : state.uavs)
        if (is_serving(u)) u.idle_ticks = u.served_users.empty() ? u.idle_ticks + 1 : 0;

    std::sort(out.feedback_uavs.begin(), out.feedback_uavs.end());
    return out;
}

void prune_sector_uavs(std::vector<Sector>& sectors, const std::vector<UavNode>& uavs) {
    for (auto& sec : sectors) {
        std::erase_if(sec.uav_ids, [&](int id) {
            return !uavs[id].active() || uavs[id].role != UavRole::Serving;
        });
    }
}

}  // namespace uavsim
