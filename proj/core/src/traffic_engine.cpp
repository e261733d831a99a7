#include "uavsim/traffic_engine.hpp"

#include <algorithm>
#include <cmath>

namespace uavsim {

std::vector<Traffic> generate_traffic(std::vector<UserDevice>& users, int tick,
                                      const SimConfig& cfg) {
    std::vector<Traffic> offered(users.size(), 0);
    for (auto& u : users) {
        if (tick == cfg.surge_tick) {
            auto surge = [&](Traffic rate, Traffic base) {
                return std::min(traffic_mul_factor(rate, cfg.surge_factor),
                                traffic_mul_factor(base, cfg.surge_factor));
            };
            u.gen_rate.control = surge(u.gen_rate.control, u.base_gen_rate.control);
            u.gen_rate.realtime = surge(u.gen_rate.realtime, u.base_gen_rate.realtime);
            u.gen_rate.nonrealtime =
                surge(u.gen_rate.nonrealtime, u.base_gen_rate.nonrealtime);
        }
        offered[u.id] = u.gen_rate.total();
    }
    return offered;
}

AccessAccounting enqueue_and_drop(PlacementState& state,
                                  const std::vector<Traffic>& offered,
                                  const SimConfig& cfg) {
    AccessAccounting acc;
    acc.intake.assign(state.uavs.size(), 0);
    acc.dropped.assign(state.uavs.size(), 0);
    for (Traffic v : offered) acc.total_offered += v;

    for (auto& uav : state.uavs) {
        if (!uav.active()) continue;
        Traffic demand = 0;
        for (int uid : uav.served_users) demand += offered[uid];
        const Traffic intake = std::min(demand, cfg.buffer_access_B);
        acc.intake[uav.id] = intake;
        acc.dropped[uav.id] = demand - intake;
        acc.total_intake += intake;
        acc.total_dropped += demand - intake;
        uav.access_buffer_used = intake;
    }
    return acc;
}

double compute_feedback_k(Traffic buffer_B, Traffic user_rate) {
    return static_cast<double>(buffer_B) / static_cast<double>(user_rate);
}

int feedback_code(double k) {
    if (k >= 7.0) return 7;
    return std::max(0, static_cast<int>(std::floor(k)));
}

void apply_feedback(UserDevice& user) {
    user.gen_rate.realtime = traffic_mul_ratio(user.gen_rate.realtime, 9, 10);
    user.gen_rate.nonrealtime = traffic_mul_ratio(user.gen_rate.nonrealtime, 4, 5);
    // control class keeps its rate
}

std::vector<FeedbackMessage> congestion_control(PlacementState& state,
                                                std::vector<UserDevice>& users,
                                                const std::vector<int>& marked_uavs,
                                                int tick, const SimConfig& cfg) {
    std::vector<FeedbackMessage> messages;
    // Throttling trades QoS for queue headroom; worth it only under a UAV cap.
    if (cfg.unlimited_uavs()) return messages;

    for (int uav_id : marked_uavs) {
        for (int uid : state.uavs[uav_id].served_users) {
            auto& user = users[uid];
            const Traffic rate = user.gen_rate.total();
            if (rate <= 0) continue;
            const double k = compute_feedback_k(cfg.buffer_access_B, rate);
            messages.push_back(FeedbackMessage{uid, feedback_code(k), tick});
            apply_feedback(user);
        }
    }
    return messages;
}

void recover_rates(std::vector<UserDevice>& users, const PlacementState& state,
                   const AccessAccounting& access, const SimConfig& cfg) {
    auto lift = [](Traffic rate, Traffic base) {
        if (rate >= base) return rate;
        return std::min(traffic_mul_ratio(rate, 21, 20), base);
    };
    for (auto& user : users) {
        if (user.serving_uav < 0) continue;
        if (access.uav_busy(user.serving_uav, cfg)) continue;
        user.gen_rate.control = lift(user.gen_rate.control, user.base_gen_rate.control);
        user.gen_rate.realtime = lift(user.gen_rate.realtime, user.base_gen_rate.realtime);
        user.gen_rate.nonrealtime =
            lift(user.gen_rate.nonrealtime, user.base_gen_rate.nonrealtime);
    }
}

}  // namespace uavsim
