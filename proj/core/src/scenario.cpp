#include "uavsim/scenario.hpp"

#include <numbers>

#include "uavsim/rng.hpp"

namespace uavsim {

Scenario init_scenario(const SimConfig& cfg) {
    Scenario sc;
    Rng rng(cfg.seed);

    const double r_lo = cfg.venue_radius_Rp - cfg.uav_range_R;
    const double r_hi = cfg.venue_radius_Rp + cfg.uav_range_R;

    sc.users.reserve(static_cast<std::size_t>(cfg.num_users_N));
    for (int i = 0; i < cfg.num_users_N; ++i) {
        UserDevice u;
        u.id = i;
        u.radius = rng.uniform_double(r_lo, r_hi);
        u.angle = rng.uniform_double(0.0, 2.0 * std::numbers::pi);
        u.gen_rate.control = cfg.rate_control;
        u.gen_rate.realtime = cfg.rate_realtime < 0
                                  ? rng.uniform_int(2, 8) * kTrafficScale
                                  : cfg.rate_realtime;
        u.gen_rate.nonrealtime = cfg.rate_nonrealtime < 0
                                     ? rng.uniform_int(1, 5) * kTrafficScale
                                     : cfg.rate_nonrealtime;
        u.base_gen_rate = u.gen_rate;
        sc.users.push_back(u);
    }

    // Venue edge nearest sector 0; gives root election a well-defined target.
    sc.controller = ControllerPos{cfg.venue_radius_Rp + cfg.uav_range_R, 0.0};
    return sc;
}

}  // namespace uavsim
