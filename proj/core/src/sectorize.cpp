#include "uavsim/sectorize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace uavsim {

int compute_sector_count(double venue_radius_Rp, double uav_range_R) {
    const int s =
        static_cast<int>(std::floor(std::numbers::pi * venue_radius_Rp / uav_range_R));
    return std::max(s, 1);
}

int sector_of_angle(double angle, int sector_count) {
    const int idx = static_cast<int>(
        std::floor(angle * sector_count / (2.0 * std::numbers::pi)));
    return std::clamp(idx, 0, sector_count - 1);
}

std::vector<Sector> assign_users_to_sectors(std::vector<UserDevice>& users,
                                            int sector_count) {
    const double width = 2.0 * std::numbers::pi / sector_count;
    std::vector<Sector> sectors(static_cast<std::size_t>(sector_count));
    for (int n = 0; n < sector_count; ++n) {
        sectors[n].id = n;
        sectors[n].angle_lo = n * width;
        sectors[n].angle_hi = (n + 1) * width;
    }
    for (auto& u : users) {
        u.sector_id = sector_of_angle(u.angle, sector_count);
        sectors[u.sector_id].user_ids.push_back(u.id);
    }
    refresh_sector_traffic(sectors, users);
    return sectors;
}

void refresh_sector_traffic(std::vector<Sector>& sectors,
                            const std::vector<UserDevice>& users) {
    for (auto& sec : sectors) {
        sec.traffic_control = 0;
        sec.traffic_realtime = 0;
        sec.traffic_nonrealtime = 0;
        for (int uid : sec.user_ids) {
            const auto& rate = users[uid].gen_rate;
            sec.traffic_control += rate.control;
            sec.traffic_realtime += rate.realtime;
            sec.traffic_nonrealtime += rate.nonrealtime;
        }
        sec.traffic_T = sec.traffic_control + sec.traffic_realtime + sec.traffic_nonrealtime;
    }
}

int required_uavs(Traffic traffic_T, Traffic buffer_B) {
    if (traffic_T <= 0) return 0;
    return static_cast<int>((traffic_T + buffer_B - 1) / buffer_B);
}

}  // namespace uavsim
