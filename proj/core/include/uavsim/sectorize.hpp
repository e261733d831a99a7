#pragma once

#include <vector>

#include "uavsim/config.hpp"
#include "uavsim/model.hpp"

namespace uavsim {

// Coarsest equal partition whose arc at the user ring still spans one UAV
// footprint: floor(pi * Rp / R), at least 1.
int compute_sector_count(double venue_radius_Rp, double uav_range_R);

// floor(angle * S / 2pi), clamped into [0, S-1].
int sector_of_angle(double angle, int sector_count);

// Builds the equal angular sectors, maps each user by angle, and fills the
// per-sector user lists and per-class traffic totals.
std::vector<Sector> assign_users_to_sectors(std::vector<UserDevice>& users,
                                            int sector_count);

// Recomputes the per-class demand sums from the users' current rates.
void refresh_sector_traffic(std::vector<Sector>& sectors,
                            const std::vector<UserDevice>& users);

// ceil(T / B); an empty sector needs no UAV.
int required_uavs(Traffic traffic_T, Traffic buffer_B);

}  // namespace uavsim
