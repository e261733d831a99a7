#include <doctest.h>

#include <numbers>

#include "uavsim/rng.hpp"
#include "uavsim/scenario.hpp"
#include "uavsim/sectorize.hpp"

using namespace uavsim;

TEST_SUITE_BEGIN("sectorize");

TEST_CASE("sector count is floor(pi * Rp / R)") {
    CHECK(compute_sector_count(200.0, 40.0) == 15);
    CHECK(compute_sector_count(100.0, 25.0) == 12);
    // Rp barely above R leaves floor(pi) slices.
    CHECK(compute_sector_count(40.0001, 40.0) == 3);
}

TEST_CASE("sector arcs at the user ring always span a UAV footprint") {
    Rng rng(4242);
    for (int i = 0; i < 200; ++i) {
        const double rp = rng.uniform_double(50.0, 500.0);
        const double r = rng.uniform_double(5.0, 0.9 * rp);
        const int s = compute_sector_count(rp, r);
        CHECK(2.0 * std::numbers::pi * rp / s >= 2.0 * r);
    }
}

TEST_CASE("angle to sector mapping") {
    CHECK(sector_of_angle(0.0, 15) == 0);
    CHECK(sector_of_angle(std::numbers::pi, 15) == 7);  // floor(7.5)
    CHECK(sector_of_angle(2.0 * std::numbers::pi - 1e-9, 15) == 14);
}

TEST_CASE("sector assignment partitions the users and conserves demand") {
    SimConfig cfg;
    cfg.seed = 99;
    Scenario sc = init_scenario(cfg);
    const int S = compute_sector_count(cfg.venue_radius_Rp, cfg.uav_range_R);
    const auto sectors = assign_users_to_sectors(sc.users, S);

    std::size_t total_users = 0;
    Traffic total_traffic = 0;
    for (const auto& sec : sectors) {
        total_users += sec.user_ids.size();
        total_traffic += sec.traffic_T;
        for (int uid : sec.user_ids) {
            CHECK(sc.users[uid].sector_id == sec.id);
            CHECK(sc.users[uid].angle >= sec.angle_lo);
            CHECK(sc.users[uid].angle < sec.angle_hi);
        }
    }
    CHECK(total_users == sc.users.size());

    Traffic user_traffic = 0;
    for (const auto& u : sc.users) user_traffic += u.gen_rate.total();
    CHECK(total_traffic == user_traffic);
}

TEST_CASE("required_uavs examples") {
    CHECK(required_uavs(120 * kTrafficScale, 50 * kTrafficScale) == 3);
    CHECK(required_uavs(0, 50 * kTrafficScale) == 0);
    CHECK(required_uavs(50 * kTrafficScale, 50 * kTrafficScale) == 1);
}

TEST_CASE("required_uavs equals the incremental-fill oracle") {
    Rng rng(31337);
    for (int i = 0; i < 1000; ++i) {
        const Traffic t = rng.uniform_int(0, 10'000'000'000LL);
        const Traffic b = rng.uniform_int(kTrafficScale, 1'000'000'000LL);
        int oracle = 0;
        for (Traffic acc = 0; acc < t; acc += b) ++oracle;
        CHECK(required_uavs(t, b) == oracle);
    }
}

TEST_CASE("required_uavs is monotone in T and antitone in B") {
    Rng rng(555);
    for (int i = 0; i < 300; ++i) {
        const Traffic t = rng.uniform_int(0, 1'000'000'000LL);
        const Traffic b = rng.uniform_int(kTrafficScale, 100'000'000LL);
        const Traffic dt = rng.uniform_int(0, 50'000'000LL);
        CHECK(required_uavs(t + dt, b) >= required_uavs(t, b));
        CHECK(required_uavs(t, b + dt) <= required_uavs(t, b));
    }
}

TEST_SUITE_END();
