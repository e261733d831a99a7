#include <doctest.h>

#include <cmath>
#include <numbers>

#include "uavsim/placement.hpp"
#include "uavsim/scenario.hpp"
#include "uavsim/sectorize.hpp"

using namespace uavsim;

namespace {

constexpr double kPi = std::numbers::pi;

UserDevice make_user(int id, double radius, double angle, double control,
                     double realtime, double nonrealtime) {
    UserDevice u;
    u.id = id;
    u.radius = radius;
    u.angle = angle;
    u.gen_rate.control = traffic_from_units(control);
    u.gen_rate.realtime = traffic_from_units(realtime);
    u.gen_rate.nonrealtime = traffic_from_units(nonrealtime);
    u.base_gen_rate = u.gen_rate;
    return u;
}

std::vector<Sector> make_sectors(int count) {
    std::vector<UserDevice> none;
    return assign_users_to_sectors(none, count);
}

UavNode uav_in_sector(int id, double angle, int sector_id, const SimConfig& cfg) {
    UavNode u;
    u.id = id;
    u.x = cfg.venue_radius_Rp * std::cos(angle);
    u.y = cfg.venue_radius_Rp * std::sin(angle);
    u.altitude = cfg.altitude_H;
    u.sector_id = sector_id;
    return u;
}

PlacementState make_state(std::vector<UavNode> uavs, std::vector<Sector>& sectors) {
    PlacementState st;
    st.uavs = std::move(uavs);
    st.sector_scores.assign(sectors.size(), 0.0);
    st.traffic_history.resize(sectors.size());
    for (auto& sec : sectors) sec.uav_ids.clear();
    for (const auto& u : st.uavs)
        if (u.role == UavRole::Serving && u.sector_id >= 0)
            sectors[u.sector_id].uav_ids.push_back(u.id);
    return st;
}

void associate(PlacementState& st, std::vector<UserDevice>& users, int uid, int uav) {
    users[uid].serving_uav = uav;
    st.uavs[uav].served_users.push_back(uid);
}

}  // namespace

TEST_SUITE_BEGIN("placement");

TEST_CASE("initial placement spreads UAVs evenly and adds the root") {
    SimConfig cfg;
    const ControllerPos controller{240.0, 0.0};

    SUBCASE("a sector needing two UAVs gets the 1/3 and 2/3 slots") {
        std::vector<UserDevice> users = {make_user(0, 200.0, 0.05, 0, 100, 0)};
        auto sectors = assign_users_to_sectors(users, 15);
        const auto st = initial_placement(sectors, controller, cfg);
        REQUIRE(st.uavs.size() == 3);  // two serving plus root
        CHECK(st.uavs[0].x == doctest::Approx(200.0 * std::cos(2.0 * kPi / 45)));
        CHECK(st.uavs[0].y == doctest::Approx(200.0 * std::sin(2.0 * kPi / 45)));
        CHECK(st.uavs[1].x == doctest::Approx(200.0 * std::cos(4.0 * kPi / 45)));
        CHECK(st.uavs[1].y == doctest::Approx(200.0 * std::sin(4.0 * kPi / 45)));
        CHECK(st.uavs[0].sector_id == 0);
        CHECK(st.uavs[2].role == UavRole::Root);
        CHECK(st.uavs[2].x == doctest::Approx(200.0));
        CHECK(st.uavs[2].y == doctest::Approx(0.0));
        CHECK(sectors[0].uav_ids == std::vector<int>{0, 1});
    }

    SUBCASE("a single UAV sits at the sector midpoint") {
        std::vector<UserDevice> users = {make_user(0, 200.0, 0.05, 0, 50, 0)};
        auto sectors = assign_users_to_sectors(users, 15);
        const auto st = initial_placement(sectors, controller, cfg);
        REQUIRE(st.uavs.size() == 2);
        CHECK(st.uavs[0].x == doctest::Approx(200.0 * std::cos(sectors[0].midpoint())));
        CHECK(st.uavs[0].y == doctest::Approx(200.0 * std::sin(sectors[0].midpoint())));
    }

    SUBCASE("no demand anywhere leaves only the root") {
        auto sectors = make_sectors(15);
        const auto st = initial_placement(sectors, controller, cfg);
        REQUIRE(st.uavs.size() == 1);
        CHECK(st.uavs[0].role == UavRole::Root);
    }

    SUBCASE("a too-small UAV budget is rejected") {
        std::vector<UserDevice> users = {make_user(0, 200.0, 0.05, 0, 100, 0)};
        auto sectors = assign_users_to_sectors(users, 15);
        cfg.max_uavs = 2;  // need 2 + root
        CHECK_THROWS_WITH_AS(initial_placement(sectors, controller, cfg),
                             "max_uavs exceeded", SimError);
    }

    SUBCASE("slot angles are increasing and symmetric about the midpoint") {
        for (int k = 1; k <= 4; ++k) {
            std::vector<UserDevice> users = {
                make_user(0, 200.0, 0.05, 0, 50.0 * k, 0)};
            auto sectors = assign_users_to_sectors(users, 15);
            const auto st = initial_placement(sectors, controller, cfg);
            std::vector<double> angles;
            for (int id : sectors[0].uav_ids)
                angles.push_back(std::atan2(st.uavs[id].y, st.uavs[id].x));
            for (std::size_t i = 1; i < angles.size(); ++i)
                CHECK(angles[i] > angles[i - 1]);
            for (std::size_t i = 0; i < angles.size(); ++i)
                CHECK(angles[i] + angles[angles.size() - 1 - i] ==
                      doctest::Approx(2.0 * sectors[0].midpoint()));
        }
    }
}

TEST_CASE("user to UAV assignment") {
    SimConfig cfg;

    SUBCASE("single user, single UAV") {
        std::vector<UserDevice> users = {make_user(0, 200.0, 0.1, 1, 4, 2)};
        auto sectors = assign_users_to_sectors(users, 15);
        auto st = make_state({uav_in_sector(0, 0.2, 0, cfg)}, sectors);
        assign_users_to_uavs(st, users, sectors, cfg);
        CHECK(users[0].serving_uav == 0);
        CHECK(st.uavs[0].served_users == std::vector<int>{0});
    }

    SUBCASE("the nearer UAV wins when both have headroom") {
        std::vector<UserDevice> users = {make_user(0, 200.0, 0.35, 1, 4, 2)};
        auto sectors = assign_users_to_sectors(users, 15);
        auto st = make_state(
            {uav_in_sector(0, 0.05, 0, cfg), uav_in_sector(1, 0.30, 0, cfg)}, sectors);
        assign_users_to_uavs(st, users, sectors, cfg);
        CHECK(users[0].serving_uav == 1);
    }

    SUBCASE("a full nearest UAV hands the user to the second nearest") {
        // user 0 fills UAV 0 exactly; the probe user is nearer to UAV 0 but
        // only UAV 1 still has headroom.
        std::vector<UserDevice> users = {make_user(0, 200.0, 0.10, 0, 50, 0),
                                         make_user(1, 200.0, 0.12, 0, 10, 0)};
        auto sectors = assign_users_to_sectors(users, 15);
        auto st = make_state(
            {uav_in_sector(0, 0.10, 0, cfg), uav_in_sector(1, 0.35, 0, cfg)}, sectors);
        assign_users_to_uavs(st, users, sectors, cfg);
        CHECK(users[0].serving_uav == 0);
        CHECK(users[1].serving_uav == 1);

        // brute force over the probe's options: only UAV 1 respects the buffer
        const Traffic b = cfg.buffer_access_B;
        const Traffic fill = users[0].gen_rate.total();
        const Traffic probe = users[1].gen_rate.total();
        CHECK(fill + probe > b);  // UAV 0 infeasible
        CHECK(probe <= b);        // UAV 1 feasible
    }

    SUBCASE("overflow goes to the nearest UAV when nobody has headroom") {
        std::vector<UserDevice> users = {make_user(0, 200.0, 0.10, 0, 80, 0)};
        auto sectors = assign_users_to_sectors(users, 15);
        auto st = make_state(
            {uav_in_sector(0, 0.12, 0, cfg), uav_in_sector(1, 0.35, 0, cfg)}, sectors);
        assign_users_to_uavs(st, users, sectors, cfg);
        CHECK(users[0].serving_uav == 0);
    }

    SUBCASE("users only attach to their own or an adjacent sector") {
        SimConfig full;
        full.seed = 21;
        Scenario sc = init_scenario(full);
        const int S = compute_sector_count(full.venue_radius_Rp, full.uav_range_R);
        auto sectors = assign_users_to_sectors(sc.users, S);
        auto st = initial_placement(sectors, ControllerPos{240, 0}, full);
        assign_users_to_uavs(st, sc.users, sectors, full);
        for (const auto& u : sc.users) {
            REQUIRE(u.serving_uav >= 0);
            const int s = st.uavs[u.serving_uav].sector_id;
            const bool adjacent = s == u.sector_id || s == (u.sector_id + 1) % S ||
                                  s == (u.sector_id - 1 + S) % S;
            CHECK(adjacent);
            CHECK(st.uavs[u.serving_uav].role == UavRole::Serving);
        }
    }

    SUBCASE("users without any serving UAV is an error") {
        std::vector<UserDevice> users = {make_user(0, 200.0, 0.1, 1, 4, 2)};
        auto sectors = assign_users_to_sectors(users, 15);
        auto st = make_state({}, sectors);
        CHECK_THROWS_WITH_AS(assign_users_to_uavs(st, users, sectors, cfg),
                             "no active UAV", SimError);
    }
}

TEST_CASE("sector scores") {
    SimConfig cfg;

    auto scored = [&](double control, double realtime, double nonrealtime,
                      int uav_count) {
        std::vector<UserDevice> users = {
            make_user(0, 200.0, 0.05, control, realtime, nonrealtime)};
        auto sectors = assign_users_to_sectors(users, 15);
        std::vector<UavNode> uavs;
        for (int i = 0; i < uav_count; ++i)
            uavs.push_back(uav_in_sector(i, 0.1 + 0.05 * i, 0, cfg));
        auto st = make_state(std::move(uavs), sectors);
        update_sector_scores(st, sectors, cfg);
        return sectors[0].score;
    };

    CHECK(scored(0, 0, 0, 1) == 0.0);
    CHECK(scored(0, 50, 0, 1) == doctest::Approx(1.2));
    CHECK(scored(10, 20, 30, 1) > scored(10, 20, 30, 2));  // fewer UAVs rank higher
    CHECK(std::isinf(scored(0, 50, 0, 0)));                // demand but no UAV
}

TEST_CASE("surge detection needs a full window and a strict exceedance") {
    SimConfig cfg;  // W = 5, threshold = 1.5
    std::deque<Traffic> history;
    for (int i = 0; i < 5; ++i)
        push_traffic_sample(history, 10 * kTrafficScale, cfg.ma_window_W);

    CHECK(detect_surge(history, 16 * kTrafficScale, cfg));        // 16 > 15
    CHECK_FALSE(detect_surge(history, 15 * kTrafficScale, cfg));  // boundary

    std::deque<Traffic> young = {10 * kTrafficScale, 10 * kTrafficScale};
    CHECK_FALSE(detect_surge(young, 100 * kTrafficScale, cfg));

    push_traffic_sample(history, 20 * kTrafficScale, cfg.ma_window_W);
    CHECK(history.size() == 5);  // window stays trimmed
    CHECK(history.back() == 20 * kTrafficScale);
}

TEST_CASE("placement update") {
    SimConfig cfg;

    SUBCASE("a free neighbour moves to the shared boundary") {
        std::vector<UserDevice> users = {make_user(0, 200.0, 0.2, 0, 60, 0)};
        auto sectors = assign_users_to_sectors(users, 3);
        auto st = make_state({uav_in_sector(0, 0.3, 0, cfg),
                              uav_in_sector(1, sectors[1].midpoint(), 1, cfg)},
                             sectors);
        associate(st, users, 0, 0);
        update_sector_scores(st, sectors, cfg);
        const auto actions = placement_update(st, sectors, users, false, cfg);
        CHECK(actions.moved == 1);
        CHECK(actions.deployed == 0);
        CHECK(st.uavs[1].parked);
        CHECK(st.uavs[1].sector_id == 1);  // dual-homes, membership unchanged
        // sector 1 adjoins sector 0 from above, so it parks on the upper edge
        CHECK(st.uavs[1].x == doctest::Approx(200.0 * std::cos(sectors[0].angle_hi)));
        CHECK(st.uavs[1].y == doctest::Approx(200.0 * std::sin(sectors[0].angle_hi)));
    }

    SUBCASE("all neighbours busy deploys a fresh UAV at the midpoint") {
        std::vector<UserDevice> users = {make_user(0, 200.0, 0.2, 0, 60, 0)};
        auto sectors = assign_users_to_sectors(users, 3);
        auto st = make_state({uav_in_sector(0, 0.3, 0, cfg)}, sectors);
        associate(st, users, 0, 0);
        update_sector_scores(st, sectors, cfg);
        const auto actions = placement_update(st, sectors, users, false, cfg);
        CHECK(actions.deployed == 1);
        CHECK(st.uavs.size() == 2);
        CHECK(st.uavs[1].sector_id == 0);
        CHECK(st.uavs[1].role == UavRole::Serving);
        CHECK(sectors[0].uav_ids == std::vector<int>{0, 1});
    }

    SUBCASE("at the UAV cap the sector is marked for feedback") {
        std::vector<UserDevice> users = {make_user(0, 200.0, 0.2, 0, 60, 0)};
        auto sectors = assign_users_to_sectors(users, 3);
        auto st = make_state({uav_in_sector(0, 0.3, 0, cfg)}, sectors);
        associate(st, users, 0, 0);
        cfg.max_uavs = 1;
        update_sector_scores(st, sectors, cfg);
        const auto actions = placement_update(st, sectors, users, false, cfg);
        CHECK(actions.deployed == 0);
        CHECK(actions.moved == 0);
        CHECK(actions.feedback_uavs == std::vector<int>{0});
        CHECK(actions.feedback_sectors == std::vector<int>{0});
    }

    SUBCASE("an idle UAV is suspended after W calm ticks (3-UAV replay)") {
        cfg.ma_window_W = 2;
        std::vector<UserDevice> users = {make_user(0, 200.0, 0.3, 0, 10, 0),
                                         make_user(1, 200.0, 2.5, 0, 10, 0)};
        auto sectors = assign_users_to_sectors(users, 3);
        auto st = make_state({uav_in_sector(0, 0.3, 0, cfg),
                              uav_in_sector(1, 2.5, 1, cfg),
                              uav_in_sector(2, 4.5, 2, cfg)},
                             sectors);
        assign_users_to_uavs(st, users, sectors, cfg);
        CHECK(st.uavs[2].served_users.empty());

        placement_update(st, sectors, users, false, cfg);  // idle streak 1
        CHECK(st.uavs[2].role == UavRole::Serving);
        placement_update(st, sectors, users, false, cfg);  // idle streak 2
        CHECK(st.uavs[2].role == UavRole::Serving);
        const auto actions = placement_update(st, sectors, users, false, cfg);
        CHECK(actions.suspended == 1);
        CHECK(st.uavs[2].role == UavRole::Suspended);
        CHECK(sectors[2].uav_ids.empty());
    }

    SUBCASE("suspension never fires while any UAV is busy or during a surge") {
        cfg.ma_window_W = 1;
        std::vector<UserDevice> users = {make_user(0, 200.0, 0.3, 0, 60, 0)};
        auto sectors = assign_users_to_sectors(users, 3);
        auto st = make_state({uav_in_sector(0, 0.3, 0, cfg),
                              uav_in_sector(1, 2.5, 1, cfg)},
                             sectors);
        assign_users_to_uavs(st, users, sectors, cfg);
        st.uavs[1].idle_ticks = 5;

        // busy UAV present: the idle one survives
        placement_update(st, sectors, users, false, cfg);
        CHECK(st.uavs[1].role == UavRole::Serving);

        // calm but surging: still no suspension
        users[0].gen_rate.realtime = traffic_from_units(10);
        st.uavs[1].idle_ticks = 5;
        placement_update(st, sectors, users, true, cfg);
        CHECK(st.uavs[1].role == UavRole::Serving);

        // calm and quiet: suspended
        st.uavs[1].idle_ticks = 5;
        placement_update(st, sectors, users, false, cfg);
        CHECK(st.uavs[1].role == UavRole::Suspended);
    }

    SUBCASE("an untroubled state is a fixed point") {
        std::vector<UserDevice> users = {make_user(0, 200.0, 0.3, 0, 10, 0)};
        auto sectors = assign_users_to_sectors(users, 3);
        auto st = make_state({uav_in_sector(0, 0.4, 0, cfg)}, sectors);
        assign_users_to_uavs(st, users, sectors, cfg);

        const auto a1 = placement_update(st, sectors, users, false, cfg);
        const double x = st.uavs[0].x, y = st.uavs[0].y;
        const auto a2 = placement_update(st, sectors, users, false, cfg);
        CHECK(a1.moved + a1.deployed + a1.suspended == 0);
        CHECK(a2.moved + a2.deployed + a2.suspended == 0);
        CHECK(st.uavs[0].x == x);
        CHECK(st.uavs[0].y == y);
        CHECK(users[0].serving_uav == 0);
    }
}

TEST_SUITE_END();
