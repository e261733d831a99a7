#pragma once

#include <vector>

#include "uavsim/config.hpp"
#include "uavsim/model.hpp"

namespace uavsim {

struct Scenario {
    std::vector<UserDevice> users;
    ControllerPos controller;
};

// Seeded scenario construction: N users with radius uniform in [R'-R, R'+R]
// and angle uniform in [0, 2*pi); the controller sits on the venue edge at
// (R'+R, 0). Pure function of cfg.
Scenario init_scenario(const SimConfig& cfg);

}  // namespace uavsim
