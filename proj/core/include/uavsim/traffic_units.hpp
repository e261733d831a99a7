#pragma once

#include <cmath>
#include <cstdint>
#include <string>

namespace uavsim {

// Traffic volumes and rates are fixed-point with six decimal places
// (1 traffic-unit = 1'000'000 micro-units). Integer arithmetic keeps the
// per-tick flow accounting exact and the CSV output bit-stable.
using Traffic = std::int64_t;

inline constexpr Traffic kTrafficScale = 1'000'000;

inline Traffic traffic_from_units(double units) {
    return static_cast<Traffic>(std::llround(units * static_cast<double>(kTrafficScale)));
}

inline double traffic_to_units(Traffic t) {
    return static_cast<double>(t) / static_cast<double>(kTrafficScale);
}

// v * num / den in integer arithmetic, truncating toward zero.
inline Traffic traffic_mul_ratio(Traffic v, std::int64_t num, std::int64_t den) {
    return v * num / den;
}

inline Traffic traffic_mul_factor(Traffic v, double factor) {
    return static_cast<Traffic>(std::llround(static_cast<double>(v) * factor));
}

// Fixed six-decimal rendering, locale-free.
std::string traffic_to_string(Traffic t);

}  // namespace uavsim
