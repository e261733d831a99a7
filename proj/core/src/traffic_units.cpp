#include "uavsim/traffic_units.hpp"

#include <cstdio>

namespace uavsim {

std::string traffic_to_string(Traffic t) {
    const char* sign = "";
    unsigned long long mag;
    if (t < 0) {
        sign = "-";
        mag = static_cast<unsigned long long>(-(t + 1)) + 1ULL;
    } else {
        mag = static_cast<unsigned long long>(t);
    }
    const unsigned long long scale = static_cast<unsigned long long>(kTrafficScale);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%s%llu.%06llu", sign, mag / scale, mag % scale);
    return buf;
}

}  // namespace uavsim
