#include "uavsim/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace uavsim {

SimConfig::SimConfig() {
    link_budget_K = calibrated_link_budget(uav_range_R, altitude_H,
                                           wavelength_lambda, noise_power);
}

double calibrated_link_budget(double range_R, double altitude_H,
                              double wavelength, double noise_power) {
    const double d2 = range_R * range_R + altitude_H * altitude_H;
    return std::pow(10.0, 1.5) * wavelength * wavelength * d2 * noise_power;
}

const SimConfig& validate_config(const SimConfig& cfg) {
    auto fail = [](const char* msg) { throw ConfigError(msg); };

    if (!(cfg.uav_range_R > 0)) fail("uav_range_R must be > 0");
    if (!(cfg.uav_range_R < cfg.venue_radius_Rp))
        fail("uav_range_R must be < venue_radius_Rp");
    if (!(cfg.altitude_H > 0)) fail("altitude_H must be > 0");
    if (!(cfg.num_users_N > 0)) fail("num_users_N must be > 0");
    if (!(cfg.buffer_access_B > 0)) fail("buffer_access_B must be > 0");
    if (!(cfg.buffer_relay >= cfg.buffer_access_B))
        fail("buffer_relay must be >= buffer_access_B");
    if (!(cfg.wavelength_lambda > 0)) fail("wavelength_lambda must be > 0");
    if (!(cfg.noise_power > 0)) fail("noise_power must be > 0");
    if (!(cfg.link_budget_K > 0)) fail("link_budget_K must be > 0");
    if (!(cfg.edge_weight_alpha >= 0.0 && cfg.edge_weight_alpha <= 1.0))
        fail("edge_weight_alpha out of [0,1]");
    if (!(cfg.surge_tick >= 0)) fail("surge_tick must be >= 0");
    if (!(cfg.surge_factor > 1)) fail("surge_factor must be > 1");
    if (!(cfg.ma_window_W >= 1)) fail("ma_window_W must be >= 1");
    if (!(cfg.surge_threshold > 1)) fail("surge_threshold must be > 1");
    if (!(cfg.max_uavs >= 0)) fail("max_uavs must be >= 0");
    if (!(cfg.ticks >= 0)) fail("ticks must be >= 0");
    if (!(cfg.grid_step > 0)) fail("grid_step must be > 0");
    if (!(cfg.rate_control >= 0)) fail("rate_control must be >= 0");
    if (!(cfg.heartbeat_timeout >= 1)) fail("heartbeat_timeout must be >= 1");
    return cfg;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& value, const std::string& key, int line) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0')
        throw ConfigError("invalid number for '" + key + "' (line " +
                          std::to_string(line) + ")");
    return v;
}

long long parse_int(const std::string& value, const std::string& key, int line) {
    char* end = nullptr;
    const long long v = std::strtoll(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0')
        throw ConfigError("invalid integer for '" + key + "' (line " +
                          std::to_string(line) + ")");
    return v;
}

unsigned long long parse_u64(const std::string& value, const std::string& key,
                             int line) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0')
        throw ConfigError("invalid integer for '" + key + "' (line " +
                          std::to_string(line) + ")");
    return v;
}

// Negative rates keep the "draw per user" sentinel instead of a magnitude.
Traffic parse_rate(const std::string& value, const std::string& key, int line) {
    const double v = parse_double(value, key, line);
    return v < 0 ? Traffic{-1} : traffic_from_units(v);
}

}  // namespace

SimConfig parse_config_text(const std::string& text) {
    SimConfig cfg;
    bool k_explicit = false;

    using Setter = std::function<void(const std::string&, int)>;
    const std::map<std::string, Setter> setters = {
        {"venue_radius_Rp", [&](const std::string& v, int n) { cfg.venue_radius_Rp = parse_double(v, "venue_radius_Rp", n); }},
        {"uav_range_R", [&](const std::string& v, int n) { cfg.uav_range_R = parse_double(v, "uav_range_R", n); }},
        {"altitude_H", [&](const std::string& v, int n) { cfg.altitude_H = parse_double(v, "altitude_H", n); }},
        {"num_users_N", [&](const std::string& v, int n) { cfg.num_users_N = static_cast<int>(parse_int(v, "num_users_N", n)); }},
        {"buffer_access_B", [&](const std::string& v, int n) { cfg.buffer_access_B = traffic_from_units(parse_double(v, "buffer_access_B", n)); }},
        {"buffer_relay", [&](const std::string& v, int n) { cfg.buffer_relay = traffic_from_units(parse_double(v, "buffer_relay", n)); }},
        {"wavelength_lambda", [&](const std::string& v, int n) { cfg.wavelength_lambda = parse_double(v, "wavelength_lambda", n); }},
        {"noise_power", [&](const std::string& v, int n) { cfg.noise_power = parse_double(v, "noise_power", n); }},
        {"link_budget_K", [&](const std::string& v, int n) { cfg.link_budget_K = parse_double(v, "link_budget_K", n); k_explicit = true; }},
        {"edge_weight_alpha", [&](const std::string& v, int n) { cfg.edge_weight_alpha = parse_double(v, "edge_weight_alpha", n); }},
        {"surge_tick", [&](const std::string& v, int n) { cfg.surge_tick = static_cast<int>(parse_int(v, "surge_tick", n)); }},
        {"surge_factor", [&](const std::string& v, int n) { cfg.surge_factor = parse_double(v, "surge_factor", n); }},
        {"ma_window_W", [&](const std::string& v, int n) { cfg.ma_window_W = static_cast<int>(parse_int(v, "ma_window_W", n)); }},
        {"surge_threshold", [&](const std::string& v, int n) { cfg.surge_threshold = parse_double(v, "surge_threshold", n); }},
        {"max_uavs", [&](const std::string& v, int n) { cfg.max_uavs = static_cast<int>(parse_int(v, "max_uavs", n)); }},
        {"ticks", [&](const std::string& v, int n) { cfg.ticks = static_cast<int>(parse_int(v, "ticks", n)); }},
        {"grid_step", [&](const std::string& v, int n) { cfg.grid_step = parse_double(v, "grid_step", n); }},
        {"seed", [&](const std::string& v, int n) { cfg.seed = parse_u64(v, "seed", n); }},
        {"rate_control", [&](const std::string& v, int n) { cfg.rate_control = parse_rate(v, "rate_control", n); }},
        {"rate_realtime", [&](const std::string& v, int n) { cfg.rate_realtime = parse_rate(v, "rate_realtime", n); }},
        {"rate_nonrealtime", [&](const std::string& v, int n) { cfg.rate_nonrealtime = parse_rate(v, "rate_nonrealtime", n); }},
        {"heartbeat_timeout", [&](const std::string& v, int n) { cfg.heartbeat_timeout = static_cast<int>(parse_int(v, "heartbeat_timeout", n)); }},
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected 'key = value' (line " +
                              std::to_string(lineno) + ")");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end())
            throw ConfigError("unknown config key '" + key + "' (line " +
                              std::to_string(lineno) + ")");
        it->second(value, lineno);
    }

    if (!k_explicit)
        cfg.link_budget_K = calibrated_link_budget(cfg.uav_range_R, cfg.altitude_H,
                                                   cfg.wavelength_lambda,
                                                   cfg.noise_power);
    return cfg;
}

SimConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

}  // namespace uavsim
