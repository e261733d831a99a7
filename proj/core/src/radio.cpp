#include "uavsim/radio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace uavsim {

double friis_received_power(double link_budget_K, double wavelength,
                            double distance) {
    if (!(distance > 0.0)) throw std::domain_error("friis distance must be > 0");
    return link_budget_K / (wavelength * wavelength * distance * distance);
}

double snr_db(double px, double py, std::span<const UavNode> uavs,
              const SimConfig& cfg, bool include_root) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& u : uavs) {
        if (!u.active()) continue;
        if (u.role == UavRole::Root && !include_root) continue;
        const double d = dist3d_ground_to_uav(px, py, u);
        const double p = friis_received_power(cfg.link_budget_K, cfg.wavelength_lambda, d);
        best = std::max(best, p);
    }
    if (best < 0.0) return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(best / cfg.noise_power);
}

SnrGrid compute_grid(std::span<const UavNode> uavs, const SimConfig& cfg,
                     bool include_root) {
    SnrGrid grid;
    grid.half_side = cfg.venue_radius_Rp + cfg.uav_range_R;
    grid.step = cfg.grid_step;
    grid.side = static_cast<int>(std::floor(2.0 * grid.half_side / grid.step)) + 1;
    grid.values.reserve(static_cast<std::size_t>(grid.side) * grid.side);
    for (int r = 0; r < grid.side; ++r) {
        const double y = grid.coord(r);
        for (int c = 0; c < grid.side; ++c)
            grid.values.push_back(snr_db(grid.coord(c), y, uavs, cfg, include_root));
    }
    return grid;
}

int snr_to_pgm_byte(double snr_db_value) {
    const double scaled = (snr_db_value + 10.0) / 50.0 * 255.0;
    if (!(scaled > 0.0)) return 0;  // also catches -infinity
    if (scaled >= 255.0) return 255;
    return static_cast<int>(std::floor(scaled + 0.5));
}

void write_grid_csv(const SnrGrid& grid, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SimError("cannot write '" + path + "'");
    out << "x,y,snr_db\n";
    char buf[96];
    for (int r = 0; r < grid.side; ++r)
        for (int c = 0; c < grid.side; ++c) {
            std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f\n", grid.coord(c),
                          grid.coord(r), grid.at(r, c));
            out << buf;
        }
}

SnrGrid read_grid_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SimError("cannot open '" + path + "'");

    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& why) {
        throw SimError(path + ": " + why + " (line " + std::to_string(lineno) + ")");
    };

    ++lineno;
    if (!std::getline(in, line) || line != "x,y,snr_db")
        fail("expected header 'x,y,snr_db'");

    std::vector<double> xs, ys, snrs;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        double x, y, s;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &y, &s) != 3)
            fail("malformed row");
        xs.push_back(x);
        ys.push_back(y);
        snrs.push_back(s);
    }
    if (snrs.empty()) fail("no data rows");

    // Rows are emitted row-major with x varying fastest; the first row's
    // length gives the side.
    std::size_t width = 1;
    while (width < ys.size() && ys[width] == ys[0]) ++width;
    if (width * width != snrs.size()) {
        lineno = static_cast<int>(snrs.size()) + 1;
        fail("grid is not square");
    }

    SnrGrid grid;
    grid.side = static_cast<int>(width);
    grid.values = std::move(snrs);
    grid.half_side = -xs[0];
    grid.step = width > 1 ? xs[1] - xs[0] : 0.0;
    return grid;
}

void write_pgm(const SnrGrid& grid, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SimError("cannot write '" + path + "'");
    out << "P5\n" << grid.side << " " << grid.side << "\n255\n";
    std::string raster;
    raster.reserve(grid.values.size());
    for (double v : grid.values)
        raster.push_back(static_cast<char>(static_cast<unsigned char>(snr_to_pgm_byte(v))));
    out.write(raster.data(), static_cast<std::streamsize>(raster.size()));
}

}  // namespace uavsim
