#pragma once

#include <span>
#include <string>
#include <vector>

#include "uavsim/config.hpp"
#include "uavsim/model.hpp"

namespace uavsim {

// SNR samples over the square of side 2*(R+R') centered at the origin.
// Row r is the line y = -half_side + r*step; column c is x = -half_side + c*step.
struct SnrGrid {
    double half_side = 0.0;
    double step = 0.0;
    int side = 0;
    std::vector<double> values;  // row-major, side*side entries, dB

    double at(int row, int col) const {
        return values[static_cast<std::size_t>(row) * side + col];
    }
    double coord(int i) const { return -half_side + i * step; }
};

// Received power K / (lambda^2 d^2). d must be positive; access links always
// go through altitude H, so d >= H in practice.
double friis_received_power(double link_budget_K, double wavelength, double distance);

// Best-server SNR at a ground point, in dB. Suspended UAVs never serve and
// the root only when include_root is set. Returns -infinity when no server
// exists.
double snr_db(double px, double py, std::span<const UavNode> uavs,
              const SimConfig& cfg, bool include_root = false);

SnrGrid compute_grid(std::span<const UavNode> uavs, const SimConfig& cfg,
                     bool include_root = false);

// [-10, 40] dB mapped linearly onto [0, 255], clamped, round half up.
int snr_to_pgm_byte(double snr_db_value);

void write_grid_csv(const SnrGrid& grid, const std::string& path);
// Throws SimError with the offending line number on malformed input.
SnrGrid read_grid_csv(const std::string& path);
// Binary P5, one byte per cell, raster rows in grid row order.
void write_pgm(const SnrGrid& grid, const std::string& path);

}  // namespace uavsim
