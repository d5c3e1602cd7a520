#pragma once

// |psi_eta|^2 sampled on a rectangular (z, t) grid.
//
// Layout: row i holds z_i = z_min + i (z_max - z_min)/(n_z - 1), column j holds
// t_j likewise, stored row-major. CSV export is a header line
//   # eta=<v> z_min=<v> z_max=<v> t_min=<v> t_max=<v> n_z=<v> n_t=<v>
// followed by n_z lines of n_t comma-separated values with 17 significant
// digits.

#include <iosfwd>
#include <string>
#include <vector>

#include "covosc/lightcone.hpp"

namespace covosc {

struct GridSpec {
    double z_min = -8.0;
    double z_max = 8.0;
    double t_min = -8.0;
    double t_max = 8.0;
    int n_z = 201;
    int n_t = 201;

    /// Throws InvalidArgument unless n_z, n_t >= 2 and min < max (finite).
    void validate() const;
    double z(int i) const { return z_min + i * (z_max - z_min) / (n_z - 1); }
    double t(int j) const { return t_min + j * (t_max - t_min) / (n_t - 1); }
    double dz() const { return (z_max - z_min) / (n_z - 1); }
    double dt() const { return (t_max - t_min) / (n_t - 1); }
};

struct DensityGrid {
    double eta = 0.0;
    GridSpec spec;
    std::vector<double> values;  // n_z * n_t, row-major

    double at(int i, int j) const {
        return values[static_cast<std::size_t>(i) * spec.n_t + j];
    }
};

DensityGrid density_grid(Rapidity eta, GridSpec const& spec);

/// Second-moment summary of a density grid, accumulated row by row in index
/// order.
struct GridMoments {
    double mass = 0.0;  // Riemann sum of values * dz * dt
    double mean_z = 0.0;
    double mean_t = 0.0;
    double var_z = 0.0;
    double var_t = 0.0;
    double cov_zt = 0.0;
    double major_variance = 0.0;
    double minor_variance = 0.0;
    double major_axis_angle = 0.0;  // radians from the +z axis
    double peak = 0.0;

    /// Ratio of principal standard deviations.
    double axes_ratio() const;
};

GridMoments grid_moments(DensityGrid const& grid);

void write_density_csv(std::ostream& os, DensityGrid const& grid);
std::string density_json(DensityGrid const& grid);

/// Parses the CSV format written by write_density_csv. Throws InvalidArgument
/// on malformed input.
DensityGrid read_density_csv(std::istream& is);

}  // namespace covosc
