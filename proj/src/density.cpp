#include "covosc/density.hpp"

#include <cmath>
#include <istream>
#include "json.hpp"
#include <ostream>
#include <sstream>

#include "covosc/error.hpp"
#include "covosc/numfmt.hpp"
#include "covosc/wavefunction.hpp"

namespace covosc {

void GridSpec::validate() const {
    if (n_z < 2 || n_t < 2) {
        throw InvalidArgument("grid sizes must be >= 2");
    }
    if (!std::isfinite(z_min) || !std::isfinite(z_max) || !std::isfinite(t_min) ||
        !std::isfinite(t_max) || !(z_min < z_max) || !(t_min < t_max)) {
        throw InvalidArgument("grid bounds must be finite with min < max");
    }
}

DensityGrid density_grid(Rapidity eta, GridSpec const& spec) {
    spec.validate();
    DensityGrid g;
    g.eta = eta.value();
    g.spec = spec;
    g.values.resize(static_cast<std::size_t>(spec.n_z) * spec.n_t);
    for (int i = 0; i < spec.n_z; ++i) {
        double const z = spec.z(i);
        for (int j = 0; j < spec.n_t; ++j) {
            double const f = psi(eta, z, spec.t(j));
            g.values[static_cast<std::size_t>(i) * spec.n_t + j] = f * f;
        }
    }
    return g;
}

double GridMoments::axes_ratio() const { return std::sqrt(major_variance / minor_variance); }

GridMoments grid_moments(DensityGrid const& grid) {
    auto const& s = grid.spec;
    double w = 0.0, sz = 0.0, st = 0.0;
    GridMoments m;
    for (int i = 0; i < s.n_z; ++i) {
        for (int j = 0; j < s.n_t; ++j) {
            double const f = grid.at(i, j);
            w += f;
            sz += f * s.z(i);
            st += f * s.t(j);
            m.peak = std::max(m.peak, f);
        }
    }
    m.mass = w * s.dz() * s.dt();
    m.mean_z = sz / w;
    m.mean_t = st / w;

    // Central moments in a second pass.
    double zz = 0.0, tt = 0.0, zt = 0.0;
    for (int i = 0; i < s.n_z; ++i) {
        double const dz = s.z(i) - m.mean_z;
        for (int j = 0; j < s.n_t; ++j) {
            double const f = grid.at(i, j);
            double const dt = s.t(j) - m.mean_t;
            zz += f * dz * dz;
            tt += f * dt * dt;
            zt += f * dz * dt;
        }
    }
    m.var_z = zz / w;
    m.var_t = tt / w;
    m.cov_zt = zt / w;

    double const half_trace = 0.5 * (m.var_z + m.var_t);
    double const half_gap = std::hypot(0.5 * (m.var_z - m.var_t), m.cov_zt);
    m.major_variance = half_trace + half_gap;
    m.minor_variance = half_trace - half_gap;
    m.major_axis_angle = 0.5 * std::atan2(2.0 * m.cov_zt, m.var_z - m.var_t);
    return m;
}

void write_density_csv(std::ostream& os, DensityGrid const& grid) {
    auto const& s = grid.spec;
    os << "# eta=" << format_double(grid.eta) << " z_min=" << format_double(s.z_min)
       << " z_max=" << format_double(s.z_max) << " t_min=" << format_double(s.t_min)
       << " t_max=" << format_double(s.t_max) << " n_z=" << s.n_z << " n_t=" << s.n_t
       << '\n';
    for (int i = 0; i < s.n_z; ++i) {
        for (int j = 0; j < s.n_t; ++j) {
            if (j > 0) {
                os << ',';
            }
            os << format_double(grid.at(i, j));
        }
        os << '\n';
    }
}

std::string density_json(DensityGrid const& grid) {
    auto const& s = grid.spec;
    nlohmann::ordered_json j;
    j["eta"] = grid.eta;
    j["z_min"] = s.z_min;
    j["z_max"] = s.z_max;
    j["t_min"] = s.t_min;
    j["t_max"] = s.t_max;
    j["n_z"] = s.n_z;
    j["n_t"] = s.n_t;
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < s.n_z; ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int k = 0; k < s.n_t; ++k) {
            row.push_back(grid.at(i, k));
        }
        rows.push_back(std::move(row));
    }
    j["values"] = std::move(rows);
    return j.dump() + "\n";
}

namespace {

double parse_double(std::string const& text) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (std::exception const&) {
        throw InvalidArgument("not a number: '" + text + "'");
    }
    if (pos != text.size()) {
        throw InvalidArgument("trailing characters in number: '" + text + "'");
    }
    return v;
}

}  // namespace

DensityGrid read_density_csv(std::istream& is) {
    std::string header;
    if (!std::getline(is, header) || header.rfind("# ", 0) != 0) {
        throw InvalidArgument("density CSV: missing '# ' header line");
    }
    DensityGrid g;
    std::istringstream hs(header.substr(2));
    std::string field;
    int seen = 0;
    while (hs >> field) {
        auto const eq = field.find('=');
        if (eq == std::string::npos) {
            throw InvalidArgument("density CSV: malformed header field '" + field + "'");
        }
        std::string const key = field.substr(0, eq);
        double const v = parse_double(field.substr(eq + 1));
        if (key == "eta") g.eta = v;
        else if (key == "z_min") g.spec.z_min = v;
        else if (key == "z_max") g.spec.z_max = v;
        else if (key == "t_min") g.spec.t_min = v;
        else if (key == "t_max") g.spec.t_max = v;
        else if (key == "n_z") g.spec.n_z = static_cast<int>(v);
        else if (key == "n_t") g.spec.n_t = static_cast<int>(v);
        else throw InvalidArgument("density CSV: unknown header key '" + key + "'");
        ++seen;
    }
    if (seen != 7) {
        throw InvalidArgument("density CSV: header must carry 7 fields");
    }
    g.spec.validate();
    g.values.reserve(static_cast<std::size_t>(g.spec.n_z) * g.spec.n_t);
    std::string line;
    for (int i = 0; i < g.spec.n_z; ++i) {
        if (!std::getline(is, line)) {
            throw InvalidArgument("density CSV: expected " + std::to_string(g.spec.n_z) +
                                  " rows");
        }
        std::istringstream ls(line);
        std::string cell;
        int count = 0;
        while (std::getline(ls, cell, ',')) {
            g.values.push_back(parse_double(cell));
            ++count;
        }
        if (count != g.spec.n_t) {
            throw InvalidArgument("density CSV: row " + std::to_string(i) + " has " +
                                  std::to_string(count) + " values");
        }
    }
    return g;
}

}  // namespace covosc
