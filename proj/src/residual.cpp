#include "covosc/residual.hpp"

#include <cmath>
#include <vector>

#include "covosc/error.hpp"
#include "covosc/wavefunction.hpp"

namespace covosc {

namespace {

void check_step(double h, std::size_t n_points) {
    if (!(h >= kMinStep && h <= kMaxStep)) {
        throw InvalidArgument("finite-difference step must lie in [1e-4, 1e-2]");
    }
    if (n_points == 0) {
        throw InvalidArgument("residual needs at least one point");
    }
}

double sign_of(Signature sig) { return sig == Signature::SpacePositive ? 1.0 : -1.0; }

ResidualResult fit(std::vector<double> const& op_psi, std::vector<double> const& psi_vals) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < op_psi.size(); ++k) {
        num += op_psi[k] * psi_vals[k];
        den += psi_vals[k] * psi_vals[k];
    }
    ResidualResult r;
    r.lambda = num / den;
    for (std::size_t k = 0; k < op_psi.size(); ++k) {
        r.max_residual = std::max(r.max_residual, std::abs(op_psi[k] - r.lambda * psi_vals[k]));
    }
    return r;
}

}  // namespace

ResidualResult residual_eq13(Rapidity eta, std::span<SpaceTimePoint const> points, double h,
                             Signature sig) {
    check_step(h, points.size());
    double const s = sign_of(sig);
    double const h2 = h * h;
    std::vector<double> op_psi;
    std::vector<double> vals;
    op_psi.reserve(points.size());
    vals.reserve(points.size());
    for (auto const& p : points) {
        double const f = psi(eta, p.z, p.t);
        double const d2z = (psi(eta, p.z + h, p.t) - 2.0 * f + psi(eta, p.z - h, p.t)) / h2;
        double const d2t = (psi(eta, p.z, p.t + h) - 2.0 * f + psi(eta, p.z, p.t - h)) / h2;
        op_psi.push_back(s * 0.5 * ((p.z * p.z - p.t * p.t) * f - (d2z - d2t)));
        vals.push_back(f);
    }
    return fit(op_psi, vals);
}

ResidualResult residual_eq13_4d(std::span<FourVector const> points, double h, Signature sig) {
    check_step(h, points.size());
    double const s = sign_of(sig);
    double const h2 = h * h;
    std::vector<double> op_psi;
    std::vector<double> vals;
    for (auto const& p : points) {
        double const f = ground_4d(p.x, p.y, p.z, p.t);
        double const dxx = (ground_4d(p.x + h, p.y, p.z, p.t) - 2.0 * f +
                            ground_4d(p.x - h, p.y, p.z, p.t)) / h2;
        double const dyy = (ground_4d(p.x, p.y + h, p.z, p.t) - 2.0 * f +
                            ground_4d(p.x, p.y - h, p.z, p.t)) / h2;
        double const dzz = (ground_4d(p.x, p.y, p.z + h, p.t) - 2.0 * f +
                            ground_4d(p.x, p.y, p.z - h, p.t)) / h2;
        double const dtt = (ground_4d(p.x, p.y, p.z, p.t + h) - 2.0 * f +
                            ground_4d(p.x, p.y, p.z, p.t - h)) / h2;
        double const x2 = p.x * p.x + p.y * p.y + p.z * p.z - p.t * p.t;
        op_psi.push_back(s * 0.5 * (x2 * f - (dxx + dyy + dzz - dtt)));
        vals.push_back(f);
    }
    return fit(op_psi, vals);
}

}  // namespace covosc
