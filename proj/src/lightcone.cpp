#include "covosc/lightcone.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "covosc/error.hpp"

namespace covosc {

Rapidity::Rapidity(double eta, double eta_max) : eta_(eta), eta_max_(eta_max) {
    if (!std::isfinite(eta) || std::abs(eta) > eta_max) {
        throw RapidityOutOfRange("rapidity " + std::to_string(eta) +
                                 " outside [-" + std::to_string(eta_max) + ", " +
                                 std::to_string(eta_max) + "]");
    }
}

SpaceTimePoint BoostMatrix::apply(SpaceTimePoint p) const {
    return {m00 * p.z + m01 * p.t, m10 * p.z + m11 * p.t};
}

BoostMatrix operator*(BoostMatrix const& lhs, BoostMatrix const& rhs) {
    return {lhs.m00 * rhs.m00 + lhs.m01 * rhs.m10, lhs.m00 * rhs.m01 + lhs.m01 * rhs.m11,
            lhs.m10 * rhs.m00 + lhs.m11 * rhs.m10, lhs.m10 * rhs.m01 + lhs.m11 * rhs.m11};
}

BoostMatrix boost_matrix(Rapidity eta) {
    double const ch = std::cosh(eta.value() / 2.0);
    double const sh = std::sinh(eta.value() / 2.0);
    return {ch, sh, sh, ch};
}

SpaceTimePoint boost_point(Rapidity eta, SpaceTimePoint p) {
    return boost_matrix(eta).apply(p);
}

LightConePoint to_lightcone(SpaceTimePoint p) {
    constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    return {(p.z + p.t) * inv_sqrt2, (p.z - p.t) * inv_sqrt2};
}

SpaceTimePoint from_lightcone(LightConePoint q) {
    constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    return {(q.u + q.v) * inv_sqrt2, (q.u - q.v) * inv_sqrt2};
}

LightConePoint boost_lightcone(Rapidity eta, LightConePoint q) {
    double const half = eta.value() / 2.0;
    return {std::exp(half) * q.u, std::exp(-half) * q.v};
}

namespace {

FourVector combine(FourVector const& a, FourVector const& b, double sa, double sb) {
    return {sa * a.x + sb * b.x, sa * a.y + sb * b.y, sa * a.z + sb * b.z,
            sa * a.t + sb * b.t};
}

}  // namespace

HadronCoordinates hadron_coordinates(FourVector const& xa, FourVector const& xb) {
    double const s = 1.0 / (2.0 * std::numbers::sqrt2);
    return {combine(xa, xb, 0.5, 0.5), combine(xa, xb, s, -s)};
}

std::pair<FourVector, FourVector> constituent_coordinates(HadronCoordinates const& h) {
    constexpr double r2 = std::numbers::sqrt2;
    return {combine(h.center, h.separation, 1.0, r2),
            combine(h.center, h.separation, 1.0, -r2)};
}

}  // namespace covosc
