#pragma once

// Boosts along z written as 2x2 matrices on (z, t), light-cone coordinates and
// the two-constituent center/separation coordinates. Natural units, c = 1.

#include <utility>

namespace covosc {

inline constexpr double kDefaultEtaMax = 10.0;

/// Boost parameter. The boost matrix carries eta/2, so light-cone axes scale
/// by exp(+-eta/2) and Gaussian exponents by exp(+-eta).
class Rapidity {
  public:
    /// Throws RapidityOutOfRange unless eta is finite and |eta| <= eta_max.
    explicit Rapidity(double eta, double eta_max = kDefaultEtaMax);

    double value() const { return eta_; }
    Rapidity operator-() const { return Rapidity(-eta_, eta_max_); }

  private:
    double eta_;
    double eta_max_;
};

struct SpaceTimePoint {
    double z = 0.0;
    double t = 0.0;
};

struct LightConePoint {
    double u = 0.0;
    double v = 0.0;
};

struct FourVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double t = 0.0;
};

struct BoostMatrix {
    double m00 = 1.0;
    double m01 = 0.0;
    double m10 = 0.0;
    double m11 = 1.0;

    double determinant() const { return m00 * m11 - m01 * m10; }
    SpaceTimePoint apply(SpaceTimePoint p) const;
};

BoostMatrix operator*(BoostMatrix const& lhs, BoostMatrix const& rhs);

/// [[cosh(eta/2), sinh(eta/2)], [sinh(eta/2), cosh(eta/2)]]
BoostMatrix boost_matrix(Rapidity eta);

SpaceTimePoint boost_point(Rapidity eta, SpaceTimePoint p);

/// u = (z + t)/sqrt(2), v = (z - t)/sqrt(2)
LightConePoint to_lightcone(SpaceTimePoint p);
SpaceTimePoint from_lightcone(LightConePoint q);

/// (u, v) -> (exp(eta/2) u, exp(-eta/2) v)
LightConePoint boost_lightcone(Rapidity eta, LightConePoint q);

/// u*v, which equals (z^2 - t^2)/2 and is left unchanged by every boost.
inline double lightcone_product(LightConePoint q) { return q.u * q.v; }

struct HadronCoordinates {
    FourVector center;      // X = (x_a + x_b)/2
    FourVector separation;  // x = (x_a - x_b)/(2 sqrt 2)
};

HadronCoordinates hadron_coordinates(FourVector const& xa, FourVector const& xb);

/// Inverse of hadron_coordinates: x_a = X + sqrt2 x, x_b = X - sqrt2 x.
std::pair<FourVector, FourVector> constituent_coordinates(HadronCoordinates const& h);

}  // namespace covosc
