#pragma once

// Finite-difference check of the oscillator equation
//   (1/2){x_mu x^mu - d^2/dx_mu dx^mu} psi = lambda psi.

#include <span>

#include "covosc/lightcone.hpp"

namespace covosc {

/// Metric convention. SpacePositive uses x^2 + y^2 + z^2 - t^2 and the matching
/// d'Alembertian; TimePositive is the overall-sign twin and flips lambda.
enum class Signature { SpacePositive, TimePositive };

struct ResidualResult {
    double lambda = 0.0;        // least-squares eigenvalue
    double max_residual = 0.0;  // max |Op psi - lambda psi| over the points
};

inline constexpr double kMinStep = 1e-4;
inline constexpr double kMaxStep = 1e-2;

/// (z, t) restriction applied to psi(eta, .) with central second differences
/// of step h. Throws InvalidArgument for h outside [kMinStep, kMaxStep] or an
/// empty point list.
ResidualResult residual_eq13(Rapidity eta, std::span<SpaceTimePoint const> points, double h,
                             Signature sig = Signature::SpacePositive);

/// Full four-dimensional operator applied to ground_4d.
ResidualResult residual_eq13_4d(std::span<FourVector const> points, double h,
                                Signature sig = Signature::SpacePositive);

}  // namespace covosc
