#pragma once

// Two equal-mass oscillators with a bilinear coupling,
//   H = (p1^2 + p2^2)/2m + (A x1^2 + A x2^2 + 2C x1 x2)/2,
// rewritten in the (x1 + x2), (x1 - x2) normal coordinates.

#include "covosc/lightcone.hpp"

namespace covosc {

/// Requires m > 0, A > 0 and |C| < A. The mass only enters the mode
/// frequencies; the squeeze parameter and ground state do not depend on it.
struct CoupledOscillatorSystem {
    double m = 1.0;
    double a = 1.0;
    double c = 0.0;
};

struct NormalModeData {
    double k = 1.0;  // sqrt(A^2 - C^2)
    double eta = 0.0;  // exp(2 eta) = sqrt((A - C)/(A + C))
    double omega_plus = 1.0;  // (x1 + x2) mode, sqrt((A + C)/m)
    double omega_minus = 1.0;  // (x1 - x2) mode, sqrt((A - C)/m)
};

/// Throws DegenerateCoupling if |C| >= A, InvalidArgument if m or A is not
/// positive.
NormalModeData normal_modes(CoupledOscillatorSystem const& sys);

/// (A x1^2 + A x2^2 + 2 C x1 x2)/2
double potential_energy(CoupledOscillatorSystem const& sys, double x1, double x2);

/// (K/4){exp(-2 eta)(x1 + x2)^2 + exp(2 eta)(x1 - x2)^2}; equal to
/// potential_energy.
double potential_energy_normal_form(NormalModeData const& modes, double x1, double x2);

/// (1/sqrt(pi)) exp{-[exp(-eta)(x1 + x2)^2 + exp(eta)(x1 - x2)^2]/4}
double ground_state(CoupledOscillatorSystem const& sys, double x1, double x2);

}  // namespace covosc
