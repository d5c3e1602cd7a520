#include "covosc/coupled_osc.hpp"

#include <cmath>
#include <numbers>

#include "covosc/error.hpp"

namespace covosc {

namespace {

void validate(CoupledOscillatorSystem const& sys) {
    if (!(sys.m > 0.0) || !std::isfinite(sys.m)) {
        throw InvalidArgument("mass must be positive and finite");
    }
    if (!(sys.a > 0.0) || !std::isfinite(sys.a)) {
        throw InvalidArgument("spring constant A must be positive and finite");
    }
    if (!std::isfinite(sys.c) || std::abs(sys.c) >= sys.a) {
        throw DegenerateCoupling(sys.a, sys.c);
    }
}

}  // namespace

NormalModeData normal_modes(CoupledOscillatorSystem const& sys) {
    validate(sys);
    double const sum = sys.a + sys.c;
    double const diff = sys.a - sys.c;
    NormalModeData d;
    // sqrt(sum*diff) instead of sqrt(A^2 - C^2) keeps precision when |C| ~ A.
    d.k = std::sqrt(sum * diff);
    d.eta = 0.25 * std::log(diff / sum);
    d.omega_plus = std::sqrt(sum / sys.m);
    d.omega_minus = std::sqrt(diff / sys.m);
    return d;
}

double potential_energy(CoupledOscillatorSystem const& sys, double x1, double x2) {
    return 0.5 * (sys.a * x1 * x1 + sys.a * x2 * x2 + 2.0 * sys.c * x1 * x2);
}

double potential_energy_normal_form(NormalModeData const& modes, double x1, double x2) {
    double const s = x1 + x2;
    double const d = x1 - x2;
    return 0.25 * modes.k *
           (std::exp(-2.0 * modes.eta) * s * s + std::exp(2.0 * modes.eta) * d * d);
}

double ground_state(CoupledOscillatorSystem const& sys, double x1, double x2) {
    double const eta = normal_modes(sys).eta;
    double const s = x1 + x2;
    double const d = x1 - x2;
    return std::exp(-0.25 * (std::exp(-eta) * s * s + std::exp(eta) * d * d)) /
           std::sqrt(std::numbers::pi);
}

}  // namespace covosc
