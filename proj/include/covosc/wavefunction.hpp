#pragma once

#include "covosc/lightcone.hpp"
#include "covosc/quadrature.hpp"

namespace covosc {

/// exp{-(x^2 + y^2 + z^2 + t^2)/2}, unnormalized.
double ground_4d(double x, double y, double z, double t);

/// ground_4d / pi, unit norm over R^4.
double ground_4d_normalized(double x, double y, double z, double t);

/// Boosted oscillator ground state
///   psi_eta(z, t) = pi^{-1/2} exp{-[exp(-eta)(z + t)^2 + exp(eta)(z - t)^2]/4}.
/// At eta = 0 it is the normalized rest-frame Gaussian pi^{-1/2} exp{-(z^2 + t^2)/2}.
double psi(Rapidity eta, double z, double t);

/// The eta-parameterized Gaussian family as a value type.
class CovariantWavefunction {
  public:
    explicit CovariantWavefunction(Rapidity eta) : eta_(eta) {}

    Rapidity rapidity() const { return eta_; }
    double operator()(double z, double t) const { return psi(eta_, z, t); }
    double operator()(SpaceTimePoint p) const { return psi(eta_, p.z, p.t); }

  private:
    Rapidity eta_;
};

inline constexpr int kMinQuadratureOrder = 40;
inline constexpr double kOrderAgreementTolerance = 1e-8;

struct NormalizationResult {
    double value = 0.0;         // order-2n estimate, the returned norm
    double coarse_value = 0.0;  // order-n estimate
    int order = 0;
};

/// Integral of psi^2 over the (z, t) plane: tensor Gauss-Hermite in light-cone
/// coordinates with each axis scaled to the squeezed width exp(+-eta/2). Runs
/// at quad.order() and twice that; throws QuadratureUnderResolved when the
/// order is below min_order or the two estimates differ by more than
/// kOrderAgreementTolerance.
NormalizationResult normalization_report(Rapidity eta, QuadratureRule const& quad,
                                         int min_order = kMinQuadratureOrder);

double normalization(Rapidity eta, QuadratureRule const& quad,
                     int min_order = kMinQuadratureOrder);

/// normalization_report starting at min_order and doubling the order until
/// the two-order check passes; rethrows QuadratureUnderResolved past max_order.
NormalizationResult normalization_adaptive(Rapidity eta, int min_order = kMinQuadratureOrder,
                                           int max_order = QuadratureRule::kMaxOrder / 2);

}  // namespace covosc
