#include "covosc/wavefunction.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "covosc/error.hpp"

namespace covosc {

double ground_4d(double x, double y, double z, double t) {
    return std::exp(-0.5 * (x * x + y * y + z * z + t * t));
}

double ground_4d_normalized(double x, double y, double z, double t) {
    return ground_4d(x, y, z, t) / std::numbers::pi;
}

double psi(Rapidity eta, double z, double t) {
    double const e = eta.value();
    double const s = z + t;
    double const d = z - t;
    return std::exp(-0.25 * (std::exp(-e) * s * s + std::exp(e) * d * d)) /
           std::sqrt(std::numbers::pi);
}

namespace {

// psi^2 = exp(-exp(-eta) u^2 - exp(eta) v^2)/pi. With u = exp(eta/2) s and
// v = exp(-eta/2) r the Jacobian is 1 and the integrand against exp(-s^2 - r^2)
// is psi^2 exp(s^2 + r^2).
double light_cone_norm(Rapidity eta, QuadratureRule const& rule) {
    double const su = std::exp(0.5 * eta.value());
    double const sv = std::exp(-0.5 * eta.value());
    auto const x = rule.nodes();
    auto const w = rule.weights();
    double total = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            SpaceTimePoint const p = from_lightcone({su * x[i], sv * x[j]});
            double const f = psi(eta, p.z, p.t);
            row += w[j] * f * f * std::exp(x[i] * x[i] + x[j] * x[j]);
        }
        total += w[i] * row;
    }
    return total * su * sv;
}

}  // namespace

NormalizationResult normalization_report(Rapidity eta, QuadratureRule const& quad,
                                         int min_order) {
    if (quad.order() < min_order) {
        throw QuadratureUnderResolved("quadrature order " + std::to_string(quad.order()) +
                                      " below minimum " + std::to_string(min_order) +
                                      " at eta = " + std::to_string(eta.value()));
    }
    NormalizationResult r;
    r.order = quad.order();
    r.coarse_value = light_cone_norm(eta, quad);
    r.value = light_cone_norm(eta, QuadratureRule::gauss_hermite(2 * quad.order()));
    if (!(std::abs(r.value - r.coarse_value) <= kOrderAgreementTolerance)) {
        throw QuadratureUnderResolved("normalization at orders " +
                                      std::to_string(quad.order()) + " and " +
                                      std::to_string(2 * quad.order()) + " disagree");
    }
    return r;
}

double normalization(Rapidity eta, QuadratureRule const& quad, int min_order) {
    return normalization_report(eta, quad, min_order).value;
}

NormalizationResult normalization_adaptive(Rapidity eta, int min_order, int max_order) {
    for (int order = min_order;; order *= 2) {
        try {
            return normalization_report(eta, QuadratureRule::gauss_hermite(order), min_order);
        } catch (QuadratureUnderResolved const&) {
            if (2 * order > max_order) {
                throw;
            }
        }
    }
}

}  // namespace covosc
