#include "covosc/expansion.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <string>

#include "covosc/error.hpp"

namespace covosc {

double OverlapMatrix::max_off_diagonal() const {
    double worst = 0.0;
    for (int m = 0; m <= n_max; ++m) {
        for (int n = 0; n <= n_max; ++n) {
            if (m != n) {
                worst = std::max(worst, std::abs(at(m, n)));
            }
        }
    }
    return worst;
}

OverlapMatrix squeeze_overlaps(Rapidity eta, int n_max, QuadratureRule const& quad,
                               int n_limit) {
    if (n_max < 0 || n_max > n_limit) {
        throw OrderOverflow("expansion order " + std::to_string(n_max) + " outside [0, " +
                            std::to_string(n_limit) + "]");
    }
    // phi_m(z) phi_n(t) psi_eta ~ exp(-a u^2 - b v^2) in light-cone coordinates.
    double const a = 0.5 * (1.0 + std::exp(-eta.value()));
    double const b = 0.5 * (1.0 + std::exp(eta.value()));
    double const su = 1.0 / std::sqrt(a);
    double const sv = 1.0 / std::sqrt(b);
    auto const x = quad.nodes();
    auto const w = quad.weights();
    auto const n_nodes = static_cast<Eigen::Index>(x.size() * x.size());
    auto const n_basis = static_cast<Eigen::Index>(n_max + 1);

    Eigen::MatrixXd hz(n_nodes, n_basis);
    Eigen::MatrixXd ht(n_nodes, n_basis);
    Eigen::Index row = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j, ++row) {
            SpaceTimePoint const p = from_lightcone({su * x[i], sv * x[j]});
            double const weight = w[i] * w[j] * std::exp(x[i] * x[i] + x[j] * x[j]) *
                                  psi(eta, p.z, p.t) * su * sv;
            auto const fz = hermite_fns(n_max, p.z, n_limit);
            auto const ft = hermite_fns(n_max, p.t, n_limit);
            for (Eigen::Index k = 0; k < n_basis; ++k) {
                hz(row, k) = weight * fz[static_cast<std::size_t>(k)];
                ht(row, k) = ft[static_cast<std::size_t>(k)];
            }
        }
    }
    Eigen::MatrixXd const overlaps = hz.transpose() * ht;

    OverlapMatrix out;
    out.n_max = n_max;
    out.values.resize(static_cast<std::size_t>(n_basis * n_basis));
    for (Eigen::Index m = 0; m < n_basis; ++m) {
        for (Eigen::Index n = 0; n < n_basis; ++n) {
            out.values[static_cast<std::size_t>(m * n_basis + n)] = overlaps(m, n);
        }
    }
    return out;
}

double ExpansionCoefficients::sum_of_squares() const {
    double total = 0.0;
    for (double v : c) {
        total += v * v;
    }
    return total;
}

ExpansionCoefficients squeeze_expansion(Rapidity eta, int n_max, QuadratureRule const& quad,
                                        int n_limit, int min_order) {
    if (quad.order() < min_order) {
        throw QuadratureUnderResolved("quadrature order " + std::to_string(quad.order()) +
                                      " below minimum " + std::to_string(min_order));
    }
    OverlapMatrix const coarse = squeeze_overlaps(eta, n_max, quad, n_limit);
    OverlapMatrix const fine =
        squeeze_overlaps(eta, n_max, QuadratureRule::gauss_hermite(2 * quad.order()), n_limit);

    ExpansionCoefficients e;
    e.eta = eta.value();
    e.order = quad.order();
    e.max_off_diagonal = fine.max_off_diagonal();
    for (int n = 0; n <= n_max; ++n) {
        e.c.push_back(fine.at(n, n));
        e.max_order_change = std::max(e.max_order_change, std::abs(fine.at(n, n) - coarse.at(n, n)));
    }
    if (!(e.max_order_change <= kOrderAgreementTolerance)) {
        throw QuadratureUnderResolved("expansion coefficients at orders " +
                                      std::to_string(quad.order()) + " and " +
                                      std::to_string(2 * quad.order()) + " disagree");
    }
    if (!(e.max_off_diagonal <= kOffDiagonalTolerance)) {
        throw QuadratureUnderResolved("off-diagonal overlap " +
                                      std::to_string(e.max_off_diagonal) +
                                      " exceeds tolerance");
    }
    return e;
}

std::vector<double> coefficient_ratios(std::vector<double> const& c, double floor) {
    std::vector<double> ratios;
    for (std::size_t n = 0; n + 1 < c.size(); ++n) {
        if (std::abs(c[n + 1]) >= floor) {
            ratios.push_back(c[n + 1] / c[n]);
        }
    }
    return ratios;
}

double ratio_spread(std::vector<double> const& ratios) {
    if (ratios.empty()) {
        return 0.0;
    }
    auto const [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    return *hi - *lo;
}

}  // namespace covosc
