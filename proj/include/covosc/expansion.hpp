#pragma once

// Expansion of psi_eta in products phi_m(z) phi_n(t) of unit-frequency
// oscillator eigenfunctions. Only the diagonal m = n survives.

#include <vector>

#include "covosc/hermite.hpp"
#include "covosc/lightcone.hpp"
#include "covosc/quadrature.hpp"
#include "covosc/wavefunction.hpp"

namespace covosc {

inline constexpr double kOffDiagonalTolerance = 1e-10;

/// Row-major (n_max + 1) x (n_max + 1) matrix of <phi_m phi_n | psi_eta>.
struct OverlapMatrix {
    int n_max = 0;
    std::vector<double> values;

    double at(int m, int n) const {
        return values[static_cast<std::size_t>(m) * (n_max + 1) + n];
    }
    double max_off_diagonal() const;
};

/// Tensor Gauss-Hermite in light-cone coordinates, each axis scaled to the
/// width of phi_m(z) phi_n(t) psi_eta(z, t) along it; exact for the polynomial
/// part once quad.order() > n_max.
OverlapMatrix squeeze_overlaps(Rapidity eta, int n_max, QuadratureRule const& quad,
                               int n_limit = kDefaultNMax);

struct ExpansionCoefficients {
    double eta = 0.0;
    std::vector<double> c;  // c[n] = <phi_n phi_n | psi_eta>
    double max_off_diagonal = 0.0;
    double max_order_change = 0.0;  // max |c(order n) - c(order 2n)|
    int order = 0;

    double sum_of_squares() const;
};

/// Runs squeeze_overlaps at quad.order() and 2 * quad.order(). Throws
/// QuadratureUnderResolved if the order is below min_order, the diagonal
/// changes by more than kOrderAgreementTolerance between orders, or an
/// off-diagonal overlap exceeds kOffDiagonalTolerance; OrderOverflow if
/// n_max > n_limit.
ExpansionCoefficients squeeze_expansion(Rapidity eta, int n_max, QuadratureRule const& quad,
                                        int n_limit = kDefaultNMax,
                                        int min_order = kMinQuadratureOrder);

/// Ratios c[n+1]/c[n] for consecutive coefficients with |c[n+1]| >= floor.
std::vector<double> coefficient_ratios(std::vector<double> const& c, double floor);

/// max - min of coefficient_ratios.
double ratio_spread(std::vector<double> const& ratios);

}  // namespace covosc
