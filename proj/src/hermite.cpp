#include "covosc/hermite.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "covosc/error.hpp"

namespace covosc {

namespace {

void check_order(int n, int n_limit) {
    if (n < 0 || n > n_limit) {
        throw OrderOverflow("Hermite order " + std::to_string(n) + " outside [0, " +
                            std::to_string(n_limit) + "]");
    }
}

}  // namespace

std::vector<double> hermite_fns(int n_max, double x, int n_limit) {
    check_order(n_max, n_limit);
    std::vector<double> phi(static_cast<std::size_t>(n_max) + 1);
    phi[0] = std::exp(-0.5 * x * x) / std::pow(std::numbers::pi, 0.25);
    if (n_max >= 1) {
        phi[1] = std::numbers::sqrt2 * x * phi[0];
    }
    for (int n = 1; n < n_max; ++n) {
        phi[n + 1] = std::sqrt(2.0 / (n + 1)) * x * phi[n] -
                     std::sqrt(static_cast<double>(n) / (n + 1)) * phi[n - 1];
    }
    return phi;
}

double hermite_fn(int n, double x, int n_limit) {
    return hermite_fns(n, x, n_limit).back();
}

}  // namespace covosc
