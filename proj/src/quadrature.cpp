#include "covosc/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <string>

#include "covosc/error.hpp"

namespace covosc {

namespace {

struct HermiteEval {
    double value;       // orthonormal Hermite polynomial p_n(x)
    double derivative;  // p_n'(x)
};

// Polynomials orthonormal under exp(-x^2): p_0 = pi^{-1/4},
// p_{j} = sqrt(2/j) x p_{j-1} - sqrt((j-1)/j) p_{j-2}.
HermiteEval orthonormal_hermite(int n, double x) {
    double p_prev = 0.0;
    double p = 1.0 / std::pow(std::numbers::pi, 0.25);
    for (int j = 1; j <= n; ++j) {
        double const next = std::sqrt(2.0 / j) * x * p - std::sqrt((j - 1.0) / j) * p_prev;
        p_prev = p;
        p = next;
    }
    return {p, std::sqrt(2.0 * n) * p_prev};
}

}  // namespace

QuadratureRule QuadratureRule::gauss_hermite(int order) {
    if (order < 1 || order > kMaxOrder) {
        throw InvalidArgument("Gauss-Hermite order must be in [1, " +
                              std::to_string(kMaxOrder) + "], got " +
                              std::to_string(order));
    }
    auto const n = static_cast<Eigen::Index>(order);

    // Golub-Welsch eigenvalues give the starting nodes.
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        sub(k) = std::sqrt(static_cast<double>(k + 1) / 2.0);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    Eigen::VectorXd const guess = solver.eigenvalues();

    std::vector<double> nodes(order);
    std::vector<double> weights(order);
    for (int i = 0; i < order; ++i) {
        double x = guess(i);
        HermiteEval h = orthonormal_hermite(order, x);
        for (int iter = 0; iter < 8 && h.derivative != 0.0; ++iter) {
            double const dx = h.value / h.derivative;
            x -= dx;
            h = orthonormal_hermite(order, x);
            if (std::abs(dx) <= 1e-16 * std::max(1.0, std::abs(x))) {
                break;
            }
        }
        nodes[i] = x;
        weights[i] = 2.0 / (h.derivative * h.derivative);
    }

    // Enforce exact mirror symmetry.
    for (int i = 0; i < order / 2; ++i) {
        int const j = order - 1 - i;
        double const x = 0.5 * (nodes[j] - nodes[i]);
        double const w = 0.5 * (weights[i] + weights[j]);
        nodes[i] = -x;
        nodes[j] = x;
        weights[i] = w;
        weights[j] = w;
    }
    if (order % 2 == 1) {
        nodes[order / 2] = 0.0;
    }
    return QuadratureRule(std::move(nodes), std::move(weights));
}

}  // namespace covosc
