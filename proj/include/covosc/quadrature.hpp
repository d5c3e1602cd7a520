#pragma once

#include <span>
#include <vector>

namespace covosc {

/// Gauss-Hermite rule for integrals of f(x) exp(-x^2) over the real line.
/// Nodes are strictly increasing and symmetric about zero; an order-n rule is
/// exact for polynomials of degree <= 2n - 1.
class QuadratureRule {
  public:
    static constexpr int kMaxOrder = 512;

    /// Throws InvalidArgument for order < 1 or order > kMaxOrder.
    static QuadratureRule gauss_hermite(int order);

    int order() const { return static_cast<int>(nodes_.size()); }
    std::span<double const> nodes() const { return nodes_; }
    std::span<double const> weights() const { return weights_; }

  private:
    QuadratureRule(std::vector<double> nodes, std::vector<double> weights)
        : nodes_(std::move(nodes)), weights_(std::move(weights)) {}

    std::vector<double> nodes_;
    std::vector<double> weights_;
};

}  // namespace covosc
