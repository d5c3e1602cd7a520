#include <cmath>
#include <numbers>

#include "covosc/error.hpp"
#include "covosc/hermite.hpp"
#include "covosc/quadrature.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace covosc;

TEST_CASE("Gauss-Hermite rule shape") {
    for (int order : {1, 2, 7, 40, 64, 128, 256}) {
        auto const q = QuadratureRule::gauss_hermite(order);
        REQUIRE(q.order() == order);
        for (int i = 0; i + 1 < order; ++i) {
            CHECK(q.nodes()[i] < q.nodes()[i + 1]);
        }
        for (int i = 0; i < order; ++i) {
            CHECK(q.nodes()[i] == -q.nodes()[order - 1 - i]);
            CHECK(q.weights()[i] > 0.0);
        }
    }
    CHECK_THROWS_AS(QuadratureRule::gauss_hermite(0), InvalidArgument);
    CHECK_THROWS_AS(QuadratureRule::gauss_hermite(QuadratureRule::kMaxOrder + 1), InvalidArgument);
}

TEST_CASE("Gauss-Hermite integrates even monomials exactly") {
    double const sqrt_pi = std::sqrt(std::numbers::pi);
    // Integral of x^{2k} exp(-x^2) = Gamma(k + 1/2).
    for (int order : {3, 10, 40, 64, 128}) {
        auto const q = QuadratureRule::gauss_hermite(order);
        for (int deg : {0, 2, 4}) {
            double sum = 0.0;
            for (int i = 0; i < order; ++i) {
                sum += q.weights()[i] * std::pow(q.nodes()[i], deg);
            }
            double const exact = std::tgamma(deg / 2.0 + 0.5);
            CHECK(std::abs(sum - exact) < 1e-12);
        }
        CHECK(std::abs(std::tgamma(0.5) - sqrt_pi) < 1e-15);
    }
    // Highest exact degree 2n - 1 = 11 for n = 6: x^10.
    auto const q = QuadratureRule::gauss_hermite(6);
    double sum = 0.0;
    for (int i = 0; i < 6; ++i) sum += q.weights()[i] * std::pow(q.nodes()[i], 10);
    CHECK(sum == doctest::Approx(std::tgamma(5.5)).epsilon(1e-13));
}

TEST_CASE("hermite_fn spot values") {
    CHECK(hermite_fn(0, 0.0) == doctest::Approx(std::pow(std::numbers::pi, -0.25)).epsilon(1e-15));
    CHECK(hermite_fn(0, 0.0) == doctest::Approx(0.751126).epsilon(1e-6));
    CHECK(hermite_fn(1, 0.0) == 0.0);
    for (int n = 0; n <= 12; ++n) {
        for (double x : {-2.5, -0.3, 0.0, 0.7, 1.9, 3.4}) {
            CHECK(hermite_fn(n, x) ==
                  doctest::Approx(covosc::testing::hermite_fn_closed(n, x)).epsilon(1e-12).scale(1.0));
        }
    }
    CHECK_THROWS_AS(hermite_fn(kDefaultNMax + 1, 0.1), OrderOverflow);
    CHECK_THROWS_AS(hermite_fn(-1, 0.1), OrderOverflow);
    CHECK_NOTHROW(hermite_fn(80, 0.1, 100));
    auto const all = hermite_fns(10, 0.9);
    CHECK(all.size() == 11);
    CHECK(all[7] == hermite_fn(7, 0.9));
}

TEST_CASE("hermite functions are orthonormal") {
    // phi_m phi_n = h_m h_n exp(-x^2): integrate the polynomial part against
    // the Gauss-Hermite weight with an order that makes it exact.
    auto const q = QuadratureRule::gauss_hermite(40);
    double worst = 0.0;
    for (int m = 0; m <= 20; ++m) {
        for (int n = 0; n <= 20; ++n) {
            double sum = 0.0;
            for (int i = 0; i < q.order(); ++i) {
                double const x = q.nodes()[i];
                sum += q.weights()[i] * std::exp(x * x) * hermite_fn(m, x) * hermite_fn(n, x);
            }
            worst = std::max(worst, std::abs(sum - (m == n ? 1.0 : 0.0)));
        }
    }
    CHECK(worst < 1e-10);
}
