#include <cmath>

#include "covosc/error.hpp"
#include "covosc/expansion.hpp"
#include "covosc/hermite.hpp"
#include "covosc/wavefunction.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace covosc;

TEST_CASE("expansion at rest is the ground state alone") {
    auto const e = squeeze_expansion(Rapidity(0.0), 8, QuadratureRule::gauss_hermite(64));
    REQUIRE(e.c.size() == 9);
    CHECK(std::abs(e.c[0] - 1.0) < 1e-12);
    for (std::size_t n = 1; n < e.c.size(); ++n) {
        CHECK(std::abs(e.c[n]) < 1e-12);
    }
}

TEST_CASE("low coefficients agree with direct overlap integrals") {
    // Oracle: trapezoid rule in (z, t) on phi_n(z) phi_n(t) psi_eta(z, t).
    auto const e = squeeze_expansion(Rapidity(1.0), 6, QuadratureRule::gauss_hermite(64));
    for (int n : {0, 1, 2, 3}) {
        double const oracle = covosc::testing::trapezoid_2d(
            [n](double z, double t) {
                return covosc::testing::hermite_fn_closed(n, z) *
                       covosc::testing::hermite_fn_closed(n, t) * psi(Rapidity(1.0), z, t);
            },
            -12.0, 12.0, 481);
        CHECK(std::abs(e.c[n] - oracle) < 1e-10);
    }
    // Geometric: consecutive ratios from three neighboring coefficients.
    double const r01 = e.c[1] / e.c[0];
    double const r12 = e.c[2] / e.c[1];
    CHECK(std::abs(r01 - r12) < 1e-8);
}

TEST_CASE("expansion at eta = 1 up to n = 32") {
    auto const e = squeeze_expansion(Rapidity(1.0), 32, QuadratureRule::gauss_hermite(64));
    CHECK(e.max_off_diagonal <= 1e-10);
    CHECK(std::abs(e.sum_of_squares() - 1.0) <= 1e-10);
    auto const ratios = coefficient_ratios(e.c, 1e-6);
    CHECK(ratios.size() >= 10);
    CHECK(ratio_spread(ratios) < 1e-8);
    CHECK(std::abs(ratios.front() - std::tanh(0.5)) < 1e-8);

    auto const overlaps = squeeze_overlaps(Rapidity(1.0), 20, QuadratureRule::gauss_hermite(64));
    CHECK(overlaps.max_off_diagonal() <= 1e-10);
}

TEST_CASE("completeness grows with the truncation") {
    double previous = 0.0;
    for (int n_max : {2, 4, 8, 16, 32}) {
        auto const e = squeeze_expansion(Rapidity(2.0), n_max, QuadratureRule::gauss_hermite(64));
        double const s = e.sum_of_squares();
        CHECK(s <= 1.0 + 1e-12);
        CHECK(s > previous);
        previous = s;
    }
    CHECK(std::abs(previous - normalization(Rapidity(2.0), QuadratureRule::gauss_hermite(40))) < 1e-6);
}

TEST_CASE("negative rapidity alternates the coefficient signs") {
    auto const pos = squeeze_expansion(Rapidity(0.8), 6, QuadratureRule::gauss_hermite(40));
    auto const neg = squeeze_expansion(Rapidity(-0.8), 6, QuadratureRule::gauss_hermite(40));
    for (int n = 0; n <= 6; ++n) {
        CHECK(std::abs(neg.c[n] - (n % 2 ? -1.0 : 1.0) * pos.c[n]) < 1e-12);
    }
}

TEST_CASE("expansion error paths") {
    CHECK_THROWS_AS(squeeze_expansion(Rapidity(1.0), kDefaultNMax + 1, QuadratureRule::gauss_hermite(64)),
                    OrderOverflow);
    CHECK_THROWS_AS(squeeze_expansion(Rapidity(1.0), 4, QuadratureRule::gauss_hermite(10)),
                    QuadratureUnderResolved);
    // Too few nodes for the polynomial degree: the two orders disagree.
    CHECK_THROWS_AS(squeeze_expansion(Rapidity(2.0), 30, QuadratureRule::gauss_hermite(6), kDefaultNMax, 1),
                    QuadratureUnderResolved);
    CHECK(coefficient_ratios({1.0, 0.0, 0.0}, 1e-6).empty());
    CHECK(ratio_spread({}) == 0.0);
}
