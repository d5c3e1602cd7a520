#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "covosc/coupled_osc.hpp"
#include "covosc/error.hpp"
#include "covosc/wavefunction.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace covosc;
using covosc::testing::Sampler;

namespace {

// Brute-force route: eigenvalues of the potential matrix [[A, C], [C, A]].
Eigen::Vector2d potential_eigenvalues(double a, double c) {
    Eigen::Matrix2d m;
    m << a, c, c, a;
    return Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(m).eigenvalues();
}

}  // namespace

TEST_CASE("normal_modes of uncoupled oscillators") {
    auto const d = normal_modes({1.0, 1.0, 0.0});
    CHECK(d.k == 1.0);
    CHECK(d.eta == 0.0);
    CHECK(d.omega_plus == 1.0);
    CHECK(d.omega_minus == 1.0);
}

TEST_CASE("normal_modes for A = 5, C = 3 against the eigendecomposition") {
    auto const ev = potential_eigenvalues(5.0, 3.0);  // {2, 8}
    CHECK(ev(0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(ev(1) == doctest::Approx(8.0).epsilon(1e-14));
    double const k_oracle = std::sqrt(ev(0) * ev(1));
    double const e2eta_oracle = std::sqrt(ev(0) / ev(1));

    auto const d = normal_modes({1.0, 5.0, 3.0});
    CHECK(std::abs(d.k - 4.0) < 1e-14);
    CHECK(std::abs(d.k - k_oracle) < 1e-12);
    CHECK(std::abs(std::exp(2.0 * d.eta) - 0.5) < 1e-14);
    CHECK(std::abs(std::exp(2.0 * d.eta) - e2eta_oracle) < 1e-12);
    CHECK(std::abs(d.eta + std::log(2.0) / 2.0) < 1e-15);
    CHECK(d.eta == doctest::Approx(-0.34657).epsilon(1e-5));
}

TEST_CASE("degenerate and invalid couplings") {
    CHECK_THROWS_AS(normal_modes({1.0, 1.0, 1.0}), DegenerateCoupling);
    CHECK_THROWS_AS(normal_modes({1.0, 1.0, -1.0}), DegenerateCoupling);
    CHECK_THROWS_AS(normal_modes({1.0, 2.0, 3.0}), DegenerateCoupling);
    CHECK_THROWS_AS(ground_state({1.0, 1.0, 1.0}, 0.0, 0.0), DegenerateCoupling);
    CHECK_THROWS_AS(normal_modes({0.0, 1.0, 0.0}), InvalidArgument);
    CHECK_THROWS_AS(normal_modes({1.0, -1.0, 0.0}), InvalidArgument);
    try {
        normal_modes({1.0, 2.0, -2.5});
        FAIL("expected DegenerateCoupling");
    } catch (DegenerateCoupling const& e) {
        CHECK(e.a() == 2.0);
        CHECK(e.c() == -2.5);
    }
}

TEST_CASE("mass enters only the frequencies") {
    auto const light = normal_modes({0.5, 5.0, 3.0});
    auto const heavy = normal_modes({8.0, 5.0, 3.0});
    CHECK(light.k == heavy.k);
    CHECK(light.eta == heavy.eta);
    CHECK(light.omega_plus == doctest::Approx(std::sqrt(8.0 / 0.5)));
    CHECK(heavy.omega_minus == doctest::Approx(std::sqrt(2.0 / 8.0)));
    CHECK(ground_state({0.5, 5.0, 3.0}, 0.3, -0.7) == ground_state({8.0, 5.0, 3.0}, 0.3, -0.7));
}

TEST_CASE("normal-mode identities hold for random couplings") {
    Sampler s(21);
    for (int k = 0; k < 100; ++k) {
        double const a = s.uniform(0.1, 10.0);
        double const c = s.uniform(-0.99, 0.99) * a;
        auto const d = normal_modes({1.0, a, c});
        CHECK(std::abs(d.k * std::exp(-2.0 * d.eta) - (a + c)) < 1e-12 * std::max(1.0, a));
        CHECK(std::abs(d.k * std::exp(2.0 * d.eta) - (a - c)) < 1e-12 * std::max(1.0, a));

        auto const ev = potential_eigenvalues(a, c);
        double const lo = std::min(a - c, a + c);
        double const hi = std::max(a - c, a + c);
        CHECK(std::abs(ev(0) - lo) < 1e-12 * std::max(1.0, a));
        CHECK(std::abs(ev(1) - hi) < 1e-12 * std::max(1.0, a));

        // Sign convention: C > 0 gives eta < 0, odd in C.
        if (c > 0.0) CHECK(d.eta < 0.0);
        if (c < 0.0) CHECK(d.eta > 0.0);
        CHECK(std::abs(normal_modes({1.0, a, -c}).eta + d.eta) < 1e-14);

        double const x1 = s.uniform(-3.0, 3.0);
        double const x2 = s.uniform(-3.0, 3.0);
        double const v = potential_energy({1.0, a, c}, x1, x2);
        CHECK(std::abs(v - potential_energy_normal_form(d, x1, x2)) < 1e-12 * std::max(1.0, v));

        CoupledOscillatorSystem const sys{1.0, a, c};
        CHECK(ground_state(sys, x1, x2) == ground_state(sys, x2, x1));
    }
}

TEST_CASE("potential_energy examples") {
    CHECK(potential_energy({1.0, 1.0, 0.0}, 1.0, 1.0) == 1.0);
    CHECK(potential_energy({1.0, 5.0, 3.0}, 1.0, -1.0) == 2.0);
}

TEST_CASE("ground_state values and normalization") {
    CHECK(ground_state({1.0, 1.0, 0.0}, 0.0, 0.0) ==
          doctest::Approx(1.0 / std::sqrt(std::numbers::pi)).epsilon(1e-15));
    CHECK(ground_state({1.0, 1.0, 0.0}, 0.0, 0.0) == doctest::Approx(0.5641896).epsilon(1e-7));

    CoupledOscillatorSystem const sys{1.0, 5.0, 3.0};
    double const norm = covosc::testing::trapezoid_2d(
        [&](double x1, double x2) {
            double const f = ground_state(sys, x1, x2);
            return f * f;
        },
        -12.0, 12.0, 481);
    CHECK(std::abs(norm - 1.0) < 1e-10);
}

TEST_CASE("ground_state coincides with the boosted wavefunction") {
    CoupledOscillatorSystem const sys{1.0, 5.0, 3.0};
    Rapidity const eta(normal_modes(sys).eta);
    Sampler s(22);
    for (int k = 0; k < 500; ++k) {
        double const z = s.uniform(-4.0, 4.0);
        double const t = s.uniform(-4.0, 4.0);
        CHECK(std::abs(ground_state(sys, z, t) - psi(eta, z, t)) < 1e-12);
    }
}
