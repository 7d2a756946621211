#include "clockvis/errors.hpp"
#include "clockvis/jaynes_cummings.hpp"
#include "clockvis/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace clockvis;
using jc::AlphaBranch;
using jc::JcParams;
using jc::ThermalParams;

namespace {

// Reference overlaps below are brute-force expm propagations from
// tests/reference/reference_values.py.

Complex oracle_sector(JcParams p, std::size_t n, double dt) {
    p.n_cutoff = n + 3;
    const ComplexMatrix h = jc::build_jc_hamiltonian(p);
    const auto psi = jc::jc_initial_state(p, n);
    return inner_product(psi, oracle::evolve_state(h, psi, dt));
}

} // namespace

TEST_CASE("JC Hamiltonian structure") {
    SUBCASE("lambda = 0 is diagonal") {
        const JcParams p{1.0, 1.1, 0.0, 3};
        const ComplexMatrix h = jc::build_jc_hamiltonian(p);
        CHECK(h.rows() == 8);
        for (Eigen::Index c = 0; c < 2; ++c) {
            for (Eigen::Index n = 0; n < 4; ++n) {
                CHECK(h(c * 4 + n, c * 4 + n).real() == doctest::Approx((c == 0 ? -0.5 : 0.5) + 1.1 * n));
            }
        }
        CHECK((h - ComplexMatrix(h.diagonal().asDiagonal())).norm() == 0.0);
    }
    SUBCASE("single-excitation block eigenvalues") {
        const JcParams p{1.0, 1.1, 1.0, 1};
        const Spectrum s = hermitian_eig(jc::build_jc_hamiltonian(p));
        const double l0 = std::sqrt(1.01);
        // Levels: |0,0> at -1/2, the dressed pair (w ± l0)/2, and |1,1> at 1/2 + w.
        CHECK(s.eigenvalues(0) == doctest::Approx(-0.5));
        CHECK(s.eigenvalues(1) == doctest::Approx((1.1 - l0) / 2.0).epsilon(1e-14));
        CHECK(s.eigenvalues(2) == doctest::Approx((1.1 + l0) / 2.0).epsilon(1e-14));
    }
    SUBCASE("coupling element") {
        const ComplexMatrix h = jc::build_jc_hamiltonian({1.0, 1.0, 0.6, 3});
        // <1, 1| H |0, 2> = lambda/2 sqrt(2)
        CHECK(h(4 + 1, 2).real() == doctest::Approx(0.3 * std::sqrt(2.0)));
        CHECK(hermiticity_defect(h) < 1e-14);
    }
    SUBCASE("n_cutoff < 1 with coupling is rejected") {
        CHECK_THROWS_AS((void)jc::build_jc_hamiltonian({1.0, 1.0, 0.5, 0}), ValidationError);
        CHECK_THROWS_AS((void)jc::build_jc_hamiltonian({-1.0, 1.0, 0.5, 2}), ValidationError);
    }
}

TEST_CASE("JC closed form, reference cavity values") {
    JcParams p{1.0, 1.1, 0.0};
    CHECK(jc::jc_visibility_analytic(p, 0.0) == doctest::Approx(1.0));
    CHECK(jc::jc_visibility_analytic(p, 1.0) == doctest::Approx(std::abs(std::cos(0.55))).epsilon(1e-14));
    CHECK(std::abs(jc::jc_visibility_analytic(p, 1.0) - 0.8525) < 1e-3);
    p.lambda = 1.0;
    CHECK(std::abs(jc::jc_visibility_analytic(p, 1.0) - 0.7999) < 1.5e-3);
}

TEST_CASE("JC closed form agrees with propagation for positive detuning") {
    for (AlphaBranch branch : {AlphaBranch::principal, AlphaBranch::quadrant}) {
        const JcParams a{1.0, 0.8, 0.7, 2, branch};
        const Complex k = jc::jc_overlap_analytic(a, 1.3);
        CHECK(std::abs(k - Complex(0.7531644259567445, 0.02712741742268432)) < 1e-12);
        const JcParams b{2.0, 1.0, 0.5, 2, branch};
        CHECK(std::abs(jc::jc_overlap_analytic(b, 0.7) - Complex(0.7581162547918319, 0.003392995659615539)) < 1e-12);
    }
}

TEST_CASE("JC mixing-angle branches for negative detuning") {
    // Propagation gives 0.82547...; only the quadrant branch matches it.
    JcParams p{1.0, 1.1, 1.0, 2, AlphaBranch::quadrant};
    CHECK(std::abs(jc::jc_overlap_analytic(p, 1.0) - Complex(0.8248849849570576, 0.03110278330053279)) < 1e-12);
    CHECK(jc::jc_visibility_analytic(p, 1.0) == doctest::Approx(0.8254711512443333).epsilon(1e-12));
    p.alpha_branch = AlphaBranch::principal;
    CHECK(std::abs(jc::jc_visibility_analytic(p, 1.0) - 0.8254711512443333) > 0.02);
    // Both branches agree at resonance and the result is even in lambda there.
    const JcParams r1{1.0, 1.0, 0.8, 2, AlphaBranch::principal};
    const JcParams r2{1.0, 1.0, 0.8, 2, AlphaBranch::quadrant};
    const JcParams r3{1.0, 1.0, -0.8, 2, AlphaBranch::principal};
    CHECK(jc::jc_visibility_analytic(r1, 1.7) == doctest::Approx(jc::jc_visibility_analytic(r2, 1.7)).epsilon(1e-15));
    CHECK(jc::jc_visibility_analytic(r1, 1.7) == doctest::Approx(jc::jc_visibility_analytic(r3, 1.7)).epsilon(1e-15));
}

TEST_CASE("JC sector overlaps") {
    const JcParams p{1.0, 0.8, 0.7};
    CHECK(std::abs(jc::jc_sector_overlap(p, 2, 1.3) - Complex(-0.2642423085218924, -0.525250111014495)) < 1e-12);
    const JcParams q{1.0, 1.1, 1.0};
    CHECK(std::abs(jc::jc_sector_overlap(q, 3, 1.0) - Complex(-0.5257241949884001, 0.05635191648312775)) < 1e-12);
    for (std::size_t n = 1; n <= 5; ++n) {
        CHECK(std::abs(jc::jc_sector_overlap(q, n, 0.83) - oracle_sector(q, n, 0.83)) < 1e-12);
    }
}

TEST_CASE("jc_initial_state") {
    const auto s = jc::jc_initial_state({1.0, 1.0, 0.0, 3}, 2);
    CHECK(s.dim() == 8);
    CHECK(std::abs(s[2] - std::numbers::sqrt2 / 2.0) < 1e-15);
    CHECK(std::abs(s[4 + 2] - std::numbers::sqrt2 / 2.0) < 1e-15);
    CHECK_THROWS_AS((void)jc::jc_initial_state({1.0, 1.0, 0.0, 3}, 4), StructuralError);
}

TEST_CASE("thermal weights and cutoff") {
    double total = 0.0;
    for (std::size_t n = 0; n < 2000; ++n) total += jc::thermal_weight(1.1, 10.0, n);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(jc::thermal_cutoff(1.1, 0.1, 1e-12) == 2);
    CHECK(jc::thermal_cutoff(1.1, 0.1, 1.0) == 1);
    CHECK(jc::thermal_cutoff(1.1, 10.0, 1e-12) == 251);
    CHECK_THROWS_AS((void)jc::thermal_cutoff(0.0, 1.0, 1e-12), ValidationError);
}

TEST_CASE("thermal visibility") {
    const JcParams p{1.0, 1.1, 0.2, 2, AlphaBranch::quadrant};
    SUBCASE("matches a brute-force thermal mixture") {
        const Complex k1 = jc::jc_thermal_overlap(p, {1.0, 1e-14}, 1.0);
        const Complex k10 = jc::jc_thermal_overlap(p, {10.0, 1e-14}, 1.0);
        CHECK(std::abs(k1 - Complex(0.6135885021971591, -0.2121612255952464)) < 1e-10);
        CHECK(std::abs(k10 - Complex(0.055197269412025, -0.07340010249190787)) < 1e-10);
    }
    SUBCASE("limits") {
        const JcParams d{1.0, 1.1, 0.2};
        CHECK(jc::jc_thermal_visibility(d, {0.0}, 1.0) == jc::jc_visibility_analytic(d, 1.0));
        CHECK(jc::jc_thermal_visibility(d, {1e-3}, 1.0) == doctest::Approx(jc::jc_visibility_analytic(d, 1.0)));
        CHECK(jc::jc_thermal_visibility(d, {7.0}, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS((void)jc::jc_thermal_visibility({1.0, 0.0, 0.2}, {1.0}, 1.0), ValidationError);
        CHECK_THROWS_AS((void)jc::jc_thermal_visibility(p, {-1.0}, 1.0), ValidationError);
        CHECK_THROWS_AS((void)jc::jc_thermal_visibility({1.0, 1e-3, 0.2}, {1e3, 1e-12}, 1.0), ConvergenceError);
    }
}
