#include "clockvis/channels.hpp"
#include "clockvis/errors.hpp"
#include "clockvis/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace clockvis;
using channels::ChannelKind;

namespace {

// Brute-force reference overlaps from tests/reference/reference_values.py.

constexpr ChannelKind kAll[] = {ChannelKind::ad, ChannelKind::pd, ChannelKind::dp};

Complex two_arm(ChannelKind kind, double de, double l1, double l2, double t1, double t2) {
    return channels::two_arm_visibility(ClockSpec::with_gap(de), kind, {t1, l1, 0.0}, {t2, l2, 0.0}).kappa;
}

} // namespace

TEST_CASE("environment dimensions") {
    CHECK(channels::environment_dim(ChannelKind::ad) == 2);
    CHECK(channels::environment_dim(ChannelKind::pd) == 3);
    CHECK(channels::environment_dim(ChannelKind::dp) == 4);
}

TEST_CASE("finite-time unitaries") {
    for (ChannelKind kind : kAll) {
        const ComplexMatrix u0 = channels::finite_time_unitary(kind, 0.0);
        CHECK(u0 == ComplexMatrix::Identity(u0.rows(), u0.cols()));
        for (double p : {0.1, 0.37, 0.9, 1.0}) CHECK(unitarity_defect(channels::finite_time_unitary(kind, p)) < 1e-12);
        CHECK_THROWS_AS((void)channels::finite_time_unitary(kind, -0.1), ValidationError);
        CHECK_THROWS_AS((void)channels::finite_time_unitary(kind, 1.1), ValidationError);
    }
    const ComplexMatrix ad = channels::finite_time_unitary(ChannelKind::ad, 1.0);
    CHECK(std::abs(ad(1, 1)) < 1e-15);
    CHECK(std::abs(ad(2, 2)) < 1e-15);
    CHECK(std::abs(ad(1, 2) - 1.0) < 1e-15);
    CHECK(std::abs(ad(2, 1) + 1.0) < 1e-15);
}

TEST_CASE("noise Hamiltonians") {
    const ComplexMatrix ad = channels::build_noise_hamiltonian(ChannelKind::ad, 0.3);
    CHECK(ad(1, 2) == Complex(0.0, -0.6));
    CHECK(ad(2, 1) == Complex(0.0, 0.6));
    const ComplexMatrix pd = channels::build_noise_hamiltonian(ChannelKind::pd, 0.3);
    CHECK(pd(0, 1) == Complex(0.0, 0.6));
    CHECK(pd(5, 3) == Complex(0.0, -0.6));
    const ComplexMatrix dp = channels::build_noise_hamiltonian(ChannelKind::dp, 0.1);
    CHECK(std::abs(dp(0, 3) - 0.4 * std::sqrt(3.0)) < 1e-15);
    CHECK(std::abs(dp(7, 1) - Complex(0.0, 0.4 * std::sqrt(3.0))) < 1e-15);
    for (ChannelKind kind : kAll) {
        const ComplexMatrix h = channels::build_channel_hamiltonian(kind, 0.7, ClockSpec::with_gap(1.3));
        CHECK(hermiticity_defect(h) == 0.0);
        const ComplexMatrix free = channels::build_channel_hamiltonian(kind, 0.0, ClockSpec::with_gap(1.3));
        CHECK((free - ComplexMatrix(free.diagonal().asDiagonal())).norm() == 0.0);
    }
}

TEST_CASE("amplitude-damping spectrum") {
    const ClockSpec clock = ClockSpec::with_gap(1.0);
    const auto s = channels::AdSpectrum::compute(clock, 0.25);
    CHECK(s.y == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    const Spectrum num = hermitian_eig(channels::build_channel_hamiltonian(ChannelKind::ad, 0.25, clock));
    std::vector<double> closed(std::begin(s.eigenvalues), std::end(s.eigenvalues));
    std::sort(closed.begin(), closed.end());
    for (int i = 0; i < 4; ++i) CHECK(num.eigenvalues(i) == doctest::Approx(closed[i]).epsilon(1e-12));
}

TEST_CASE("phase-damping spectrum") {
    const ClockSpec clock = ClockSpec::with_gap(1.0);
    const Spectrum num = hermitian_eig(channels::build_channel_hamiltonian(ChannelKind::pd, 0.2, clock));
    const double expected[] = {-0.4, 0.0, 0.4, 0.6, 1.0, 1.4};
    for (int i = 0; i < 6; ++i) CHECK(num.eigenvalues(i) == doctest::Approx(expected[i]).epsilon(1e-12));
}

TEST_CASE("closed-form channel overlaps") {
    const ClockSpec clock = ClockSpec::with_gap(1.0);
    CHECK(std::abs(channels::ad_overlap_analytic(clock, 0.3, 0.0, 1.0) -
                   Complex(0.7035889126311826, -0.3680030981319095)) < 1e-12);
    CHECK(std::abs(channels::pd_overlap_analytic(clock, 0.3, 0.0, 1.0) -
                   Complex(0.6356331753802381, -0.3472479863375389)) < 1e-12);
    CHECK(channels::pd_visibility_analytic(clock, std::numbers::pi / 4.0, 0.0, 2.0) ==
          doctest::Approx(0.5403023058681397).epsilon(1e-13));
    for (double dt : {0.3, 1.0, 2.5}) {
        CHECK(channels::ad_visibility_analytic(clock, 0.0, 0.0, dt) == doctest::Approx(std::abs(std::cos(dt / 2.0))));
        CHECK(channels::pd_visibility_analytic(clock, 0.0, 0.0, dt) == doctest::Approx(std::abs(std::cos(dt / 2.0))));
        CHECK(channels::ad_visibility_analytic(clock, 0.4, dt, dt) == doctest::Approx(1.0));
    }
    // cos(2 lambda dtau) = 0 kills the phase-damping fringe.
    CHECK(channels::pd_visibility_analytic(clock, std::numbers::pi / 4.0, 0.0, 1.0) < 1e-15);
    CHECK(channels::ad_visibility_analytic(ClockSpec::with_gap(0.0), 0.0, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("closed-form evolved states match propagation") {
    const ClockSpec clock = ClockSpec::with_gap(1.4);
    for (double t : {0.0, 0.6, 2.1}) {
        const auto ad_ref = oracle::evolve_state(channels::build_channel_hamiltonian(ChannelKind::ad, 0.35, clock),
                                                 product_state(clock, 2), t);
        CHECK((channels::ad_evolved_state(clock, 0.35, t).amplitudes() - ad_ref.amplitudes()).norm() < 1e-12);
        const auto pd_ref = oracle::evolve_state(channels::build_channel_hamiltonian(ChannelKind::pd, 0.35, clock),
                                                 product_state(clock, 3), t);
        CHECK((channels::pd_evolved_state(clock, 0.35, t).amplitudes() - pd_ref.amplitudes()).norm() < 1e-12);
    }
    const auto neg = oracle::evolve_state(channels::build_channel_hamiltonian(ChannelKind::ad, -0.35, clock),
                                          product_state(clock, 2), 1.1);
    CHECK((channels::ad_evolved_state(clock, -0.35, 1.1).amplitudes() - neg.amplitudes()).norm() < 1e-12);
}

TEST_CASE("depolarizing overlaps") {
    CHECK(std::abs(two_arm(ChannelKind::dp, 1.0, 0.05, 0.05, 0.0, 1.0) -
                   Complex(0.6653417109055332, -0.3847668110315823)) < 1e-12);
    CHECK(std::abs(two_arm(ChannelKind::dp, 1.0, 0.2, 0.2, 0.0, 1.5) - Complex(-0.3868362307013125, -0.021383949296336)) <
          1e-12);
    const ClockSpec clock = ClockSpec::with_gap(1.0);
    CHECK(channels::dp_visibility_numeric(clock, 0.0, 0.0, 0.0, 1.0) == doctest::Approx(0.8775825618903728));
    CHECK(channels::dp_visibility_numeric(clock, 0.05, 0.05, 0.0, 1.0) < 0.8775825618903728);
    CHECK(channels::dp_visibility_numeric(clock, 0.05, 0.05, 0.0, 1.0) == doctest::Approx(0.7685864239902468));
}

TEST_CASE("unequal arms") {
    using channels::lambda_from_probability;
    const auto l = [](double p, double tau) { return lambda_from_probability(p, tau); };
    CHECK(std::abs(two_arm(ChannelKind::ad, 1.0, l(0.3, 1), l(0.7, 1), 1, 1) - Complex(0.849368113706254, -0.119077879373662)) <
          1e-12);
    CHECK(std::abs(two_arm(ChannelKind::ad, 1.0, l(0.8, 1), l(0.2, 2), 1, 2) -
                   Complex(0.8320268167040433, 0.1015094754521988)) < 1e-12);
    CHECK(std::abs(two_arm(ChannelKind::ad, 1.0, l(0.2, 1), l(0.8, 2), 1, 2) -
                   Complex(0.4775261980463147, -0.241419383691403)) < 1e-12);
    CHECK(std::abs(two_arm(ChannelKind::pd, 1.0, l(0.4, 1), l(0.1, 2), 1, 2) -
                   Complex(0.5759787483505653, -0.3146586243210239)) < 1e-12);
    CHECK(std::abs(two_arm(ChannelKind::dp, 1.0, l(0.4, 1), l(0.1, 2), 1, 2) -
                   Complex(-0.08697040488517808, -0.1255120873352679)) < 1e-12);
    // Same coupling, same time: perfect overlap.
    CHECK(std::abs(two_arm(ChannelKind::dp, 1.0, 0.3, 0.3, 1.2, 1.2)) == doctest::Approx(1.0));
}

TEST_CASE("probability to coupling") {
    CHECK(channels::lambda_from_probability(0.0, 2.0) == 0.0);
    CHECK(channels::lambda_from_probability(1.0, 2.0) == doctest::Approx(std::numbers::pi / 4.0));
    CHECK_THROWS_AS((void)channels::lambda_from_probability(0.5, 0.0), ValidationError);
    CHECK_THROWS_AS((void)channels::lambda_from_probability(1.5, 1.0), ValidationError);
    const auto cp = channels::ChannelParams::from_probability(ChannelKind::pd, 0.25, 1.0);
    CHECK(cp.lambda == doctest::Approx(std::asin(0.5)));
}

TEST_CASE("effective transition probability of the generators") {
    CHECK(channels::effective_transition_probability(ChannelKind::ad, 0.0, 1.0) == 0.0);
    CHECK(channels::effective_transition_probability(ChannelKind::ad, 0.1, 1.0) ==
          doctest::Approx(0.03946950299855747).epsilon(1e-12));
    CHECK(channels::effective_transition_probability(ChannelKind::ad, 0.1, 1.0) == doctest::Approx(std::pow(std::sin(0.2), 2)));
    CHECK(channels::effective_transition_probability(ChannelKind::pd, 0.1, 1.0) == doctest::Approx(std::pow(std::sin(0.2), 2)));
    CHECK(channels::effective_transition_probability(ChannelKind::dp, 0.1, 1.0) ==
          doctest::Approx(0.8686968577706227).epsilon(1e-12));
}

TEST_CASE("generator versus finite-time unitary") {
    // exp(-i H_AD tau) reproduces U_AD(sin^2(2 lambda tau)) up to the adjoint.
    const double lam = 0.2;
    const ComplexMatrix u = evolution_operator(channels::build_noise_hamiltonian(ChannelKind::ad, lam), 1.0);
    const ComplexMatrix target = channels::finite_time_unitary(ChannelKind::ad, std::pow(std::sin(2.0 * lam), 2));
    CHECK((u - target.adjoint()).norm() < 1e-12);
}

TEST_CASE("low-noise factorization error") {
    const ClockSpec clock = ClockSpec::with_gap(1.0);
    for (ChannelKind kind : {ChannelKind::ad, ChannelKind::dp}) {
        const double ratio = channels::low_noise_factorization_error(kind, clock, 2e-3, 1.0) /
                             channels::low_noise_factorization_error(kind, clock, 1e-3, 1.0);
        CHECK(ratio == doctest::Approx(4.0).epsilon(1e-3));
    }
    // H0 and the phase-damping generator commute: the split is exact.
    CHECK(channels::low_noise_factorization_error(ChannelKind::pd, clock, 1e-3, 1.0) < 1e-14);
}
