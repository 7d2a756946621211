// channels.hpp — clock noise modelled by unitary dilations of the standard
// qubit channels: amplitude damping (qubit environment), phase damping
// (qutrit environment) and depolarizing (4-level environment).
//
// Hamiltonians are the standard continuous-time generators, entry for
// entry; basis order is |clock, env> with index = clock * env_dim + env.
// Note that exp(-i H_noise tau*) does not reproduce U_kind(p = sin^2(lambda tau*)):
// AD/PD generators rotate by 2 lambda, DP by 12 lambda, and AD/PD rotate in
// the opposite sense. effective_transition_probability() measures this.

#pragma once

#include "clockvis/interferometer.hpp"
#include "clockvis/numerics.hpp"

#include <cstddef>
#include <string_view>

namespace clockvis::channels {

enum class ChannelKind { ad, pd, dp };

[[nodiscard]] std::string_view to_string(ChannelKind kind) noexcept;
[[nodiscard]] std::size_t environment_dim(ChannelKind kind) noexcept;

// lambda = arcsin(sqrt(p)) / tau_star.
[[nodiscard]] double lambda_from_probability(double p, double tau_star);

struct ChannelParams {
    ChannelKind kind{ChannelKind::ad};
    double lambda{0.0};

    static ChannelParams from_probability(ChannelKind kind, double p, double tau_star);
};

// Spectrum of the amplitude-damping H_int in closed form.
struct AdSpectrum {
    double y{1.0};        // dE / sqrt(dE^2 + 16 lambda^2); 1 when dE = lambda = 0
    double e_plus{0.0};   // E0 + E1
    double splitting{0.0}; // sqrt(dE^2 + 16 lambda^2) = dE / y
    double eigenvalues[4]{}; // E0, E1, (E+ - splitting)/2, (E+ + splitting)/2

    static AdSpectrum compute(const ClockSpec& clock, double lambda);
};

// Finite-time dilation U_kind(p). Throws ValidationError for p outside [0, 1].
[[nodiscard]] ComplexMatrix finite_time_unitary(ChannelKind kind, double p);

// H_noise alone (no clock energies).
[[nodiscard]] ComplexMatrix build_noise_hamiltonian(ChannelKind kind, double lambda);

// H_int = H0 ⊗ I + H_noise.
[[nodiscard]] ComplexMatrix build_channel_hamiltonian(ChannelKind kind, double lambda, const ClockSpec& clock);

// Closed-form exp(-i H_int t) (|psi_clock> ⊗ |0>_E) for amplitude damping.
[[nodiscard]] ExtendedState ad_evolved_state(const ClockSpec& clock, double lambda, double t);
[[nodiscard]] Complex ad_overlap_analytic(const ClockSpec& clock, double lambda, double tau1, double tau2);
[[nodiscard]] double ad_visibility_analytic(const ClockSpec& clock, double lambda, double tau1, double tau2);

// Closed-form exp(-i H_int t) (|psi_clock> ⊗ |0>_E) for phase damping.
[[nodiscard]] ExtendedState pd_evolved_state(const ClockSpec& clock, double lambda, double t);
// Weighted average of the four dressed phases E0 ± 2 lambda, E1 ± 2 lambda.
[[nodiscard]] Complex pd_overlap_analytic(const ClockSpec& clock, double lambda, double tau1, double tau2);
[[nodiscard]] double pd_visibility_analytic(const ClockSpec& clock, double lambda, double tau1, double tau2);

// Both arms start from |psi_clock> ⊗ |0>_E; arm i evolves under H_int(lambda_i)
// for tau_i, in one shared environment space.
[[nodiscard]] VisibilityResult two_arm_visibility(const ClockSpec& clock, ChannelKind kind, const ArmConfig& arm1,
                                                  const ArmConfig& arm2);

[[nodiscard]] double dp_visibility_numeric(const ClockSpec& clock, double lambda1, double lambda2, double tau1,
                                           double tau2);

// Transition probability actually produced by exp(-i H_noise(lambda) tau_star):
// AD |<01|U|10>|^2, PD |<01|U|00>|^2, DP 1 - |<00|U|00>|^2.
[[nodiscard]] double effective_transition_probability(ChannelKind kind, double lambda, double tau_star);

// |kappa_full - kappa_0 kappa_noise| for one arm pair with equal couplings:
// the error of splitting <exp(-i dtau (H0 + H_noise))> into
// <exp(-i dtau H0)><exp(-i dtau H_noise)> on the initial product state.
[[nodiscard]] double low_noise_factorization_error(ChannelKind kind, const ClockSpec& clock, double lambda,
                                                   double delta_tau);

} // namespace clockvis::channels
