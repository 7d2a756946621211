#include "clockvis/channels.hpp"

#include "clockvis/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace clockvis::channels {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex phase(double energy, double t) { return std::polar(1.0, -energy * t); }

void require_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError(std::string(what) + ": probability must lie in [0, 1] (got " + std::to_string(p) + ")");
    }
}

} // namespace

std::string_view to_string(ChannelKind kind) noexcept {
    switch (kind) {
    case ChannelKind::ad: return "ad";
    case ChannelKind::pd: return "pd";
    case ChannelKind::dp: return "dp";
    }
    return "?";
}

std::size_t environment_dim(ChannelKind kind) noexcept {
    switch (kind) {
    case ChannelKind::ad: return 2;
    case ChannelKind::pd: return 3;
    case ChannelKind::dp: return 4;
    }
    return 0;
}

double lambda_from_probability(double p, double tau_star) {
    require_probability(p, "lambda_from_probability");
    if (!(tau_star > 0.0) || !std::isfinite(tau_star)) {
        throw ValidationError("lambda_from_probability: tau_star must be positive");
    }
    return std::asin(std::sqrt(p)) / tau_star;
}

ChannelParams ChannelParams::from_probability(ChannelKind kind, double p, double tau_star) {
    return ChannelParams{kind, lambda_from_probability(p, tau_star)};
}

AdSpectrum AdSpectrum::compute(const ClockSpec& clock, double lambda) {
    clock.validate();
    AdSpectrum s;
    const double gap = clock.gap();
    s.e_plus = clock.e0 + clock.e1;
    s.splitting = std::sqrt(gap * gap + 16.0 * lambda * lambda);
    s.y = s.splitting > 0.0 ? gap / s.splitting : 1.0;
    s.eigenvalues[0] = clock.e0;
    s.eigenvalues[1] = clock.e1;
    s.eigenvalues[2] = 0.5 * (s.e_plus - s.splitting);
    s.eigenvalues[3] = 0.5 * (s.e_plus + s.splitting);
    return s;
}

ComplexMatrix finite_time_unitary(ChannelKind kind, double p) {
    require_probability(p, "finite_time_unitary");
    const double c = std::sqrt(1.0 - p);
    const double s = std::sqrt(p);

    switch (kind) {
    case ChannelKind::ad: {
        // basis |00>, |01>, |10>, |11>
        ComplexMatrix u = ComplexMatrix::Identity(4, 4);
        u(1, 1) = c;
        u(1, 2) = s;
        u(2, 1) = -s;
        u(2, 2) = c;
        return u;
    }
    case ChannelKind::pd: {
        // basis |00>, |01>, |02>, |10>, |11>, |12>
        ComplexMatrix u = ComplexMatrix::Identity(6, 6);
        u(0, 0) = c;
        u(0, 1) = -s;
        u(1, 0) = s;
        u(1, 1) = c;
        u(3, 3) = c;
        u(3, 5) = -s;
        u(5, 3) = s;
        u(5, 5) = c;
        return u;
    }
    case ChannelKind::dp: {
        // basis |00> .. |03>, |10> .. |13>
        const Complex q = std::sqrt(p / 3.0);
        const Complex iq = kI * q;
        ComplexMatrix u(8, 8);
        // clang-format off
        u <<  c,  0,   0,  iq,   0,  iq,   q,   0,
              0,  c,  iq,   0,  iq,   0,   0,   q,
              0, iq,   c,   0,   q,   0,   0,  iq,
             iq,  0,   0,   c,   0,   q,  iq,   0,
              0, iq,  -q,   0,   c,   0,   0, -iq,
             iq,  0,   0,  -q,   0,   c, -iq,   0,
             -q,  0,   0,  iq,   0, -iq,   c,   0,
              0, -q,  iq,   0, -iq,   0,   0,   c;
        // clang-format on
        return u;
    }
    }
    throw ValidationError("finite_time_unitary: unknown channel kind");
}

ComplexMatrix build_noise_hamiltonian(ChannelKind kind, double lambda) {
    if (!std::isfinite(lambda)) throw ValidationError("build_noise_hamiltonian: lambda must be finite");
    switch (kind) {
    case ChannelKind::ad: {
        // 2i lambda (|10><01| - |01><10|)
        ComplexMatrix h = ComplexMatrix::Zero(4, 4);
        h(2, 1) = 2.0 * kI * lambda;
        h(1, 2) = -2.0 * kI * lambda;
        return h;
    }
    case ChannelKind::pd: {
        // 2i lambda (-|12><10| + |10><12| - |01><00| + |00><01|)
        ComplexMatrix h = ComplexMatrix::Zero(6, 6);
        h(0, 1) = 2.0 * kI * lambda;
        h(1, 0) = -2.0 * kI * lambda;
        h(3, 5) = 2.0 * kI * lambda;
        h(5, 3) = -2.0 * kI * lambda;
        return h;
    }
    case ChannelKind::dp: {
        const double a = 4.0 * std::numbers::sqrt3 * lambda;
        ComplexMatrix h = ComplexMatrix::Zero(8, 8);
        const auto couple = [&h](Eigen::Index row, Eigen::Index col, Complex value) {
            h(row, col) = value;
            h(col, row) = std::conj(value);
        };
        couple(0, 3, a);
        couple(0, 5, a);
        couple(0, 6, -kI * a);
        couple(1, 2, a);
        couple(1, 4, a);
        couple(1, 7, -kI * a);
        return h;
    }
    }
    throw ValidationError("build_noise_hamiltonian: unknown channel kind");
}

ComplexMatrix build_channel_hamiltonian(ChannelKind kind, double lambda, const ClockSpec& clock) {
    clock.validate();
    const auto env = static_cast<Eigen::Index>(environment_dim(kind));
    return kron(clock.hamiltonian(), ComplexMatrix::Identity(env, env)) + build_noise_hamiltonian(kind, lambda);
}

ExtendedState ad_evolved_state(const ClockSpec& clock, double lambda, double t) {
    const AdSpectrum spec = AdSpectrum::compute(clock, lambda);
    const double sign = lambda < 0.0 ? -1.0 : 1.0;
    const double lo = std::sqrt(0.5 * (1.0 - spec.y));
    const double hi = std::sqrt(0.5 * (1.0 + spec.y));

    // Eigenvectors of the {|01>, |10>} block, components (|01>, |10>).
    const Complex lower_01 = hi;
    const Complex lower_10 = -kI * sign * lo;
    const Complex upper_01 = -kI * sign * lo;
    const Complex upper_10 = hi;

    // |10> = conj(lower_10) |lower> + conj(upper_10) |upper>
    const Complex a_lower = clock.c1 * std::conj(lower_10) * phase(spec.eigenvalues[2], t);
    const Complex a_upper = clock.c1 * std::conj(upper_10) * phase(spec.eigenvalues[3], t);

    ComplexVector psi = ComplexVector::Zero(4);
    psi(0) = clock.c0 * phase(clock.e0, t);
    psi(1) = a_lower * lower_01 + a_upper * upper_01;
    psi(2) = a_lower * lower_10 + a_upper * upper_10;
    return StateVector::from_unitary_image(std::move(psi));
}

Complex ad_overlap_analytic(const ClockSpec& clock, double lambda, double tau1, double tau2) {
    return inner_product(ad_evolved_state(clock, lambda, tau1), ad_evolved_state(clock, lambda, tau2));
}

double ad_visibility_analytic(const ClockSpec& clock, double lambda, double tau1, double tau2) {
    return std::abs(ad_overlap_analytic(clock, lambda, tau1, tau2));
}

ExtendedState pd_evolved_state(const ClockSpec& clock, double lambda, double t) {
    clock.validate();
    // Each clock level |k> ⊗ |0>_E rotates into the environment within its own
    // 2x2 block (|k0>, |k(2k+1)>) at angular rate 2 lambda.
    const double cs = std::cos(2.0 * lambda * t);
    const double sn = std::sin(2.0 * lambda * t);
    ComplexVector psi = ComplexVector::Zero(6);
    psi(0) = clock.c0 * phase(clock.e0, t) * cs;
    psi(1) = -clock.c0 * phase(clock.e0, t) * sn;
    psi(3) = clock.c1 * phase(clock.e1, t) * cs;
    psi(5) = -clock.c1 * phase(clock.e1, t) * sn;
    return StateVector::from_unitary_image(std::move(psi));
}

Complex pd_overlap_analytic(const ClockSpec& clock, double lambda, double tau1, double tau2) {
    clock.validate();
    const double dt = tau2 - tau1;
    const double w0 = std::norm(clock.c0);
    const double w1 = std::norm(clock.c1);
    return 0.5 * w0 * (phase(clock.e0 - 2.0 * lambda, dt) + phase(clock.e0 + 2.0 * lambda, dt)) +
           0.5 * w1 * (phase(clock.e1 - 2.0 * lambda, dt) + phase(clock.e1 + 2.0 * lambda, dt));
}

double pd_visibility_analytic(const ClockSpec& clock, double lambda, double tau1, double tau2) {
    return std::abs(pd_overlap_analytic(clock, lambda, tau1, tau2));
}

VisibilityResult two_arm_visibility(const ClockSpec& clock, ChannelKind kind, const ArmConfig& arm1,
                                    const ArmConfig& arm2) {
    arm1.validate();
    arm2.validate();
    const ExtendedState initial = product_state(clock, environment_dim(kind), 0);
    const Spectrum s1 = hermitian_eig(build_channel_hamiltonian(kind, arm1.lambda_arm, clock));
    const ExtendedState branch1 = clockvis::apply(evolution_operator(s1, arm1.tau), initial);
    const ExtendedState branch2 =
        arm2.lambda_arm == arm1.lambda_arm
            ? clockvis::apply(evolution_operator(s1, arm2.tau), initial)
            : clockvis::apply(evolution_operator(build_channel_hamiltonian(kind, arm2.lambda_arm, clock), arm2.tau), initial);
    return overlap_visibility(branch1, branch2);
}

double dp_visibility_numeric(const ClockSpec& clock, double lambda1, double lambda2, double tau1, double tau2) {
    return two_arm_visibility(clock, ChannelKind::dp, ArmConfig{tau1, lambda1, 0.0}, ArmConfig{tau2, lambda2, 0.0}).v;
}

double effective_transition_probability(ChannelKind kind, double lambda, double tau_star) {
    const ComplexMatrix u = evolution_operator(build_noise_hamiltonian(kind, lambda), tau_star);
    switch (kind) {
    case ChannelKind::ad: return std::norm(u(1, 2));
    case ChannelKind::pd: return std::norm(u(1, 0));
    case ChannelKind::dp: return 1.0 - std::norm(u(0, 0));
    }
    return 0.0;
}

double low_noise_factorization_error(ChannelKind kind, const ClockSpec& clock, double lambda, double delta_tau) {
    const ExtendedState psi = product_state(clock, environment_dim(kind), 0);
    const auto expect = [&psi, delta_tau](const ComplexMatrix& h) {
        return inner_product(psi, clockvis::apply(evolution_operator(h, delta_tau), psi));
    };
    const Complex full = expect(build_channel_hamiltonian(kind, lambda, clock));
    const Complex bare = expect(build_channel_hamiltonian(kind, 0.0, clock));
    const Complex noise = expect(build_noise_hamiltonian(kind, lambda));
    return std::abs(full - bare * noise);
}

} // namespace clockvis::channels
