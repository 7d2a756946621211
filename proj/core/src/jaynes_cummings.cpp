#include "clockvis/jaynes_cummings.hpp"

#include "clockvis/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace clockvis::jc {

namespace {

Complex phase(double energy, double t) { return std::polar(1.0, -energy * t); }

} // namespace

double JcParams::rabi_splitting() const noexcept { return std::hypot(detuning(), lambda); }

double JcParams::mixing_angle() const noexcept {
    const double delta = detuning();
    if (alpha_branch == AlphaBranch::quadrant) {
        return delta == 0.0 && lambda == 0.0 ? std::numbers::pi / 2.0 : std::atan2(lambda, delta);
    }
    return delta == 0.0 ? std::numbers::pi / 2.0 : std::atan(lambda / delta);
}

void JcParams::validate() const {
    if (!std::isfinite(delta_e) || !std::isfinite(omega) || !std::isfinite(lambda)) {
        throw ValidationError("JcParams: parameters must be finite");
    }
    if (delta_e < 0.0) throw ValidationError("JcParams: delta_e must be >= 0");
    if (omega < 0.0) throw ValidationError("JcParams: omega must be >= 0");
    if (lambda != 0.0 && n_cutoff < 1) {
        throw ValidationError("JcParams: n_cutoff must be >= 1 when lambda != 0");
    }
}

JcDressedLevel dressed_level(const JcParams& params, std::size_t p) {
    const double delta = params.detuning();
    JcDressedLevel level;
    level.p = p;
    level.omega_p = params.lambda * std::sqrt(static_cast<double>(p) + 1.0);
    level.delta_p = std::hypot(delta, level.omega_p);

    const double norm = std::hypot(level.delta_p - delta, level.omega_p);
    if (norm > 0.0) {
        level.cos_theta = (level.delta_p - delta) / norm;
        level.sin_theta = level.omega_p / norm;
    } else {
        // lambda = 0 with delta >= 0: |1,p> is the upper level, unmixed.
        level.cos_theta = 0.0;
        level.sin_theta = 1.0;
    }

    const double centre = (static_cast<double>(p) + 0.5) * params.omega;
    level.energy_ground = -0.5 * params.delta_e;
    level.energy_upper = centre + 0.5 * level.delta_p;
    level.energy_lower = centre - 0.5 * level.delta_p;
    return level;
}

void ThermalParams::validate() const {
    if (!std::isfinite(temperature) || temperature < 0.0) {
        throw ValidationError("ThermalParams: temperature must be finite and >= 0");
    }
    if (!(tail_epsilon > 0.0) || tail_epsilon > 1.0) {
        throw ValidationError("ThermalParams: tail_epsilon must lie in (0, 1]");
    }
}

double thermal_weight(double omega, double temperature, std::size_t n) {
    if (!(omega > 0.0) || !(temperature > 0.0)) {
        throw ValidationError("thermal_weight: omega and temperature must be positive");
    }
    const double x = omega / temperature;
    return std::exp(-static_cast<double>(n) * x) * -std::expm1(-x);
}

std::uint64_t thermal_cutoff(double omega, double temperature, double tail_epsilon) {
    if (!(omega > 0.0) || !(temperature > 0.0)) {
        throw ValidationError("thermal_cutoff: omega and temperature must be positive");
    }
    if (!(tail_epsilon > 0.0) || tail_epsilon > 1.0) {
        throw ValidationError("thermal_cutoff: tail_epsilon must lie in (0, 1]");
    }
    const double x = omega / temperature;
    const double levels = std::ceil(std::log(1.0 / tail_epsilon) / x) - 1.0;
    if (!(levels < 1e18)) return std::uint64_t{1000000000000000000ULL};
    return levels < 1.0 ? 1 : static_cast<std::uint64_t>(levels);
}

ComplexMatrix build_jc_hamiltonian(const JcParams& params) {
    params.validate();
    const auto env = static_cast<Eigen::Index>(params.n_cutoff + 1);
    ComplexMatrix h = ComplexMatrix::Zero(2 * env, 2 * env);
    for (Eigen::Index n = 0; n < env; ++n) {
        const double field = params.omega * static_cast<double>(n);
        h(n, n) = -0.5 * params.delta_e + field;       // |0, n>
        h(env + n, env + n) = 0.5 * params.delta_e + field; // |1, n>
    }
    // a s+ takes |0, n> to sqrt(n) |1, n-1>.
    for (Eigen::Index n = 1; n < env; ++n) {
        const double g = 0.5 * params.lambda * std::sqrt(static_cast<double>(n));
        h(env + n - 1, n) = g;
        h(n, env + n - 1) = g;
    }
    return h;
}

ExtendedState jc_initial_state(const JcParams& params, std::size_t fock_n) {
    params.validate();
    if (fock_n > params.n_cutoff) {
        throw StructuralError("jc_initial_state: Fock level " + std::to_string(fock_n) +
                              " exceeds n_cutoff " + std::to_string(params.n_cutoff));
    }
    return product_state(ClockSpec::balanced(-0.5 * params.delta_e, 0.5 * params.delta_e), params.n_cutoff + 1,
                         fock_n);
}

Complex jc_overlap_analytic(const JcParams& params, double delta_tau) {
    params.validate();
    const double half_alpha = 0.5 * params.mixing_angle();
    const double c2 = std::cos(half_alpha) * std::cos(half_alpha);
    const double s2 = std::sin(half_alpha) * std::sin(half_alpha);
    const double lambda0 = params.rabi_splitting();
    return 0.5 * (phase(-0.5 * params.delta_e, delta_tau) +
                  phase(0.5 * (params.omega + lambda0), delta_tau) * c2 +
                  phase(0.5 * (params.omega - lambda0), delta_tau) * s2);
}

double jc_visibility_analytic(const JcParams& params, double delta_tau) {
    return std::abs(jc_overlap_analytic(params, delta_tau));
}

Complex jc_sector_overlap(const JcParams& params, std::size_t n, double delta_tau) {
    if (n == 0) return jc_overlap_analytic(params, delta_tau);
    params.validate();
    // |0,n> lives in sector n-1, |1,n> in sector n.
    const JcDressedLevel below = dressed_level(params, n - 1);
    const JcDressedLevel here = dressed_level(params, n);
    return 0.5 * (phase(below.energy_upper, delta_tau) * (below.cos_theta * below.cos_theta) +
                  phase(here.energy_upper, delta_tau) * (here.sin_theta * here.sin_theta) +
                  phase(below.energy_lower, delta_tau) * (below.sin_theta * below.sin_theta) +
                  phase(here.energy_lower, delta_tau) * (here.cos_theta * here.cos_theta));
}

Complex jc_thermal_overlap(const JcParams& params, const ThermalParams& thermal, double delta_tau) {
    params.validate();
    thermal.validate();
    if (thermal.temperature == 0.0) return jc_overlap_analytic(params, delta_tau);
    if (!(params.omega > 0.0)) {
        throw ValidationError("jc_thermal_visibility: a thermal field needs omega > 0");
    }

    const std::uint64_t n_max = thermal_cutoff(params.omega, thermal.temperature, thermal.tail_epsilon);
    if (n_max > kMaxThermalLevels) {
        throw ConvergenceError("jc_thermal_visibility: thermal tail exceeds tail_epsilon after " +
                               std::to_string(kMaxThermalLevels) + " Fock levels (T=" +
                               std::to_string(thermal.temperature) + ", omega=" + std::to_string(params.omega) + ")");
    }

    const double x = params.omega / thermal.temperature;
    const double norm = -std::expm1(-x);
    Complex total{0.0, 0.0};
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const double weight = std::exp(-static_cast<double>(n) * x) * norm;
        total += weight * jc_sector_overlap(params, static_cast<std::size_t>(n), delta_tau);
    }
    return total;
}

double jc_thermal_visibility(const JcParams& params, const ThermalParams& thermal, double delta_tau) {
    return std::abs(jc_thermal_overlap(params, thermal, delta_tau));
}

} // namespace clockvis::jc
