// interferometer.hpp — Mach-Zehnder abstraction for a two-level clock.
//
// Each arm evolves the joint clock(+environment) state for its proper time;
// the path visibility is the modulus of the overlap of the two branches,
// and the detector probabilities are 1/2 [1 ± |kappa| sin(dphi + chi + arg kappa)].

#pragma once

#include "clockvis/numerics.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace clockvis {

// Joint clock ⊗ environment state; basis index = clock_index * dim_env + env_index.
using ExtendedState = StateVector;

// Two-level clock: H0 = diag(e0, e1), initial state c0|0> + c1|1>.
struct ClockSpec {
    double e0{0.0};
    double e1{1.0};
    Complex c0{1.0 / 1.4142135623730951, 0.0};
    Complex c1{1.0 / 1.4142135623730951, 0.0};

    // Balanced clock (|0> + |1>)/sqrt(2) with levels e0, e1.
    static ClockSpec balanced(double e0, double e1);
    // Balanced clock with E0 = 0 and E1 = delta_e.
    static ClockSpec with_gap(double delta_e);

    [[nodiscard]] double gap() const noexcept { return e1 - e0; }

    // Throws ValidationError unless |c0|^2 + |c1|^2 = 1 (to 1e-12), e1 >= e0
    // and all values are finite.
    void validate() const;

    [[nodiscard]] ComplexMatrix hamiltonian() const;
    [[nodiscard]] StateVector initial_state() const;
};

struct ArmConfig {
    double tau{0.0};        // proper time along the arm
    double lambda_arm{0.0}; // coupling scale of the noise Hamiltonian on this arm
    double phi{0.0};        // Aharonov-Bohm phase, radians

    void validate() const;
};

struct VisibilityResult {
    Complex kappa{1.0, 0.0};
    double v{1.0};
    double upsilon{0.0};

    static VisibilityResult from_overlap(Complex kappa);
};

enum class DetectorPort { plus, minus };

struct ChiSample {
    double chi{0.0};
    double probability{0.0};
};

// |psi>_clock ⊗ |env_index> inside an environment of dimension env_dim.
[[nodiscard]] ExtendedState product_state(const ClockSpec& clock, std::size_t env_dim, std::size_t env_index = 0);

[[nodiscard]] VisibilityResult overlap_visibility(const ExtendedState& state1, const ExtendedState& state2);

[[nodiscard]] double detection_probability(const VisibilityResult& result, double delta_phi, double chi,
                                           DetectorPort port);

// Samples P(chi) on `points` uniformly spaced phases covering [0, 2pi]
// (both endpoints included). The default density is 0.1 degree.
[[nodiscard]] std::vector<ChiSample> chi_scan(const VisibilityResult& result, double delta_phi,
                                              DetectorPort port = DetectorPort::plus, std::size_t points = 3601);

// Fringe contrast (max - min) / (max + min) of a phase scan. The scan must be
// sorted in chi, uniformly spaced with step <= 0.1 degree and cover a full
// period; anything else throws ValidationError.
[[nodiscard]] double visibility_from_scan(std::span<const ChiSample> samples);

// First-order gravitational proper-time difference g * dx * t / c^2 (SI units).
[[nodiscard]] double proper_time_difference(double g, double delta_x, double t_lab, double c = 299792458.0);

// <psi|exp(-i H0 dtau)|psi> and its modulus for the bare clock.
[[nodiscard]] Complex noiseless_overlap(const ClockSpec& clock, double delta_tau);
[[nodiscard]] double noiseless_visibility(const ClockSpec& clock, double delta_tau);

} // namespace clockvis
