// jaynes_cummings.hpp — clock coupled to a single bosonic mode (rotating-wave JC model).
//
//   H = (dE/2) sz + w a^dag a + (lambda/2)(a s+ + a^dag s-)
//
// on the truncated space {|c, n> : c in {0,1}, 0 <= n <= n_cutoff}, with the
// clock ground state |0> at -dE/2. Excitation number is conserved, so the
// dynamics splits into 2x2 sectors {|1,p>, |0,p+1>}.

#pragma once

#include "clockvis/interferometer.hpp"
#include "clockvis/numerics.hpp"

#include <cstddef>
#include <cstdint>

namespace clockvis::jc {

// Branch used for the mixing angle alpha0 = arctan(lambda / delta) in the
// zero-temperature closed form.
//   principal: the principal value of arctan, exactly as the closed form is
//              usually printed. For negative detuning this weights the two
//              dressed phases the other way round from the Hamiltonian's own
//              eigenvectors; it is the convention behind the reference
//              cavity values 0.8525 / 0.7999 at dE=1, w=1.1, dtau=1.
//   quadrant:  atan2(lambda, delta), the angle of the actual eigenvectors of
//              H. Agrees with brute-force propagation for every detuning.
// At zero detuning both give pi/2.
enum class AlphaBranch { principal, quadrant };

struct JcParams {
    double delta_e{1.0};        // clock gap
    double omega{1.0};          // field frequency
    double lambda{0.0};         // coupling
    std::size_t n_cutoff{2};    // highest Fock level kept
    AlphaBranch alpha_branch{AlphaBranch::principal};

    [[nodiscard]] double detuning() const noexcept { return delta_e - omega; }
    // sqrt(delta^2 + lambda^2)
    [[nodiscard]] double rabi_splitting() const noexcept;
    [[nodiscard]] double mixing_angle() const noexcept;

    void validate() const;
};

// Dressed doublet of the excitation sector spanned by |1,p> and |0,p+1>.
struct JcDressedLevel {
    std::size_t p{0};
    double omega_p{0.0};   // lambda sqrt(p+1)
    double delta_p{0.0};   // sqrt(delta^2 + omega_p^2)
    double cos_theta{0.0}; // weight amplitude of |0,p+1> in the upper level
    double sin_theta{1.0}; // weight amplitude of |1,p> in the upper level
    double energy_ground{0.0}; // -dE/2, the uncoupled |0,0>
    double energy_upper{0.0};  // (p + 1/2) w + delta_p / 2
    double energy_lower{0.0};  // (p + 1/2) w - delta_p / 2
};

[[nodiscard]] JcDressedLevel dressed_level(const JcParams& params, std::size_t p);

struct ThermalParams {
    double temperature{1.0}; // energy units, k_B = 1; 0 means the T -> 0 limit
    double tail_epsilon{1e-12};

    void validate() const;
};

// Boltzmann weight e^{-n beta w}(1 - e^{-beta w}) of Fock level n.
[[nodiscard]] double thermal_weight(double omega, double temperature, std::size_t n);

// Smallest n_max whose neglected tail e^{-(n_max+1) w/T} is <= tail_epsilon,
// clamped to >= 1.
[[nodiscard]] std::uint64_t thermal_cutoff(double omega, double temperature, double tail_epsilon);

inline constexpr std::uint64_t kMaxThermalLevels = 100000;

// Dense Hamiltonian of dimension 2 (n_cutoff + 1).
[[nodiscard]] ComplexMatrix build_jc_hamiltonian(const JcParams& params);

// Balanced clock with the field in Fock state |n>, in the basis of build_jc_hamiltonian.
[[nodiscard]] ExtendedState jc_initial_state(const JcParams& params, std::size_t fock_n = 0);

// Closed-form overlap <psi|exp(-i H dtau)|psi> for |psi> = (|0>+|1>)/sqrt(2) ⊗ |0>.
[[nodiscard]] Complex jc_overlap_analytic(const JcParams& params, double delta_tau);
[[nodiscard]] double jc_visibility_analytic(const JcParams& params, double delta_tau);

// Per-Fock-sector overlap <psi_n|exp(-i H dtau)|psi_n>, |psi_n> = (|0>+|1>)/sqrt(2) ⊗ |n>.
// n = 0 is the zero-temperature closed form above.
[[nodiscard]] Complex jc_sector_overlap(const JcParams& params, std::size_t n, double delta_tau);

// Thermal visibility |sum_n P(n) kappa_n|, summed in ascending n up to thermal_cutoff.
// Throws ConvergenceError when more than kMaxThermalLevels levels would be needed.
[[nodiscard]] Complex jc_thermal_overlap(const JcParams& params, const ThermalParams& thermal, double delta_tau);
[[nodiscard]] double jc_thermal_visibility(const JcParams& params, const ThermalParams& thermal, double delta_tau);

} // namespace clockvis::jc
