#include "clockvis/interferometer.hpp"

#include "clockvis/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace clockvis {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// 0.1 degree, with slack for the rounding of a linspace grid.
constexpr double kMaxScanStep = (std::numbers::pi / 1800.0) * (1.0 + 1e-9);

} // namespace

ClockSpec ClockSpec::balanced(double e0, double e1) {
    ClockSpec clock;
    clock.e0 = e0;
    clock.e1 = e1;
    clock.c0 = Complex(std::numbers::sqrt2 / 2.0, 0.0);
    clock.c1 = Complex(std::numbers::sqrt2 / 2.0, 0.0);
    clock.validate();
    return clock;
}

ClockSpec ClockSpec::with_gap(double delta_e) { return balanced(0.0, delta_e); }

void ClockSpec::validate() const {
    if (!std::isfinite(e0) || !std::isfinite(e1)) throw ValidationError("ClockSpec: energies must be finite");
    if (e1 < e0) {
        throw ValidationError("ClockSpec: require e1 >= e0 (got e0=" + std::to_string(e0) +
                              ", e1=" + std::to_string(e1) + ")");
    }
    const double norm = std::norm(c0) + std::norm(c1);
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-12) {
        throw ValidationError("ClockSpec: amplitudes must satisfy |c0|^2 + |c1|^2 = 1");
    }
}

ComplexMatrix ClockSpec::hamiltonian() const {
    ComplexMatrix h = ComplexMatrix::Zero(2, 2);
    h(0, 0) = e0;
    h(1, 1) = e1;
    return h;
}

StateVector ClockSpec::initial_state() const {
    validate();
    return StateVector{c0, c1};
}

void ArmConfig::validate() const {
    if (!std::isfinite(tau) || tau < 0.0) throw ValidationError("ArmConfig: tau must be finite and >= 0");
    if (!std::isfinite(lambda_arm)) throw ValidationError("ArmConfig: coupling must be finite");
    if (!std::isfinite(phi)) throw ValidationError("ArmConfig: phase must be finite");
}

VisibilityResult VisibilityResult::from_overlap(Complex kappa) {
    return VisibilityResult{kappa, std::abs(kappa), std::arg(kappa)};
}

ExtendedState product_state(const ClockSpec& clock, std::size_t env_dim, std::size_t env_index) {
    return tensor_product(clock.initial_state(), StateVector::basis(env_dim, env_index));
}

VisibilityResult overlap_visibility(const ExtendedState& state1, const ExtendedState& state2) {
    return VisibilityResult::from_overlap(inner_product(state1, state2));
}

double detection_probability(const VisibilityResult& result, double delta_phi, double chi, DetectorPort port) {
    const double fringe = result.v * std::sin(delta_phi + chi + result.upsilon);
    return port == DetectorPort::plus ? 0.5 * (1.0 + fringe) : 0.5 * (1.0 - fringe);
}

std::vector<ChiSample> chi_scan(const VisibilityResult& result, double delta_phi, DetectorPort port,
                                std::size_t points) {
    if (points < 2) throw ValidationError("chi_scan: need at least two phase samples");
    std::vector<ChiSample> out;
    out.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double chi = kTwoPi * static_cast<double>(i) / static_cast<double>(points - 1);
        out.push_back({chi, detection_probability(result, delta_phi, chi, port)});
    }
    return out;
}

double visibility_from_scan(std::span<const ChiSample> samples) {
    if (samples.size() < 2) throw ValidationError("visibility_from_scan: scan is empty");

    const double step = (samples.back().chi - samples.front().chi) / static_cast<double>(samples.size() - 1);
    if (!(step > 0.0) || step > kMaxScanStep) {
        throw ValidationError("visibility_from_scan: phase step must be positive and at most 0.1 degree");
    }
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const double d = samples[i].chi - samples[i - 1].chi;
        if (std::abs(d - step) > 1e-9) {
            throw ValidationError("visibility_from_scan: phase grid is not uniform at index " + std::to_string(i));
        }
    }
    if (samples.back().chi - samples.front().chi < kTwoPi - step * (1.0 + 1e-9)) {
        throw ValidationError("visibility_from_scan: scan covers less than one period");
    }

    const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end(),
                                              [](const ChiSample& a, const ChiSample& b) {
                                                  return a.probability < b.probability;
                                              });
    const double sum = hi->probability + lo->probability;
    if (sum <= 0.0) throw ValidationError("visibility_from_scan: probabilities are all zero");
    return (hi->probability - lo->probability) / sum;
}

double proper_time_difference(double g, double delta_x, double t_lab, double c) {
    if (!(g >= 0.0) || !(delta_x >= 0.0) || !(t_lab >= 0.0) || !(c > 0.0)) {
        throw ValidationError("proper_time_difference: inputs must be non-negative and c positive");
    }
    return g * delta_x * t_lab / (c * c);
}

Complex noiseless_overlap(const ClockSpec& clock, double delta_tau) {
    clock.validate();
    return std::norm(clock.c0) * std::polar(1.0, -clock.e0 * delta_tau) +
           std::norm(clock.c1) * std::polar(1.0, -clock.e1 * delta_tau);
}

double noiseless_visibility(const ClockSpec& clock, double delta_tau) {
    return std::abs(noiseless_overlap(clock, delta_tau));
}

} // namespace clockvis
