// sweep.hpp — parameter grids over the visibility models.
//
// A SweepSpec binds every parameter of one model either to a fixed value or
// to a linspace axis (one or two axes, outer axis slowest). run_sweep
// evaluates the grid on a worker pool and returns records in grid order, so
// the output does not depend on the number of workers.
//
// Parameter names:
//   delta_e, omega, lambda, lambda1, lambda2, delta_tau, temperature,
//   p1, p2, tau1, tau2
// Timing is either delta_tau (arm 1 at tau = 0) or tau1 + tau2. Channel
// couplings are lambda (both arms), lambda1 + lambda2, or p1 + p2 with
// lambda_i = arcsin(sqrt(p_i)) / tau_i. The noiseless model accepts lambda
// as an inert label so it can sit on the same axis as the noisy models.

#pragma once

#include "clockvis/jaynes_cummings.hpp"
#include "clockvis/numerics.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clockvis::sweep {

enum class Model { noiseless, jc, jc_thermal, ad, pd, dp };
enum class OutputFormat { csv, json };

[[nodiscard]] std::string_view to_string(Model model) noexcept;
[[nodiscard]] Model parse_model(std::string_view name);
[[nodiscard]] std::string_view to_string(OutputFormat format) noexcept;
[[nodiscard]] OutputFormat parse_format(std::string_view name);

[[nodiscard]] const std::vector<std::string>& parameter_names();

struct Axis {
    std::string name;
    double start{0.0};
    double stop{1.0};
    std::size_t points{2};

    // start + (stop - start) i / (points - 1); the last point is exactly stop.
    [[nodiscard]] double value(std::size_t i) const;
};

// Parameter name -> value for one grid point.
using Binding = std::map<std::string, double, std::less<>>;

struct EvalOptions {
    jc::AlphaBranch alpha_branch{jc::AlphaBranch::principal};
    double tail_epsilon{1e-12};
};

struct SweepSpec {
    Model model{Model::noiseless};
    std::vector<Axis> axes;
    Binding fixed;
    std::string output_path;
    OutputFormat format{OutputFormat::csv};
    EvalOptions options;

    // Throws ValidationError naming the offending parameter when a name is
    // unknown, bound twice, missing for the model, or has non-finite bounds.
    void validate() const;
    [[nodiscard]] std::size_t point_count() const;
    // Binding of grid point `index` in row-major order.
    [[nodiscard]] Binding point(std::size_t index) const;
};

struct SweepRecord {
    Model model{Model::noiseless};
    std::optional<double> delta_e, omega, lambda1, lambda2, delta_tau, temperature, p1, p2, tau1, tau2;
    Complex kappa{1.0, 0.0};
    double visibility{1.0};
};

// Validates `binding` against the model's parameter rules and evaluates it.
[[nodiscard]] SweepRecord evaluate_point(Model model, const Binding& binding, const EvalOptions& options = {});

struct RunOptions {
    std::size_t threads{0}; // 0: default_thread_count()
};

// Worker count from VISIBILITY_THREADS, else the hardware concurrency.
// Throws ValidationError if the variable is set but not a positive integer.
[[nodiscard]] std::size_t default_thread_count();

[[nodiscard]] std::vector<SweepRecord> run_sweep(const SweepSpec& spec, const RunOptions& run = {});

// Shortest round-trip decimal representation (at most 17 significant digits).
[[nodiscard]] std::string format_number(double value);

inline constexpr std::string_view kCsvHeader =
    "model,delta_e,omega,lambda1,lambda2,delta_tau,temperature,p1,p2,tau1,tau2,kappa_re,kappa_im,visibility";

void write_csv(std::ostream& out, std::span<const SweepRecord> records, bool header = true);
void write_json(std::ostream& out, std::span<const SweepRecord> records);
void write_records(std::ostream& out, std::span<const SweepRecord> records, OutputFormat format);

} // namespace clockvis::sweep
