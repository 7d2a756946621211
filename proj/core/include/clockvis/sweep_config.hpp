// sweep_config.hpp — JSON run configurations for the sweep engine.
//
// Either a direct sweep
//   {"model": "ad", "axes": [{"name": "lambda", "start": 0, "stop": 1.5, "points": 301}],
//    "fixed": {"delta_e": 1, "delta_tau": 1}, "output": "ad.csv", "format": "csv",
//    "alpha_branch": "principal", "tail_epsilon": 1e-12}
// or a preset with overrides of values it already fixes
//   {"preset": "compare-lambda", "fixed": {"delta_tau": 2}, "output": "cmp.csv"}
// Unknown keys are rejected. Every error is a ValidationError.

#pragma once

#include "clockvis/sweep.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clockvis::sweep {

struct SweepConfig {
    std::vector<SweepSpec> panels;
    std::optional<std::string> output_path;
    std::optional<OutputFormat> format;
};

[[nodiscard]] SweepConfig parse_sweep_config(std::string_view json_text);
[[nodiscard]] SweepConfig load_sweep_config(const std::filesystem::path& path);

[[nodiscard]] jc::AlphaBranch parse_alpha_branch(std::string_view name);

} // namespace clockvis::sweep
