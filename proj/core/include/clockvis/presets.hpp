// presets.hpp — named sweeps that regenerate each figure's data grid.
//
// A preset is a list of panels; each panel is a fully bound SweepSpec. The
// `figure` command runs the panels in order and writes one table with a
// single header, so panels are told apart by their bound parameter columns.

#pragma once

#include "clockvis/sweep.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace clockvis::sweep {

struct FigurePreset {
    std::string id;
    std::string description;
    std::vector<SweepSpec> panels;

    [[nodiscard]] std::size_t point_count() const;
};

// Throws ValidationError listing the valid ids when `id` is unknown.
[[nodiscard]] FigurePreset figure_preset(std::string_view id);
[[nodiscard]] const std::vector<std::string>& preset_ids();

// Runs every panel in order and concatenates the records.
[[nodiscard]] std::vector<SweepRecord> run_preset(const FigurePreset& preset, const RunOptions& run = {});

} // namespace clockvis::sweep
