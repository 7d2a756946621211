// validation.hpp — self-check report: golden values, analytic-vs-oracle
// agreement, phase-scan consistency and structural invariants.

#pragma once

#include "clockvis/jaynes_cummings.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace clockvis::validation {

// strict halves every golden-value tolerance; numerical tolerances are shared.
enum class Profile { standard, strict };

struct Check {
    std::string name;
    double measured{0.0};  // deviation or defect that is compared with the tolerance
    double tolerance{0.0};
    bool passed{false};
    std::string detail;
};

struct Report {
    Profile profile{Profile::standard};
    jc::AlphaBranch alpha_branch{jc::AlphaBranch::principal};
    std::vector<Check> checks;

    [[nodiscard]] bool passed() const;
};

[[nodiscard]] Report run_validation(Profile profile = Profile::standard,
                                    jc::AlphaBranch alpha_branch = jc::AlphaBranch::principal);

void write_report_json(std::ostream& out, const Report& report);

} // namespace clockvis::validation
