// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "pefock/oracle.hpp"

namespace pefock::validate {

enum class Depth { quick, full };

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::string to_string() const;  // one line per check
};

/// Differential validation of every closed form against its independent
/// oracle. quick runs the exact checks on states with m+m' <= 6; full
/// extends the grids to m+m' <= 8 and adds the Monte Carlo comparisons.
Report run_validation(Depth depth, const oracle::McConfig& mc);

}  // namespace pefock::validate
