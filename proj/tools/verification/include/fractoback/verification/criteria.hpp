#pragma once

#include "fractoback/app/config.hpp"
#include "fractoback/report.hpp"

#include <string>
#include <vector>

namespace fractoback::verification {

inline constexpr int kCriterionCount = 10;

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string summary;
    EvalReport report;
    double seconds = 0.0;
};

std::string criterion_name(int id);

/// Throws std::out_of_range for ids outside 1..kCriterionCount.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();

/// "criterion <id> [<name>]: PASS|FAIL  <summary>"
std::string format_line(const CriterionResult& result);

/// Two-term orders (0.8, 0.4), q = (1, 1), T = 1, N = 32, seed 20240607: the base
/// configuration of the solver-level criteria.
app::ExperimentConfig reference_config();

}  // namespace fractoback::verification
