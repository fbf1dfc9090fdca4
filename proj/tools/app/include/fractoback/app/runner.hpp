#pragma once

#include "fractoback/app/config.hpp"
#include "fractoback/report.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace fractoback::app {

/// Experiment pipelines selectable by name (the CLI subcommands that read a config).
inline const std::vector<std::string>& experiment_commands() {
    static const std::vector<std::string> names = {"forward", "backward", "roundtrip", "illposed-demo",
                                                   "conditional-stability", "two-sided"};
    return names;
}

EvalReport run_forward(const ExperimentConfig& config);
EvalReport run_backward(const ExperimentConfig& config);
/// phi -> u(T) -> reconstruction; relative error and re-hit of u(T).
EvalReport run_roundtrip(const ExperimentConfig& config);
EvalReport run_illposed(const ExperimentConfig& config);
EvalReport run_conditional_stability(const ExperimentConfig& config);
/// Ratio interval at N and 2N modes (dirichlet1d) or at the given spectrum only (diagonal).
EvalReport run_two_sided(const ExperimentConfig& config);

struct RunOutcome {
    std::string command;
    EvalReport report;
    double wall_seconds = 0.0;
};

/// Throws Config for an unknown command.
RunOutcome run(const std::string& command, const ExperimentConfig& config);

/// config.output_dir, else $FRACTOBACK_OUTPUT_DIR, else ./fractoback-out.
std::filesystem::path output_dir(const ExperimentConfig& config);

/// One CSV per table plus one JSON summary; returns the paths written. Throws Io.
std::vector<std::filesystem::path> write_outputs(const RunOutcome& outcome, const ExperimentConfig& config,
                                                 const std::filesystem::path& dir);

/// Shortest round-trip decimal form; identical bits give identical text.
std::string format_number(double value);
std::string format_csv(const Table& table);
std::string format_json(const RunOutcome& outcome, const ExperimentConfig& config,
                        const std::vector<std::string>& table_files);

}  // namespace fractoback::app
