#pragma once

#include "fractoback/forward.hpp"
#include "fractoback/mlf.hpp"
#include "fractoback/spectral.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fractoback::app {

struct OperatorSpec {
    BasisKind basis = BasisKind::DirichletLaplacian1D;
    std::size_t n_modes = 64;
    std::vector<double> eigenvalues;  // diagonal basis only
};

struct TimeSpec {
    double T = 1.0;
    std::string grid = "geometric";  // geometric | uniform
    std::size_t points = 24;
    double t_min = 1e-4;
};

struct DataSpec {
    std::string initial = "random:32";
    std::string final_data = "mode:1";
};

struct SourceSpec {
    std::string spatial = "zero";
    std::string profile = "const:1";
    double eps = 0.5;
    /// > 0: replace the analytic profile by this many PCHIP samples on [0, T].
    std::size_t sampled = 0;
};

struct IllposedSpec {
    double eps = 0.1;
    std::size_t k_min = 8;
    std::size_t k_max = 32;
    double noise = 0.0;
};

struct StabilitySpec {
    double eps = 0.5;
    double B0 = 1.0;
    std::size_t family = 50;
    std::vector<double> scales = {1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3};
};

struct TwoSidedSpec {
    std::size_t family = 100;
};

struct ExperimentConfig {
    std::string id = "experiment";
    std::uint64_t seed = 12345;
    OperatorSpec op;
    std::vector<double> rhos = {0.8, 0.4};
    std::vector<double> weights = {1.0, 1.0};
    bool classical_limit = false;
    TimeSpec time;
    DataSpec data;
    SourceSpec source;
    mlf::EvalConfig mlf;
    QuadratureOptions quadrature;
    IllposedSpec illposed;
    StabilitySpec stability;
    TwoSidedSpec two_sided;
    std::string output_dir;

    /// Where each field came from ("file:line"), for diagnostics.
    std::map<std::string, std::string> origins;
    std::string origin_of(const std::string& field) const;
};

/// Parses the YAML experiment file. Unknown keys and ill-typed values are
/// rejected with "<origin>:<line>: <field>: <reason>".
ExperimentConfig parse_config(std::string_view text, const std::string& origin = "<config>");
ExperimentConfig load_config(const std::filesystem::path& path);

/// Checks every solver precondition reachable from the config; throws Config errors
/// naming the offending field.
void validate(const ExperimentConfig& config);

DiagonalOperator make_operator(const ExperimentConfig& config);
DiagonalOperator make_operator(const ExperimentConfig& config, std::size_t n_modes);
FractionalOrders make_orders(const ExperimentConfig& config);
ForwardOptions make_forward_options(const ExperimentConfig& config);

/// The config as YAML text (canonical field order), for echoing into reports.
std::string dump_config(const ExperimentConfig& config);

}  // namespace fractoback::app
