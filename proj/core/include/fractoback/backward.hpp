#pragma once

#include "fractoback/forward.hpp"
#include "fractoback/report.hpp"

#include <cstdint>
#include <vector>

namespace fractoback {

/// Final-value problem: find u(0) from u(T) = Phi.
struct BackwardProblem {
    DiagonalOperator op;
    FractionalOrders orders;
    double T;
    SpectralVector Phi;
    SourceTerm f;
};

struct ReconstructionResult {
    SpectralVector phi_hat;
    std::vector<double> denominators;   ///< D_k = omega(T; lambda_k)
    std::vector<double> amplification;  ///< 1 / D_k
    SpectralVector source_part;         ///< v(T), the zero-initial-state response to f
    EvalReport diagnostics;
};

struct PrioriBound {
    double epsilon;
    double B0;

    static PrioriBound make(double epsilon, double B0);
};

/// D = omega(T; lambda) in (0, 1]; throws NoConvergence if the evaluation is not positive.
double denominator(const FractionalOrders& orders, double lambda, double T, const mlf::EvalConfig& config = {});

/// phi_k = Phi_k / D_k. Requires a zero source.
ReconstructionResult backward_solve_homogeneous(const BackwardProblem& problem, const ForwardOptions& options = {});

/// u(0) = w(0), where v solves the forward problem with zero initial state and
/// source f, and w the homogeneous backward problem with final data Phi - v(T).
ReconstructionResult backward_solve(const BackwardProblem& problem, const ForwardOptions& options = {});

/// Deterministic uniform [-1, 1) coefficients for modes 1..band (zero above).
SpectralVector random_band_limited(std::size_t n, std::size_t band, std::uint64_t seed);

struct IllposednessOptions {
    double eps = 0.1;
    std::size_t k_min = 8;
    std::size_t k_max = 32;
    /// Optional per-mode perturbation delta e_k of the final data; its image delta / D_k is reported.
    double noise = 0.0;
    double slope_tolerance = 0.05;
};

/// Final data Phi = lambda_k^{-1+eps} e_k for k = 1..k_max: the data norm tends to zero while
/// the reconstruction grows, and 1/D_k grows like lambda_k. Monotonicity flags and the slope
/// fit cover k_min..k_max; the table covers every k from 1.
EvalReport illposedness_demo(const DiagonalOperator& op, const FractionalOrders& orders, double T,
                             const IllposednessOptions& options = {}, const mlf::EvalConfig& config = {});

/// Ratios ||u(T)||_1 / ||u(0)|| over `family_size` random initial states in span{e_1..e_N}.
EvalReport two_sided_estimate(const DiagonalOperator& op, const FractionalOrders& orders, double T,
                              std::size_t family_size, std::uint64_t seed, const mlf::EvalConfig& config = {});

struct StabilityCase {
    SpectralVector phi;
    SourceTerm f;
};

struct StabilityOptions {
    /// Scales s applied jointly to (phi, f, B0).
    std::vector<double> scales = {1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3};
    /// The first `base_size` cases form the base family; all cases form the enlarged one.
    std::size_t base_size = 0;
};

/// Q = ||phi|| / ([||Phi|| + max_t ||f(t)||]^{eps/(1+eps)} B0^{1/(1+eps)}), Phi = u(T).
/// Throws PrioriViolation if some case has ||phi||_eps > B0.
EvalReport conditional_stability_check(const DiagonalOperator& op, const FractionalOrders& orders, double T,
                                       const PrioriBound& bound, const std::vector<StabilityCase>& cases,
                                       const StabilityOptions& stability = {}, const ForwardOptions& options = {});

/// Default family for the stability check: single modes e_k scaled to the bound,
/// then random band-limited states scaled to ||phi||_eps = B0, some with a separable source.
std::vector<StabilityCase> stability_family(const DiagonalOperator& op, const PrioriBound& bound,
                                            std::size_t count, std::uint64_t seed);

}  // namespace fractoback
