#pragma once

#include "fractoback/kernels.hpp"
#include "fractoback/mlf.hpp"
#include "fractoback/report.hpp"
#include "fractoback/source.hpp"
#include "fractoback/spectral.hpp"

#include <functional>
#include <vector>

namespace fractoback {

enum class MeshKind { Graded, Uniform };

/// Gauss-Legendre quadrature of the source convolution in s = xi^{rho_1}.
struct QuadratureOptions {
    /// Graded: panels shrink geometrically toward s = 0, where the kernel
    /// carries fractional powers of s and varies on the scale 1/lambda.
    MeshKind mesh = MeshKind::Graded;
    /// Points per panel; one of 2, 3, 4, 5, 7, 10, 15, 20.
    int nodes = 15;
    double grading_ratio = 0.25;
    /// The innermost graded panel is [0, min_fraction * t^{rho_1}].
    double min_fraction = 1e-12;
    /// Panel count for MeshKind::Uniform.
    int uniform_panels = 8;
    /// A panel is accepted once its one-level vs two-half estimate differ by at most
    /// abs_tol * (panel share of the interval) + rel_tol * (integral of |integrand| over it).
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_depth = 12;
    /// Off: a single rule per panel, no refinement (used for convergence-order studies).
    bool adaptive = true;
};

struct ConvolutionResult {
    double value = 0.0;
    double est_abs_error = 0.0;
    std::size_t kernel_evaluations = 0;
};

/// int_0^t f_k(t - xi) xi^{rho_1 - 1} E_{rho', rho_1}(-lambda xi^{rho_1}, *) dxi.
/// Throws QuadratureFailure when a panel cannot meet the tolerance.
ConvolutionResult convolve_source(const FractionalOrders& orders, double lambda,
                                  const std::function<double(double)>& f_k, double t,
                                  const QuadratureOptions& quadrature = {},
                                  const mlf::EvalConfig& config = {});

struct ForwardOptions {
    mlf::EvalConfig mlf;
    QuadratureOptions quadrature;
};

struct TrajectoryResult {
    std::vector<double> times;
    std::vector<SpectralVector> states;
    std::vector<double> norm1;  ///< ||u(t_i)||_1
    std::vector<double> norm0;  ///< ||u(t_i)||
};

/// omega(t; lambda_k) for every mode.
std::vector<double> relaxation_factors(const DiagonalOperator& op, const FractionalOrders& orders, double t,
                                       const mlf::EvalConfig& config = {});

/// u_k(t) = phi_k omega(t; lambda_k) + (f_k * kernel)(t) for each requested time.
TrajectoryResult forward_solve(const DiagonalOperator& op, const FractionalOrders& orders,
                               const SpectralVector& phi, const SourceTerm& f,
                               std::span<const double> times, const ForwardOptions& options = {});

/// n points in (0, T], geometrically spaced from t_min up to T.
std::vector<double> geometric_time_grid(double T, std::size_t n, double t_min);

/// Ratio R(t) = ||u(t)||_1 / (||phi|| sum_j t^{-rho_j} + max_t ||f(t)||_eps) on the
/// trajectory's positive times. Passes when sup R is finite and R does not grow
/// as t -> 0+ (log-log slope over the smallest-time half >= -0.05).
EvalReport smoothing_check(const TrajectoryResult& result, const DiagonalOperator& op,
                           const FractionalOrders& orders, const SpectralVector& phi,
                           const SourceTerm& f, double eps);

}  // namespace fractoback
