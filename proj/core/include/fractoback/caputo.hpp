#pragma once

#include "fractoback/forward.hpp"

#include <span>
#include <vector>

namespace fractoback {

/// Uniform nodes t_0 = a < t_1 < ... < t_n = b.
class TimeGrid {
public:
    static TimeGrid uniform(double a, double b, std::size_t steps);

    std::span<const double> nodes() const noexcept { return t_; }
    std::size_t steps() const noexcept { return t_.size() - 1; }
    double step() const noexcept { return h_; }

private:
    TimeGrid(std::vector<double> t, double h) : t_(std::move(t)), h_(h) {}

    std::vector<double> t_;
    double h_;
};

/// L1 approximation of the Caputo derivative (base point t_0) at nodes t_1..t_n:
///   h^{-rho} / Gamma(2 - rho) * sum_{i=0}^{m-1} b_i (u_{m-i} - u_{m-i-1}),  b_i = (i+1)^{1-rho} - i^{1-rho}.
/// Entry m-1 of the result belongs to node t_m.
std::vector<double> caputo_l1(const TimeGrid& grid, std::span<const double> samples, double rho);

/// (u_m - u_{m-1}) / h at nodes t_1..t_n; the first-order surrogate for rho = 1.
std::vector<double> backward_difference(const TimeGrid& grid, std::span<const double> samples);

struct ResidualResult {
    std::vector<double> times;                    ///< reported nodes (t >= report_from)
    std::vector<std::vector<double>> per_mode;    ///< per_mode[i][k] = r_k(times[i])
    double max_abs = 0.0;
};

/// r_k(t_m) = sum_j q_j (L1 d^{rho_j} u_k)(t_m) + lambda_k u_k(t_m) - f_k(t_m).
/// The trajectory must be sampled on exactly the grid's nodes (GridMismatch otherwise);
/// the grid must start at 0, the base point of the derivative. Only nodes with
/// t >= report_from are reported. Classical orders use backward differences.
ResidualResult residual(const DiagonalOperator& op, const FractionalOrders& orders, const TimeGrid& grid,
                        const TrajectoryResult& trajectory, const SourceTerm& f, double report_from);

}  // namespace fractoback
