#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace fractoback {

/// Admissible range for exponents. `ClassicalLimit` additionally admits a
/// unit exponent so the heat-equation limit can be used as a test oracle.
enum class OrderDomain { Fractional, ClassicalLimit };

/// Exponents and weights of the multi-term operator sum_j q_j d^{rho_j}/dt^{rho_j}.
///
/// Invariants: 1 > rho_1 > rho_2 > ... > rho_M > 0 (strict), q_1 == 1, q_j > 0.
/// Under OrderDomain::ClassicalLimit a single exponent rho_1 == 1 is accepted.
class FractionalOrders {
public:
    static FractionalOrders make(std::vector<double> rhos,
                                 std::vector<double> weights,
                                 OrderDomain domain = OrderDomain::Fractional);

    /// Single-term orders (M = 1, q_1 = 1).
    static FractionalOrders single(double rho, OrderDomain domain = OrderDomain::Fractional);

    std::size_t size() const noexcept { return rhos_.size(); }
    std::span<const double> rhos() const noexcept { return rhos_; }
    std::span<const double> weights() const noexcept { return weights_; }
    double leading() const noexcept { return rhos_.front(); }
    bool is_classical() const noexcept { return rhos_.front() == 1.0; }

    /// rho' = (rho_1, rho_1 - rho_2, ..., rho_1 - rho_M), the first indices of
    /// every multinomial Mittag-Leffler kernel built from these orders.
    std::vector<double> kernel_indices() const;

private:
    FractionalOrders(std::vector<double> rhos, std::vector<double> weights)
        : rhos_(std::move(rhos)), weights_(std::move(weights)) {}

    std::vector<double> rhos_;
    std::vector<double> weights_;
};

/// Indices (beta_0; beta_1..beta_M) of E_{(beta_1..beta_M), beta_0}.
class MLParams {
public:
    static MLParams make(double beta0,
                         std::vector<double> betas,
                         OrderDomain domain = OrderDomain::Fractional);

    double beta0() const noexcept { return beta0_; }
    std::span<const double> betas() const noexcept { return betas_; }
    std::size_t size() const noexcept { return betas_.size(); }
    bool has_unit_index() const noexcept;

private:
    MLParams(double beta0, std::vector<double> betas)
        : beta0_(beta0), betas_(std::move(betas)) {}

    double beta0_;
    std::vector<double> betas_;
};

/// Arguments z_1..z_M. Only the nonpositive real axis is supported.
class MLArguments {
public:
    static MLArguments make(std::vector<double> z);

    std::span<const double> z() const noexcept { return z_; }
    std::size_t size() const noexcept { return z_.size(); }
    double leading() const noexcept { return z_.front(); }

private:
    explicit MLArguments(std::vector<double> z) : z_(std::move(z)) {}

    std::vector<double> z_;
};

namespace mlf {

enum class Method { Series, Asymptotic, Contour, ClosedForm, Oracle };

std::string_view to_string(Method method) noexcept;

struct EvalResult {
    double value = 0.0;
    Method method = Method::Series;
    double est_abs_error = 0.0;
};

struct SeriesOptions {
    /// Stop at the first degree shell whose largest term is below tol * |partial sum|.
    double tol = 1e-14;
    int max_shells = 400;
};

/// Below this |z_1| the two-term expansion is refused with SmallArgument.
inline constexpr double kAsymptoticMinArgument = 10.0;

struct EvalConfig {
    /// Z_SWITCH: the power series is never attempted for max_j |z_j| above this.
    double z_switch = 50.0;
    /// The series is tried only while sum_j |z_j| stays below this (divided by 4
    /// for each argument beyond the second); past it the contour route is both
    /// faster and more accurate.
    double series_reach = 1.0;
    /// The two-term expansion is used once |z_1| >= asymptotic_switch * (1 + sum_{j>=2} |z_j|).
    double asymptotic_switch = 1e8;
    SeriesOptions series;
    /// A series result is accepted only if its error estimate is below this
    /// fraction of its value; otherwise the contour route is taken.
    double series_max_rel_error = 1e-13;
    double contour_rel_tol = 1e-14;
};

/// Degree-shell summation of the defining multinomial power series with
/// compensated accumulation. Throws NoConvergence when `max_shells` is hit.
EvalResult series(const MLParams& params, const MLArguments& args, const SeriesOptions& options = {});

/// Large-|z_1| expansion with `terms` in {1, 2}:
///   -1/z_1 * 1/G(b0 - b1)  -  1/z_1^2 * (1/G(b0 - 2 b1) - sum_{j>=2} z_j / G(b0 - 2 b1 + b_j)).
/// With b = rho' the last Gamma argument is b0 - rho_1 - rho_j.
EvalResult asymptotic(const MLParams& params, const MLArguments& args, int terms,
                      double min_abs_z1 = kAsymptoticMinArgument);

/// Laplace-inversion route: E(z) = (1/2 pi i) * Hankel integral of
/// e^s s^{-b0} / (1 - sum_j z_j s^{-b_j}), taken over a keyhole around the
/// negative real axis. Requires every b_j < 1.
EvalResult contour(const MLParams& params, const MLArguments& args, double rel_tol = 1e-14);

/// Regime dispatcher over series, contour and asymptotic routes.
EvalResult eval(const MLParams& params, const MLArguments& args, const EvalConfig& config = {});

/// 1/Gamma(x), exactly zero at the poles x = 0, -1, -2, ...
double reciprocal_gamma(double x);

}  // namespace mlf
}  // namespace fractoback
