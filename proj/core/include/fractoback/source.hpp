#pragma once

#include "fractoback/spectral.hpp"

#include <functional>
#include <string_view>
#include <vector>

namespace fractoback {

/// Scalar time factor h(t) of a separable source.
class TimeProfile {
public:
    enum class Kind { Polynomial, Exponential };

    /// c_0 + c_1 t + c_2 t^2 + ...
    static TimeProfile polynomial(std::vector<double> coeffs);
    static TimeProfile constant(double c) { return polynomial({c}); }
    /// amplitude * exp(rate * t)
    static TimeProfile exponential(double amplitude, double rate);

    double operator()(double t) const;
    Kind kind() const noexcept { return kind_; }
    std::span<const double> coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept;

private:
    TimeProfile(Kind kind, std::vector<double> coeffs) : kind_(kind), coeffs_(std::move(coeffs)) {}

    Kind kind_;
    std::vector<double> coeffs_;  // polynomial coefficients, or (amplitude, rate)
};

enum class SourceKind { Zero, SeparableModal, Sampled };

std::string_view to_string(SourceKind kind) noexcept;

/// Right-hand side f(t) = sum_k f_k(t) v_k, declared to lie in C([0,T]; D(A^eps)).
class SourceTerm {
public:
    static SourceTerm zero(std::size_t n_modes);
    /// f_k(t) = g_k h(t).
    static SourceTerm separable(SpectralVector g, TimeProfile h, double eps_reg = 0.5);
    /// Coefficient vectors on a strictly increasing time grid starting at 0,
    /// interpolated per mode by monotone piecewise-cubic (PCHIP) splines.
    /// Needs at least 4 samples.
    static SourceTerm sampled(std::vector<double> times, std::vector<SpectralVector> values, double eps_reg = 0.5);

    SourceKind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return n_; }
    double epsilon() const noexcept { return eps_; }
    /// Last time covered; infinite for analytic kinds.
    double horizon() const noexcept;

    /// False when f_k vanishes identically, so its convolution can be skipped.
    bool mode_active(std::size_t index) const;
    /// f_k(t) for the 0-based mode index.
    double coefficient(std::size_t index, double t) const;
    std::function<double(double)> mode_function(std::size_t index) const;
    SpectralVector at(double t) const;

    /// max_t ||f(t)||_eps over [0, T], sampled on `samples` uniform points plus
    /// every data time for sampled sources.
    double max_norm(const DiagonalOperator& op, double eps, double T, std::size_t samples = 1025) const;

    /// Separable parts; only meaningful for SeparableModal.
    const SpectralVector& spatial() const noexcept { return g_; }
    const TimeProfile& profile() const noexcept { return h_; }

private:
    SourceTerm() = default;

    SourceKind kind_ = SourceKind::Zero;
    std::size_t n_ = 0;
    double eps_ = 0.5;
    SpectralVector g_;
    TimeProfile h_ = TimeProfile::constant(0.0);
    std::vector<double> times_;
    std::vector<std::function<double(double)>> interpolants_;
    std::vector<bool> active_;
};

}  // namespace fractoback
