#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace fractoback {

enum class BasisKind { AbstractDiagonal, DirichletLaplacian1D };

std::string_view to_string(BasisKind kind) noexcept;

/// Positive self-adjoint operator given by its spectrum, truncated at N modes.
/// Modes are 1-based in the mathematics and 0-based in every container.
class DiagonalOperator {
public:
    /// -d^2/dx^2 on (0, pi) with Dirichlet conditions: lambda_k = k^2, v_k = sqrt(2/pi) sin(kx).
    static DiagonalOperator dirichlet_laplacian_1d(std::size_t n_modes);
    /// User-supplied spectrum; must be positive, finite and nondecreasing.
    static DiagonalOperator diagonal(std::vector<double> eigenvalues);

    std::size_t size() const noexcept { return eigenvalues_.size(); }
    std::span<const double> eigenvalues() const noexcept { return eigenvalues_; }
    double eigenvalue(std::size_t index) const { return eigenvalues_.at(index); }
    BasisKind basis() const noexcept { return basis_; }

private:
    DiagonalOperator(std::vector<double> eigenvalues, BasisKind basis)
        : eigenvalues_(std::move(eigenvalues)), basis_(basis) {}

    std::vector<double> eigenvalues_;
    BasisKind basis_;
};

/// Fourier coefficients (g_1, ..., g_N).
class SpectralVector {
public:
    SpectralVector() = default;
    explicit SpectralVector(std::vector<double> coeffs);

    static SpectralVector zeros(std::size_t n);
    /// Unit vector e_mode, mode in 1..n.
    static SpectralVector unit(std::size_t n, std::size_t mode);

    std::size_t size() const noexcept { return coeffs_.size(); }
    std::span<const double> coeffs() const noexcept { return coeffs_; }
    double operator[](std::size_t i) const { return coeffs_[i]; }
    double& operator[](std::size_t i) { return coeffs_[i]; }

    SpectralVector& operator+=(const SpectralVector& other);
    SpectralVector& operator-=(const SpectralVector& other);
    SpectralVector& operator*=(double s);

    friend SpectralVector operator+(SpectralVector a, const SpectralVector& b) { return a += b; }
    friend SpectralVector operator-(SpectralVector a, const SpectralVector& b) { return a -= b; }
    friend SpectralVector operator*(double s, SpectralVector a) { return a *= s; }

private:
    std::vector<double> coeffs_;
};

/// ||g||_eps = (sum_k lambda_k^{2 eps} g_k^2)^{1/2}; eps = 0 is the plain norm.
double fractional_norm(const DiagonalOperator& op, const SpectralVector& g, double eps);

/// Uniform grid on [0, pi], endpoints included.
class SpatialGrid {
public:
    static SpatialGrid uniform(std::size_t points);
    /// Smallest odd grid accepted by project() for n_modes: 4 n + 1 points.
    static SpatialGrid for_modes(std::size_t n_modes);

    std::size_t size() const noexcept { return x_.size(); }
    std::span<const double> points() const noexcept { return x_; }
    double step() const noexcept { return step_; }

private:
    SpatialGrid(std::vector<double> x, double step) : x_(std::move(x)), step_(step) {}

    std::vector<double> x_;
    double step_;
};

/// Composite Simpson projection onto the sine basis. Needs an odd point count
/// of at least 4N; exact for sine polynomials of degree <= N up to rounding.
SpectralVector project(const DiagonalOperator& op, const SpatialGrid& grid, std::span<const double> samples);

/// sum_k g_k sqrt(2/pi) sin(k x) on the grid.
std::vector<double> synthesize(const DiagonalOperator& op, const SpectralVector& g, const SpatialGrid& grid);

}  // namespace fractoback
