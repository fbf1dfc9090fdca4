#include "fractoback/error.hpp"
#include "fractoback/spectral.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace fractoback {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        std::ostringstream os;
        os << what << ": sizes " << a << " and " << b << " differ";
        throw Error(ErrorKind::LengthMismatch, os.str());
    }
}

void require_dirichlet(const DiagonalOperator& op, const char* what) {
    if (op.basis() != BasisKind::DirichletLaplacian1D) {
        throw Error(ErrorKind::InvalidParams,
                    std::string(what) + " needs a concrete eigenbasis (dirichlet1d operator)");
    }
}

const double kNormalization = std::sqrt(2.0 / std::numbers::pi);

}  // namespace

std::string_view to_string(BasisKind kind) noexcept {
    switch (kind) {
        case BasisKind::AbstractDiagonal: return "diagonal";
        case BasisKind::DirichletLaplacian1D: return "dirichlet1d";
    }
    return "unknown";
}

DiagonalOperator DiagonalOperator::dirichlet_laplacian_1d(std::size_t n_modes) {
    if (n_modes == 0) throw Error(ErrorKind::InvalidParams, "n_modes must be >= 1");
    std::vector<double> eigs(n_modes);
    for (std::size_t k = 1; k <= n_modes; ++k) eigs[k - 1] = static_cast<double>(k * k);
    return DiagonalOperator(std::move(eigs), BasisKind::DirichletLaplacian1D);
}

DiagonalOperator DiagonalOperator::diagonal(std::vector<double> eigenvalues) {
    if (eigenvalues.empty()) throw Error(ErrorKind::InvalidParams, "eigenvalues must not be empty");
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        const double l = eigenvalues[i];
        std::ostringstream os;
        if (!std::isfinite(l) || !(l > 0.0)) {
            os << "eigenvalues[" << i << "] = " << l << " must be finite and > 0";
            throw Error(ErrorKind::InvalidParams, os.str());
        }
        if (i > 0 && l < eigenvalues[i - 1]) {
            os << "eigenvalues must be nondecreasing; eigenvalues[" << i << "] = " << l
               << " < eigenvalues[" << i - 1 << "] = " << eigenvalues[i - 1];
            throw Error(ErrorKind::InvalidParams, os.str());
        }
    }
    return DiagonalOperator(std::move(eigenvalues), BasisKind::AbstractDiagonal);
}

SpectralVector::SpectralVector(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!std::isfinite(coeffs_[i])) {
            std::ostringstream os;
            os << "coefficient " << i + 1 << " is not finite";
            throw Error(ErrorKind::InvalidParams, os.str());
        }
    }
}

SpectralVector SpectralVector::zeros(std::size_t n) { return SpectralVector(std::vector<double>(n, 0.0)); }

SpectralVector SpectralVector::unit(std::size_t n, std::size_t mode) {
    if (mode < 1 || mode > n) {
        std::ostringstream os;
        os << "mode " << mode << " outside 1.." << n;
        throw Error(ErrorKind::InvalidParams, os.str());
    }
    SpectralVector v = zeros(n);
    v.coeffs_[mode - 1] = 1.0;
    return v;
}

SpectralVector& SpectralVector::operator+=(const SpectralVector& other) {
    require_same_size(size(), other.size(), "vector sum");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

SpectralVector& SpectralVector::operator-=(const SpectralVector& other) {
    require_same_size(size(), other.size(), "vector difference");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

SpectralVector& SpectralVector::operator*=(double s) {
    for (double& c : coeffs_) c *= s;
    return *this;
}

double fractional_norm(const DiagonalOperator& op, const SpectralVector& g, double eps) {
    require_same_size(op.size(), g.size(), "fractional_norm");
    if (!std::isfinite(eps)) throw Error(ErrorKind::InvalidParams, "norm exponent must be finite");
    const auto lambda = op.eigenvalues();
    // Scaled accumulation keeps lambda^{2 eps} g^2 from overflowing for large eps.
    double scale = 0.0;
    std::vector<double> terms(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
        terms[k] = std::abs(g[k]) * (eps == 0.0 ? 1.0 : std::pow(lambda[k], eps));
        scale = std::max(scale, terms[k]);
    }
    if (scale == 0.0) return 0.0;
    double sum = 0.0;
    for (double t : terms) sum += (t / scale) * (t / scale);
    return scale * std::sqrt(sum);
}

SpatialGrid SpatialGrid::uniform(std::size_t points) {
    if (points < 3) throw Error(ErrorKind::GridTooCoarse, "a spatial grid needs at least 3 points");
    const double h = std::numbers::pi / static_cast<double>(points - 1);
    std::vector<double> x(points);
    for (std::size_t i = 0; i < points; ++i) x[i] = h * static_cast<double>(i);
    x.back() = std::numbers::pi;
    return SpatialGrid(std::move(x), h);
}

SpatialGrid SpatialGrid::for_modes(std::size_t n_modes) { return uniform(4 * n_modes + 1); }

SpectralVector project(const DiagonalOperator& op, const SpatialGrid& grid, std::span<const double> samples) {
    require_dirichlet(op, "project");
    require_same_size(grid.size(), samples.size(), "project samples");
    const std::size_t n = op.size();
    if (grid.size() < 4 * n) {
        std::ostringstream os;
        os << "projection onto " << n << " modes needs at least " << 4 * n << " grid points, got "
           << grid.size();
        throw Error(ErrorKind::GridTooCoarse, os.str());
    }
    if (grid.size() % 2 == 0) {
        std::ostringstream os;
        os << "Simpson projection needs an odd number of grid points, got " << grid.size();
        throw Error(ErrorKind::GridTooCoarse, os.str());
    }
    const auto x = grid.points();
    const std::size_t last = grid.size() - 1;
    std::vector<double> weight(grid.size());
    for (std::size_t i = 0; i <= last; ++i) {
        weight[i] = (i == 0 || i == last) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        weight[i] *= grid.step() / 3.0;
    }
    std::vector<double> g(n);
    for (std::size_t k = 1; k <= n; ++k) {
        double acc = 0.0;
        for (std::size_t i = 0; i <= last; ++i) {
            acc += weight[i] * samples[i] * std::sin(static_cast<double>(k) * x[i]);
        }
        g[k - 1] = kNormalization * acc;
    }
    return SpectralVector(std::move(g));
}

std::vector<double> synthesize(const DiagonalOperator& op, const SpectralVector& g, const SpatialGrid& grid) {
    require_dirichlet(op, "synthesize");
    require_same_size(op.size(), g.size(), "synthesize");
    const auto x = grid.points();
    std::vector<double> out(grid.size(), 0.0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        double acc = 0.0;
        for (std::size_t k = 1; k <= g.size(); ++k) acc += g[k - 1] * std::sin(static_cast<double>(k) * x[i]);
        out[i] = kNormalization * acc;
    }
    return out;
}

}  // namespace fractoback
