#include "fractoback/backward.hpp"
#include "fractoback/error.hpp"
#include "fractoback/spectral.hpp"
#include "fractoback/verification/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace fractoback;
namespace ver = fractoback::verification;

namespace {
const double kNorm = std::sqrt(2.0 / std::numbers::pi);

std::vector<double> sample(const SpatialGrid& grid, double (*g)(double)) {
    std::vector<double> v;
    for (double x : grid.points()) v.push_back(g(x));
    return v;
}
}  // namespace

TEST(Operator, DirichletSpectrum) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(5);
    EXPECT_EQ(op.size(), 5u);
    EXPECT_EQ(op.eigenvalue(0), 1.0);
    EXPECT_EQ(op.eigenvalue(4), 25.0);
    EXPECT_EQ(op.basis(), BasisKind::DirichletLaplacian1D);
    EXPECT_THROW(DiagonalOperator::dirichlet_laplacian_1d(0), Error);
}

TEST(Operator, DiagonalValidation) {
    EXPECT_NO_THROW(DiagonalOperator::diagonal({0.5, 0.5, 2.0}));
    EXPECT_THROW(DiagonalOperator::diagonal({}), Error);
    EXPECT_THROW(DiagonalOperator::diagonal({1.0, 0.0}), Error);
    EXPECT_THROW(DiagonalOperator::diagonal({2.0, 1.0}), Error);
    EXPECT_THROW(DiagonalOperator::diagonal({1.0, INFINITY}), Error);
}

TEST(Norm, Examples) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(4);
    EXPECT_DOUBLE_EQ(fractional_norm(op, SpectralVector::unit(4, 1), 0.0), 1.0);
    EXPECT_DOUBLE_EQ(fractional_norm(op, SpectralVector::unit(4, 2), 1.0), 4.0);
    const auto two = DiagonalOperator::diagonal({1.0, 4.0});
    EXPECT_NEAR(fractional_norm(two, SpectralVector({1.0, 1.0}), 0.5), std::sqrt(5.0), 1e-15);
}

TEST(Norm, LengthMismatchAndScaling) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(3);
    try {
        fractional_norm(op, SpectralVector({1.0, 2.0}), 0.0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
    }
    // No overflow for huge coefficients.
    const SpectralVector big({1e200, 1e200, 0.0});
    EXPECT_NEAR(fractional_norm(op, big, 0.0) / 1e200, std::sqrt(2.0), 1e-14);
}

TEST(Vector, Arithmetic) {
    SpectralVector a({1, 2, 3});
    const SpectralVector b({0.5, 0.5, 0.5});
    const auto c = 2.0 * (a - b) + b;
    EXPECT_DOUBLE_EQ(c[0], 1.5);
    EXPECT_DOUBLE_EQ(c[2], 5.5);
    EXPECT_THROW(a += SpectralVector({1.0}), Error);
    EXPECT_THROW(SpectralVector::unit(3, 0), Error);
    EXPECT_THROW(SpectralVector({NAN}), Error);
}

TEST(Project, SingleSine) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(8);
    const auto grid = SpatialGrid::for_modes(8);
    const auto g = project(op, grid, sample(grid, [](double x) { return kNorm * std::sin(x); }));
    EXPECT_NEAR(g[0], 1.0, 1e-13);
    for (std::size_t k = 1; k < 8; ++k) EXPECT_NEAR(g[k], 0.0, 1e-13);
}

TEST(Project, Linearity) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(8);
    const auto grid = SpatialGrid::for_modes(8);
    const auto g = project(op, grid, sample(grid, [](double x) { return kNorm * (std::sin(x) + 0.5 * std::sin(3 * x)); }));
    const double expected[] = {1, 0, 0.5, 0, 0, 0, 0, 0};
    for (std::size_t k = 0; k < 8; ++k) EXPECT_NEAR(g[k], expected[k], 1e-13);
}

TEST(Project, ParabolaAgainstQuadratureOracle) {
    const std::size_t n = 16;
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(n);
    const auto grid = SpatialGrid::uniform(4097);
    const auto parabola = [](double x) { return x * (std::numbers::pi - x); };
    const auto g = project(op, grid, sample(grid, parabola));
    for (int k = 1; k <= int(n); ++k) {
        const double oracle = ver::sine_coefficient(parabola, k);
        EXPECT_NEAR(oracle, ver::parabola_coefficient(k), 1e-12) << k;
        EXPECT_NEAR(g[k - 1], oracle, 1e-8) << k;
    }
}

TEST(Project, GridPreconditions) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(8);
    const auto err = [&](std::size_t points) {
        try {
            const auto grid = SpatialGrid::uniform(points);
            project(op, grid, std::vector<double>(points, 0.0));
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Io;
    };
    EXPECT_EQ(err(17), ErrorKind::GridTooCoarse);
    EXPECT_EQ(err(34), ErrorKind::GridTooCoarse);
    EXPECT_EQ(err(33), ErrorKind::Io);
    EXPECT_THROW(project(DiagonalOperator::diagonal({1, 2}), SpatialGrid::uniform(9), std::vector<double>(9, 0.0)), Error);
}

TEST(Synthesize, ZeroAndFirstMode) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(4);
    const auto grid = SpatialGrid::for_modes(4);
    for (double v : synthesize(op, SpectralVector::zeros(4), grid)) EXPECT_EQ(v, 0.0);
    const auto s = synthesize(op, SpectralVector::unit(4, 1), grid);
    for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_NEAR(s[i], kNorm * std::sin(grid.points()[i]), 1e-15);
}

TEST(Synthesize, RoundTripAndParseval) {
    const std::size_t n = 32;
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(n);
    const auto grid = SpatialGrid::for_modes(n);
    const auto g = random_band_limited(n, n, 99);
    const auto samples = synthesize(op, g, grid);
    const auto back = project(op, grid, samples);
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(back[k] - g[k]));
    EXPECT_LE(worst, 1e-10);

    // Trapezoid sum of the square equals the coefficient sum of squares for sine polynomials.
    double l2 = 0.0;
    for (double v : samples) l2 += v * v;
    l2 *= grid.step();
    const double norm = fractional_norm(op, g, 0.0);
    EXPECT_NEAR(l2, norm * norm, 1e-10 * norm * norm);
}
