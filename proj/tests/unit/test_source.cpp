#include "fractoback/error.hpp"
#include "fractoback/source.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace fractoback;

TEST(Profile, PolynomialAndExponential) {
    const auto p = TimeProfile::polynomial({1.0, 2.0, 3.0});
    EXPECT_DOUBLE_EQ(p(2.0), 17.0);
    EXPECT_FALSE(p.is_zero());
    EXPECT_TRUE(TimeProfile::constant(0.0).is_zero());
    const auto e = TimeProfile::exponential(2.0, -1.0);
    EXPECT_NEAR(e(1.0), 2.0 * std::exp(-1.0), 1e-16);
    EXPECT_TRUE(TimeProfile::exponential(0.0, 3.0).is_zero());
    EXPECT_THROW(TimeProfile::polynomial({NAN}), Error);
}

TEST(Source, ZeroIsInactive) {
    const auto f = SourceTerm::zero(3);
    EXPECT_EQ(f.kind(), SourceKind::Zero);
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_FALSE(f.mode_active(k));
        EXPECT_EQ(f.coefficient(k, 0.4), 0.0);
    }
    EXPECT_EQ(f.max_norm(DiagonalOperator::dirichlet_laplacian_1d(3), 0.5, 1.0), 0.0);
}

TEST(Source, SeparableCoefficients) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(3);
    const auto f = SourceTerm::separable(SpectralVector({1.0, 0.0, -2.0}), TimeProfile::polynomial({1.0, 1.0}), 0.25);
    EXPECT_EQ(f.kind(), SourceKind::SeparableModal);
    EXPECT_TRUE(f.mode_active(0));
    EXPECT_FALSE(f.mode_active(1));
    EXPECT_DOUBLE_EQ(f.coefficient(2, 0.5), -3.0);
    EXPECT_DOUBLE_EQ(f.mode_function(0)(2.0), 3.0);
    EXPECT_TRUE(std::isinf(f.horizon()));
    // max_t ||f(t)||_eps at t = 1: (1 + 9^{0.5} * 4)^{1/2} * 2.
    EXPECT_NEAR(f.max_norm(op, 0.25, 1.0), 2.0 * std::sqrt(1.0 + 3.0 * 4.0), 1e-14);
    EXPECT_THROW(SourceTerm::separable(SpectralVector({1.0}), TimeProfile::constant(1.0), 1.0), Error);
}

TEST(Source, ModeFunctionOutlivesSource) {
    std::function<double(double)> h;
    {
        const auto f = SourceTerm::separable(SpectralVector({2.0}), TimeProfile::constant(3.0));
        h = f.mode_function(0);
    }
    EXPECT_DOUBLE_EQ(h(0.7), 6.0);
}

TEST(Source, SampledInterpolatesMonotoneData) {
    std::vector<double> times;
    std::vector<SpectralVector> values;
    for (int i = 0; i <= 8; ++i) {
        const double t = 0.125 * i;
        times.push_back(t);
        values.push_back(SpectralVector({t, t * t}));
    }
    const auto f = SourceTerm::sampled(times, values);
    EXPECT_EQ(f.kind(), SourceKind::Sampled);
    EXPECT_DOUBLE_EQ(f.horizon(), 1.0);
    EXPECT_NEAR(f.coefficient(0, 0.3), 0.3, 1e-12);
    EXPECT_NEAR(f.coefficient(1, 0.3), 0.09, 2e-3);
    EXPECT_DOUBLE_EQ(f.coefficient(1, 0.5), 0.25);
    for (int i = 0; i < 100; ++i) EXPECT_LE(f.coefficient(1, i / 100.0), f.coefficient(1, (i + 1) / 100.0));
    EXPECT_THROW(f.coefficient(0, 1.5), Error);
}

TEST(Source, SampledValidation) {
    const std::vector<SpectralVector> v(4, SpectralVector({1.0}));
    EXPECT_THROW(SourceTerm::sampled({0, 1, 2}, {v.begin(), v.begin() + 3}), Error);
    EXPECT_THROW(SourceTerm::sampled({0.1, 1, 2, 3}, v), Error);
    EXPECT_THROW(SourceTerm::sampled({0, 1, 1, 3}, v), Error);
    EXPECT_THROW(SourceTerm::sampled({0, 1, 2, 3}, {SpectralVector({1.0}), SpectralVector({1.0}), SpectralVector({1.0}),
                                                      SpectralVector({1.0, 2.0})}),
                 Error);
}
