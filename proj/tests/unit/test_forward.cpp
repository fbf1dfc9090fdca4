#include "fractoback/error.hpp"
#include "fractoback/forward.hpp"
#include "fractoback/verification/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace fractoback;
namespace ver = fractoback::verification;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
const auto kTwoTerm = FractionalOrders::make({0.8, 0.4}, {1, 1});
}  // namespace

TEST(Convolution, ZeroSourceAndZeroTime) {
    const auto zero = [](double) { return 0.0; };
    EXPECT_EQ(convolve_source(kTwoTerm, 4.0, zero, 1.0).value, 0.0);
    const auto one = [](double) { return 1.0; };
    EXPECT_EQ(convolve_source(kTwoTerm, 4.0, one, 0.0).value, 0.0);
}

TEST(Convolution, ClassicalDuhamel) {
    const auto o = FractionalOrders::single(1.0, OrderDomain::ClassicalLimit);
    for (double lambda : {1.0, 25.0, 900.0}) {
        for (double t : {0.01, 0.3, 1.0}) {
            const auto r = convolve_source(o, lambda, [](double) { return 2.0; }, t);
            EXPECT_LT(rel(r.value, ver::duhamel_constant(2.0, lambda, t)), 1e-8) << lambda << " " << t;
        }
    }
}

TEST(Convolution, ConstantSourceIsOneMinusRelaxation) {
    // (1 * kernel)(t) = (1 - omega(t)) / lambda.
    for (double lambda : {0.5, 16.0, 1e4}) {
        const auto r = convolve_source(kTwoTerm, lambda, [](double) { return 1.0; }, 1.0);
        EXPECT_LT(rel(r.value, (1.0 - relaxation(kTwoTerm, lambda, 1.0)) / lambda), 1e-10) << lambda;
        EXPECT_GT(r.kernel_evaluations, 0u);
    }
}

TEST(Convolution, MonomialOracle) {
    for (int m : {1, 2}) {
        for (double lambda : {1.0, 100.0}) {
            const auto r = convolve_source(kTwoTerm, lambda, [m](double s) { return std::pow(s, m); }, 0.7);
            EXPECT_LT(rel(r.value, ver::monomial_response(kTwoTerm, lambda, m, 0.7)), 1e-9) << m << " " << lambda;
        }
    }
}

TEST(Convolution, UniformMeshWithoutRefinementIsCoarser) {
    QuadratureOptions q;
    q.mesh = MeshKind::Uniform;
    q.adaptive = false;
    q.nodes = 5;
    const auto f = [](double) { return 1.0; };
    const double exact = (1.0 - relaxation(kTwoTerm, 50.0, 1.0)) / 50.0;
    const double coarse = convolve_source(kTwoTerm, 50.0, f, 1.0, q).value;
    const double fine = convolve_source(kTwoTerm, 50.0, f, 1.0).value;
    EXPECT_GT(std::abs(coarse - exact), std::abs(fine - exact));
}

TEST(Convolution, RejectsBadOptions) {
    QuadratureOptions q;
    q.nodes = 6;
    EXPECT_THROW(convolve_source(kTwoTerm, 1.0, [](double) { return 1.0; }, 1.0, q), Error);
    q = {};
    q.grading_ratio = 1.5;
    EXPECT_THROW(convolve_source(kTwoTerm, 1.0, [](double) { return 1.0; }, 1.0, q), Error);
}

TEST(Convolution, ReportsQuadratureFailure) {
    QuadratureOptions q;
    q.max_depth = 0;
    q.abs_tol = 0.0;
    q.rel_tol = 0.0;
    try {
        convolve_source(kTwoTerm, 1.0, [](double s) { return std::sin(50 * s); }, 1.0, q);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::QuadratureFailure);
    }
}

TEST(Forward, SingleModeAction) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(3);
    const double times[] = {0.0, 0.1, 1.0};
    const auto r = forward_solve(op, kTwoTerm, SpectralVector::unit(3, 1), SourceTerm::zero(3), times);
    ASSERT_EQ(r.states.size(), 3u);
    EXPECT_EQ(r.states[0][0], 1.0);
    for (std::size_t i = 1; i < 3; ++i) {
        EXPECT_DOUBLE_EQ(r.states[i][0], relaxation(kTwoTerm, 1.0, times[i]));
        EXPECT_EQ(r.states[i][1], 0.0);
        EXPECT_EQ(r.states[i][2], 0.0);
    }
}

TEST(Forward, InitialConditionWithSource) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(4);
    const SpectralVector phi({1, -2, 3, 0.5});
    const auto f = SourceTerm::separable(SpectralVector({1, 1, 1, 1}), TimeProfile::constant(5.0));
    const double times[] = {0.0};
    const auto r = forward_solve(op, kTwoTerm, phi, f, times);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(r.states[0][k], phi[k]);
}

TEST(Forward, HeatSemigroup) {
    const auto o = FractionalOrders::single(1.0, OrderDomain::ClassicalLimit);
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(16);
    const SpectralVector phi(std::vector<double>(16, 1.0));
    const double times[] = {0.01, 0.5};
    const auto r = forward_solve(op, o, phi, SourceTerm::zero(16), times);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t k = 0; k < 16; ++k) {
            EXPECT_NEAR(r.states[i][k], std::exp(-op.eigenvalue(k) * times[i]), 1e-8);
        }
    }
}

TEST(Forward, Linearity) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(6);
    const SpectralVector a({1, 0, 2, 0, 0, 1}), b({0, 3, 0, 1, 1, 0});
    const auto f = SourceTerm::separable(SpectralVector({1, 2, 0, 0, 0, 1}), TimeProfile::polynomial({0, 1}));
    const double times[] = {0.3, 1.0};
    const auto ua = forward_solve(op, kTwoTerm, a, f, times);
    const auto ub = forward_solve(op, kTwoTerm, b, SourceTerm::zero(6), times);
    const auto uab = forward_solve(op, kTwoTerm, a + 2.0 * b, f, times);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t k = 0; k < 6; ++k) {
            EXPECT_NEAR(uab.states[i][k], ua.states[i][k] + 2.0 * ub.states[i][k], 1e-13);
        }
    }
}

TEST(Forward, NormsMatchStates) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(3);
    const double times[] = {0.5};
    const auto r = forward_solve(op, kTwoTerm, SpectralVector({1, 1, 1}), SourceTerm::zero(3), times);
    EXPECT_DOUBLE_EQ(r.norm1[0], fractional_norm(op, r.states[0], 1.0));
    EXPECT_DOUBLE_EQ(r.norm0[0], fractional_norm(op, r.states[0], 0.0));
}

TEST(Forward, SampledSourceMatchesAnalytic) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(2);
    std::vector<double> ts;
    std::vector<SpectralVector> vs;
    for (int i = 0; i <= 200; ++i) {
        ts.push_back(i / 200.0);
        vs.push_back(SpectralVector({1.0, 0.5}));
    }
    const auto sampled = SourceTerm::sampled(ts, vs);
    const auto analytic = SourceTerm::separable(SpectralVector({1.0, 0.5}), TimeProfile::constant(1.0));
    const double times[] = {1.0};
    const auto a = forward_solve(op, kTwoTerm, SpectralVector::zeros(2), sampled, times);
    const auto b = forward_solve(op, kTwoTerm, SpectralVector::zeros(2), analytic, times);
    EXPECT_NEAR(a.states[0][0], b.states[0][0], 1e-12);
    EXPECT_NEAR(a.states[0][1], b.states[0][1], 1e-12);
    const double past[] = {1.5};
    EXPECT_THROW(forward_solve(op, kTwoTerm, SpectralVector::zeros(2), sampled, past), Error);
}

TEST(Forward, Preconditions) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(3);
    const double unsorted[] = {0.5, 0.1};
    EXPECT_THROW(forward_solve(op, kTwoTerm, SpectralVector::zeros(3), SourceTerm::zero(3), unsorted), Error);
    const double ok[] = {0.5};
    EXPECT_THROW(forward_solve(op, kTwoTerm, SpectralVector::zeros(2), SourceTerm::zero(3), ok), Error);
}

TEST(Smoothing, SingleModeRatioBounded) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(4);
    const auto phi = SpectralVector::unit(4, 1);
    const auto times = geometric_time_grid(1.0, 30, 1e-6);
    const auto r = forward_solve(op, kTwoTerm, phi, SourceTerm::zero(4), times);
    const auto rep = smoothing_check(r, op, kTwoTerm, phi, SourceTerm::zero(4), 0.5);
    EXPECT_TRUE(rep.flag("sup_finite"));
    EXPECT_TRUE(rep.flag("no_growth_near_zero"));
    // R(t) = lambda_1 omega(t) / sum_j t^{-rho_j}.
    const auto& tab = rep.table("ratio");
    const double t = tab.rows.back()[0];
    const double expected = relaxation(kTwoTerm, 1.0, t) / (std::pow(t, -0.8) + std::pow(t, -0.4));
    EXPECT_NEAR(tab.rows.back()[3], expected, 1e-14);
}

TEST(Smoothing, SourceOnlyConstantFinite) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(8);
    const auto f = SourceTerm::separable(SpectralVector::unit(8, 1), TimeProfile::constant(1.0));
    const auto times = geometric_time_grid(1.0, 12, 1e-4);
    const auto r = forward_solve(op, kTwoTerm, SpectralVector::zeros(8), f, times);
    const auto rep = smoothing_check(r, op, kTwoTerm, SpectralVector::zeros(8), f, 0.5);
    EXPECT_TRUE(std::isfinite(rep.constant("sup_R")));
    EXPECT_TRUE(rep.flag("sup_finite"));
}

TEST(Grid, Geometric) {
    const auto g = geometric_time_grid(2.0, 5, 1e-3);
    ASSERT_EQ(g.size(), 5u);
    EXPECT_DOUBLE_EQ(g.front(), 1e-3);
    EXPECT_DOUBLE_EQ(g.back(), 2.0);
    EXPECT_THROW(geometric_time_grid(1.0, 5, 2.0), Error);
}
