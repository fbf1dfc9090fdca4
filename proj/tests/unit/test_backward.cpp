#include "fractoback/backward.hpp"
#include "fractoback/error.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace fractoback;

namespace {
const auto kTwoTerm = FractionalOrders::make({0.8, 0.4}, {1, 1});

double rel(const SpectralVector& a, const SpectralVector& b) {
    return fractional_norm(DiagonalOperator::diagonal(std::vector<double>(a.size(), 1.0)), a - b, 0.0) /
           fractional_norm(DiagonalOperator::diagonal(std::vector<double>(b.size(), 1.0)), b, 0.0);
}

SpectralVector at_T(const DiagonalOperator& op, const SpectralVector& phi, const SourceTerm& f, double T) {
    const double t[] = {T};
    return forward_solve(op, kTwoTerm, phi, f, t).states[0];
}
}  // namespace

TEST(Denominator, LimitsAndErfc) {
    EXPECT_NEAR(denominator(kTwoTerm, 1e-12, 1.0), 1.0, 1e-10);
    EXPECT_NEAR(denominator(FractionalOrders::single(0.5), 1.0, 1.0), 0.4275836, 5e-8);
    EXPECT_THROW(denominator(kTwoTerm, 1.0, 0.0), Error);
}

TEST(Denominator, LargeLambdaAsymptote) {
    // D lambda T^rho1 -> sum_j q_j T^{rho1 - rho_j} / Gamma(1 - rho_j).
    for (double T : {0.5, 2.0}) {
        const double limit = 1.0 / std::tgamma(0.2) + std::pow(T, 0.4) / std::tgamma(0.6);
        for (double lambda : {1e4, 1e5, 1e6}) {
            const double scaled = denominator(kTwoTerm, lambda, T) * lambda * std::pow(T, 0.8);
            EXPECT_NEAR(scaled / limit, 1.0, 50.0 / (lambda * std::pow(T, 0.8))) << T << " " << lambda;
        }
    }
}

TEST(Homogeneous, SingleModeInversion) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(4);
    const double d1 = denominator(kTwoTerm, 1.0, 1.0);
    const BackwardProblem p{op, kTwoTerm, 1.0, d1 * SpectralVector::unit(4, 1), SourceTerm::zero(4)};
    const auto r = backward_solve_homogeneous(p);
    EXPECT_NEAR(r.phi_hat[0], 1.0, 1e-15);
    for (std::size_t k = 1; k < 4; ++k) EXPECT_EQ(r.phi_hat[k], 0.0);
    EXPECT_NEAR(r.amplification[0] * r.denominators[0], 1.0, 1e-15);
}

TEST(Homogeneous, RefusesSource) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(2);
    const BackwardProblem p{op, kTwoTerm, 1.0, SpectralVector({1, 1}),
                            SourceTerm::separable(SpectralVector({1, 0}), TimeProfile::constant(1))};
    EXPECT_THROW(backward_solve_homogeneous(p), Error);
}

TEST(Backward, ZeroSourceMatchesHomogeneous) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(8);
    const BackwardProblem p{op, kTwoTerm, 1.0, random_band_limited(8, 8, 3), SourceTerm::zero(8)};
    const auto a = backward_solve(p);
    const auto b = backward_solve_homogeneous(p);
    for (std::size_t k = 0; k < 8; ++k) EXPECT_EQ(a.phi_hat[k], b.phi_hat[k]);
}

TEST(Backward, SourceOnlyDataGivesZero) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(8);
    const auto f = SourceTerm::separable(SpectralVector({1, 0.5, 0, 0.25, 0, 0, 0, 0.1}), TimeProfile::polynomial({1, 1}));
    const auto Phi = at_T(op, SpectralVector::zeros(8), f, 1.0);
    const auto r = backward_solve({op, kTwoTerm, 1.0, Phi, f});
    for (std::size_t k = 0; k < 8; ++k) EXPECT_NEAR(r.phi_hat[k], 0.0, 1e-8);
}

TEST(Backward, RoundTripN32) {
    const std::size_t n = 32;
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(n);
    const auto phi = random_band_limited(n, n, 2024);
    const auto f = SourceTerm::separable(random_band_limited(n, 6, 5), TimeProfile::exponential(1.0, -0.5));
    const auto Phi = at_T(op, phi, f, 1.0);
    const auto r = backward_solve({op, kTwoTerm, 1.0, Phi, f});
    EXPECT_LE(rel(r.phi_hat, phi), 1e-6);
    EXPECT_LE(rel(at_T(op, r.phi_hat, f, 1.0), Phi), 1e-8);
}

TEST(Backward, RehitsArbitraryFinalData) {
    const std::size_t n = 32;
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(n);
    const auto Phi = random_band_limited(n, n, 77);
    const auto r = backward_solve({op, kTwoTerm, 1.0, Phi, SourceTerm::zero(n)});
    EXPECT_LE(rel(at_T(op, r.phi_hat, SourceTerm::zero(n), 1.0), Phi), 1e-8);
}

TEST(Backward, Preconditions) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(3);
    EXPECT_THROW(backward_solve({op, kTwoTerm, 1.0, SpectralVector({1, 2}), SourceTerm::zero(3)}), Error);
    EXPECT_THROW(backward_solve({op, kTwoTerm, -1.0, SpectralVector({1, 2, 3}), SourceTerm::zero(3)}), Error);
    EXPECT_THROW(PrioriBound::make(0.0, 1.0), Error);
    EXPECT_THROW(PrioriBound::make(0.5, -1.0), Error);
}

TEST(RandomBandLimited, DeterministicAndBanded) {
    const auto a = random_band_limited(10, 4, 42);
    const auto b = random_band_limited(10, 4, 42);
    for (std::size_t k = 0; k < 10; ++k) EXPECT_EQ(a[k], b[k]);
    for (std::size_t k = 4; k < 10; ++k) EXPECT_EQ(a[k], 0.0);
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_GE(a[k], -1.0);
        EXPECT_LT(a[k], 1.0);
    }
    EXPECT_NE(random_band_limited(10, 4, 43)[0], a[0]);
}

TEST(Illposedness, Demo) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(32);
    const auto rep = illposedness_demo(op, kTwoTerm, 1.0);
    EXPECT_TRUE(rep.flag("Phi_norm_decreasing"));
    EXPECT_TRUE(rep.flag("u0_norm_increasing"));
    EXPECT_TRUE(rep.flag("Phi_norm1_increasing"));
    EXPECT_NEAR(rep.constant("amplification_slope"), 1.0, 0.05);
    const auto& t = rep.table("modes");
    ASSERT_EQ(t.rows.size(), 32u);
    // ||Phi||_1 = lambda_k^eps.
    EXPECT_NEAR(t.rows[9][3], std::pow(100.0, 0.1), 1e-13);
}

TEST(Illposedness, NoiseImageGrows) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(16);
    IllposednessOptions o;
    o.k_max = 16;
    o.noise = 1e-6;
    const auto rep = illposedness_demo(op, kTwoTerm, 1.0, o);
    const auto& t = rep.table("modes");
    ASSERT_EQ(t.columns.back(), "noise_image");
    EXPECT_GT(t.rows.back().back(), 100.0 * t.rows.front().back());
}

TEST(Illposedness, RangeChecked) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(8);
    EXPECT_THROW(illposedness_demo(op, kTwoTerm, 1.0), Error);
}

TEST(TwoSided, RatiosInsideSpectralBounds) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(16);
    const auto rep = two_sided_estimate(op, kTwoTerm, 1.0, 40, 9);
    EXPECT_TRUE(rep.flag("ratios_positive"));
    EXPECT_TRUE(rep.flag("within_spectral_bounds"));
    EXPECT_LE(rep.constant("ratio_min"), rep.constant("ratio_max"));
    const auto again = two_sided_estimate(op, kTwoTerm, 1.0, 40, 9);
    EXPECT_EQ(rep.constant("ratio_max"), again.constant("ratio_max"));
}

TEST(Stability, SingleModeClosedForm) {
    // phi = e_1, f = 0, B0 = lambda_1^eps: Q = 1 / (D_1^{eps/(1+eps)}).
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(4);
    const auto bound = PrioriBound::make(0.5, 1.0);
    const auto rep = conditional_stability_check(op, kTwoTerm, 1.0, bound,
                                                 {{SpectralVector::unit(4, 1), SourceTerm::zero(4)}});
    const double d = denominator(kTwoTerm, 1.0, 1.0);
    EXPECT_NEAR(rep.constant("sup_Q_enlarged"), std::pow(d, -0.5 / 1.5), 1e-12);
    EXPECT_TRUE(rep.flag("scale_invariant"));
}

TEST(Stability, HighModesStayBounded) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(64);
    const auto bound = PrioriBound::make(0.5, 1.0);
    std::vector<StabilityCase> cases;
    for (std::size_t k : {1, 4, 16, 64}) {
        cases.push_back({std::pow(op.eigenvalue(k - 1), -0.5) * SpectralVector::unit(64, k), SourceTerm::zero(64)});
    }
    const auto rep = conditional_stability_check(op, kTwoTerm, 1.0, bound, cases);
    const auto& t = rep.table("cases");
    for (const auto& row : t.rows) EXPECT_LT(row[3], 5.0);
    EXPECT_TRUE(rep.flag("Q_finite"));
}

TEST(Stability, RejectsBoundViolation) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(4);
    try {
        conditional_stability_check(op, kTwoTerm, 1.0, PrioriBound::make(0.5, 1.0),
                                    {{SpectralVector::unit(4, 3), SourceTerm::zero(4)}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PrioriViolation);
    }
}

TEST(Stability, FamilyIsDeterministicAndAdmissible) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(16);
    const auto bound = PrioriBound::make(0.5, 2.0);
    const auto a = stability_family(op, bound, 30, 5);
    const auto b = stability_family(op, bound, 30, 5);
    ASSERT_EQ(a.size(), 30u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_LE(fractional_norm(op, a[i].phi, 0.5), 2.0 * (1 + 1e-12));
        for (std::size_t k = 0; k < 16; ++k) EXPECT_EQ(a[i].phi[k], b[i].phi[k]);
    }
}
