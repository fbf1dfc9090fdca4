#include "fractoback/error.hpp"
#include "fractoback/mlf.hpp"
#include "fractoback/verification/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace fractoback;
namespace ver = fractoback::verification;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no fractoback::Error thrown";
    return ErrorKind::Io;
}

}  // namespace

TEST(Params, RejectsBadOrders) {
    EXPECT_EQ(kind_of([] { FractionalOrders::make({0.4, 0.8}, {1, 1}); }), ErrorKind::InvalidParams);
    EXPECT_EQ(kind_of([] { FractionalOrders::make({0.8, 0.8}, {1, 1}); }), ErrorKind::InvalidParams);
    EXPECT_EQ(kind_of([] { FractionalOrders::make({0.8, 0.4}, {2, 1}); }), ErrorKind::InvalidParams);
    EXPECT_EQ(kind_of([] { FractionalOrders::make({0.8, 0.4}, {1, 0}); }), ErrorKind::InvalidParams);
    EXPECT_EQ(kind_of([] { FractionalOrders::make({0.8}, {1, 1}); }), ErrorKind::InvalidParams);
    EXPECT_EQ(kind_of([] { FractionalOrders::single(1.0); }), ErrorKind::InvalidParams);
    EXPECT_NO_THROW(FractionalOrders::single(1.0, OrderDomain::ClassicalLimit));
    EXPECT_EQ(kind_of([] { FractionalOrders::make({1.0, 0.5}, {1, 1}, OrderDomain::ClassicalLimit); }),
              ErrorKind::InvalidParams);
}

TEST(Params, KernelIndices) {
    const auto o = FractionalOrders::make({0.9, 0.6, 0.3}, {1, 0.5, 0.25});
    const auto b = o.kernel_indices();
    ASSERT_EQ(b.size(), 3u);
    EXPECT_DOUBLE_EQ(b[0], 0.9);
    EXPECT_NEAR(b[1], 0.3, 1e-15);
    EXPECT_NEAR(b[2], 0.6, 1e-15);
}

TEST(Params, ArgumentsMustBeNonpositive) {
    EXPECT_EQ(kind_of([] { MLArguments::make({0.1}); }), ErrorKind::InvalidParams);
    EXPECT_EQ(kind_of([] { MLArguments::make({-1, NAN}); }), ErrorKind::InvalidParams);
    EXPECT_EQ(kind_of([] { MLParams::make(0.0, {0.5}); }), ErrorKind::InvalidParams);
    EXPECT_EQ(kind_of([] { MLParams::make(1.0, {1.0}); }), ErrorKind::InvalidParams);
}

TEST(Series, ZeroArgumentIsReciprocalGamma) {
    EXPECT_DOUBLE_EQ(mlf::series(MLParams::make(1.0, {0.5}), MLArguments::make({0.0})).value, 1.0);
    const auto p = MLParams::make(1.8, {0.8, 0.4});
    EXPECT_NEAR(mlf::series(p, MLArguments::make({0.0, 0.0})).value, 1.0 / std::tgamma(1.8), 1e-15);
    EXPECT_NEAR(mlf::eval(p, MLArguments::make({0.0, 0.0})).value, 1.0 / std::tgamma(1.8), 1e-15);
}

TEST(Series, UnitIndexIsExponential) {
    const auto p = MLParams::make(1.0, {1.0}, OrderDomain::ClassicalLimit);
    EXPECT_NEAR(mlf::series(p, MLArguments::make({-1.0})).value, std::exp(-1.0), 1e-15);
    EXPECT_NEAR(mlf::eval(p, MLArguments::make({-1.0})).value, 0.36787944117144233, 1e-15);
}

TEST(Series, HalfOrderMatchesErfc) {
    const auto p = MLParams::make(1.0, {0.5});
    const auto r = mlf::series(p, MLArguments::make({-1.0}));
    EXPECT_LT(rel(r.value, ver::erfc_identity(-1.0)), 1e-13);
    EXPECT_NEAR(r.value, 0.4275836, 5e-8);
    EXPECT_EQ(r.method, mlf::Method::Series);
}

TEST(Series, ReportsNonConvergence) {
    mlf::SeriesOptions o;
    o.max_shells = 5;
    EXPECT_EQ(kind_of([&] { mlf::series(MLParams::make(1.0, {0.5}), MLArguments::make({-3.0}), o); }),
              ErrorKind::NoConvergence);
}

TEST(Series, MultinomialAgreesWithInversion) {
    const auto p = MLParams::make(1.8, {0.8, 0.4});
    for (double z1 : {-0.1, -0.4, -0.8}) {
        const auto a = MLArguments::make({z1, -0.2});
        EXPECT_LT(rel(mlf::series(p, a).value, ver::multinomial_by_inversion(p, a)), 1e-12) << z1;
    }
}

TEST(Asymptotic, OneTermSubstitution) {
    const auto r = mlf::asymptotic(MLParams::make(1.9, {0.8}), MLArguments::make({-1e6}), 1);
    EXPECT_LT(rel(r.value, 1e-6 / std::tgamma(1.1)), 1e-14);
    EXPECT_EQ(r.method, mlf::Method::Asymptotic);
}

TEST(Asymptotic, LeadingTermOfRelaxationIndex) {
    // beta0 = rho1 + 1: the first term is 1/(lambda T^rho1) / Gamma(1).
    const auto p = MLParams::make(1.8, {0.8, 0.4});
    const double x = 1e7;
    const auto r = mlf::asymptotic(p, MLArguments::make({-x, -1.0}), 1);
    EXPECT_LT(rel(r.value, 1.0 / x), 1e-14);
}

TEST(Asymptotic, TwoTermMatchesReferenceAtThousand) {
    const auto p = MLParams::make(1.8, {0.8, 0.4});
    const auto a = MLArguments::make({-1e3, -1.0});
    EXPECT_LT(rel(mlf::asymptotic(p, a, 2).value, ver::multinomial_by_inversion(p, a)), 1e-4);
}

TEST(Asymptotic, RejectsSmallArgumentAndBadTerms) {
    const auto p = MLParams::make(1.8, {0.8});
    EXPECT_EQ(kind_of([&] { mlf::asymptotic(p, MLArguments::make({-1.0}), 2); }), ErrorKind::SmallArgument);
    EXPECT_EQ(kind_of([&] { mlf::asymptotic(p, MLArguments::make({-100.0}), 3); }), ErrorKind::InvalidOrder);
}

TEST(Eval, ErfcIdentityAtMinusFour) {
    const auto r = mlf::eval(MLParams::make(1.0, {0.5}), MLArguments::make({-4.0}));
    EXPECT_LT(rel(r.value, ver::erfc_identity(-4.0)), 1e-12);
    EXPECT_NEAR(r.value, 0.13699946, 5e-8);
}

TEST(Eval, SwitchBoundaryConsistency) {
    // The two-term expansion carries an O(|z1|^-2) relative remainder.
    const auto p = MLParams::make(1.8, {0.8, 0.4});
    const auto at = [&](double z1) {
        const auto a = MLArguments::make({z1, -1.0});
        return rel(mlf::asymptotic(p, a, 2).value, mlf::eval(p, a).value);
    };
    EXPECT_LT(at(-mlf::EvalConfig{}.z_switch), 1e-3);
    EXPECT_LT(at(-1e3), 1e-6);
    EXPECT_LT(at(-1e4), 1e-8);
}

TEST(Eval, DispatchesByRegime) {
    const auto p = MLParams::make(1.8, {0.8, 0.4});
    EXPECT_EQ(mlf::eval(p, MLArguments::make({-0.3, -0.1})).method, mlf::Method::Series);
    EXPECT_EQ(mlf::eval(p, MLArguments::make({-30.0, -1.0})).method, mlf::Method::Contour);
    EXPECT_EQ(mlf::eval(p, MLArguments::make({-1e12, -1.0})).method, mlf::Method::Asymptotic);
    EXPECT_EQ(mlf::eval(MLParams::make(2.0, {1.0}, OrderDomain::ClassicalLimit), MLArguments::make({-3.0})).method,
              mlf::Method::ClosedForm);
}

TEST(Eval, ContinuousAcrossSeriesReach) {
    const auto p = MLParams::make(1.4, {0.4});
    const double lo = mlf::eval(p, MLArguments::make({-1.0})).value;
    mlf::EvalConfig wide;
    wide.series_reach = 0.0;
    const double hi = mlf::eval(p, MLArguments::make({-1.0}), wide).value;
    EXPECT_LT(rel(lo, hi), 1e-13);
}

TEST(Eval, ClassicalSeriesOracleOnGrid) {
    for (auto [rho, beta] : {std::pair{ver::Rational{3, 10}, ver::Rational{13, 10}}, {ver::Rational{4, 5}, ver::Rational{4, 5}}}) {
        const auto p = MLParams::make(beta.value(), {rho.value()});
        for (double z = -10.0; z <= 0.0; z += 1.25) {
            EXPECT_LT(rel(mlf::eval(p, MLArguments::make({z})).value, ver::classical_mittag_leffler(rho, beta, z)), 1e-10)
                << rho.value() << " " << beta.value() << " " << z;
        }
    }
}

TEST(Eval, CompletelyMonotoneDecay) {
    // E_{rho,1}(-x) decreases in x for 0 < rho < 1.
    const auto p = MLParams::make(1.0, {0.6});
    double prev = 1.0;
    for (double x = 0.5; x < 1e5; x *= 1.7) {
        const double v = mlf::eval(p, MLArguments::make({-x})).value;
        EXPECT_GT(v, 0.0);
        EXPECT_LT(v, prev);
        prev = v;
    }
}

TEST(Eval, ArgumentCountMismatch) {
    EXPECT_EQ(kind_of([] { mlf::eval(MLParams::make(1.0, {0.5}), MLArguments::make({-1.0, -1.0})); }),
              ErrorKind::InvalidParams);
}

TEST(ReciprocalGamma, PolesAndValues) {
    EXPECT_EQ(mlf::reciprocal_gamma(0.0), 0.0);
    EXPECT_EQ(mlf::reciprocal_gamma(-3.0), 0.0);
    EXPECT_NEAR(mlf::reciprocal_gamma(0.5), 1.0 / std::sqrt(M_PI), 1e-15);
    EXPECT_NEAR(mlf::reciprocal_gamma(-0.5), -0.5 / std::sqrt(M_PI), 1e-15);
}
