#include "fractoback/app/config.hpp"
#include "fractoback/app/presets.hpp"
#include "fractoback/error.hpp"
#include "fractoback/verification/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace fractoback;
using namespace fractoback::app;

TEST(Presets, ListContainsModePreset) {
    const auto list = list_presets();
    ASSERT_FALSE(list.empty());
    bool found = false;
    for (const auto& p : list) found = found || p.name.rfind("mode:", 0) == 0;
    EXPECT_TRUE(found);
}

TEST(Presets, EveryListedPresetParsesThroughConfig) {
    for (const auto& p : list_presets()) {
        const std::string yaml = p.kind == "state" ? "data:\n  initial: \"" + p.name + "\"\n"
                                                   : "source:\n  spatial: mode:1\n  profile: \"" + p.name + "\"\n";
        EXPECT_NO_THROW(parse_config(yaml, p.name)) << p.name;
    }
}

TEST(Presets, PolyMatchesProjection) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(24);
    const auto g = make_state("poly", op, 0);
    const auto grid = preset_grid(24);
    std::vector<double> samples;
    for (double x : grid.points()) samples.push_back(x * (std::numbers::pi - x));
    const auto direct = project(op, grid, samples);
    for (int k = 1; k <= 24; ++k) {
        EXPECT_EQ(g[k - 1], direct[k - 1]);
        EXPECT_NEAR(g[k - 1], verification::parabola_coefficient(k), 1e-8) << k;
    }
}

TEST(Presets, StateShapes) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(6);
    EXPECT_EQ(make_state("mode:3", op, 0)[2], 1.0);
    EXPECT_DOUBLE_EQ(make_state("decay:2", op, 0)[2], 1.0 / 9.0);
    const auto c = make_state("coeffs:1,-2", op, 0);
    EXPECT_EQ(c[1], -2.0);
    EXPECT_EQ(c[5], 0.0);
    EXPECT_EQ(make_state("random:3", op, 5)[4], 0.0);
    EXPECT_EQ(make_state("random:3", op, 5)[0], make_state("random:3", op, 5)[0]);
    const auto bump = make_state("bump", op, 0);
    EXPECT_GT(bump[0], 0.0);
    EXPECT_NEAR(bump[1], 0.0, 1e-12);  // symmetric about pi/2
}

TEST(Presets, Rejections) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(4);
    EXPECT_THROW(make_state("mode:0", op, 0), Error);
    EXPECT_THROW(make_state("mode:x", op, 0), Error);
    EXPECT_THROW(make_state("random:5", op, 0), Error);
    EXPECT_THROW(make_state("coeffs:1,2,3,4,5", op, 0), Error);
    EXPECT_THROW(make_state("wave", op, 0), Error);
    EXPECT_THROW(make_state("poly", DiagonalOperator::diagonal({1, 2}), 0), Error);
    EXPECT_THROW(make_profile("linear:1"), Error);
    EXPECT_THROW(make_profile("exp:"), Error);
    EXPECT_THROW(make_profile("sine:1"), Error);
}

TEST(Presets, Profiles) {
    EXPECT_DOUBLE_EQ(make_profile("const:2")(5.0), 2.0);
    EXPECT_DOUBLE_EQ(make_profile("linear:1,3")(2.0), 7.0);
    EXPECT_DOUBLE_EQ(make_profile("poly:0,0,1")(3.0), 9.0);
    EXPECT_NEAR(make_profile("exp:-1")(1.0), std::exp(-1.0), 1e-16);
    EXPECT_NEAR(make_profile("exp:2,-1")(1.0), 2 * std::exp(-1.0), 1e-16);
}

TEST(Presets, SampledSourceTracksAnalytic) {
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(4);
    SourceSpec spec;
    spec.spatial = "coeffs:1,0.5";
    spec.profile = "exp:-1";
    const auto analytic = make_source(spec, op, 1.0, 0);
    spec.sampled = 101;
    const auto sampled = make_source(spec, op, 1.0, 0);
    EXPECT_EQ(sampled.kind(), SourceKind::Sampled);
    EXPECT_NEAR(sampled.coefficient(0, 0.333), analytic.coefficient(0, 0.333), 1e-5);
    spec.sampled = 0;
    spec.spatial = "zero";
    EXPECT_EQ(make_source(spec, op, 1.0, 0).kind(), SourceKind::Zero);
}
