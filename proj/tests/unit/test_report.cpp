#include "fractoback/error.hpp"
#include "fractoback/report.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

using namespace fractoback;

TEST(Report, ConstantsAndFlags) {
    EvalReport r;
    r.set_constant("a", 1.5);
    r.set_constant("a", 2.5);
    r.set_flag("ok", true);
    EXPECT_EQ(r.constants.size(), 1u);
    EXPECT_EQ(r.constant("a"), 2.5);
    EXPECT_TRUE(r.all_pass());
    r.set_flag("bad", false);
    EXPECT_FALSE(r.all_pass());
    EXPECT_THROW(r.constant("missing"), std::out_of_range);
    EXPECT_THROW(r.flag("missing"), std::out_of_range);
    EXPECT_THROW(r.table("missing"), std::out_of_range);
}

TEST(Report, MergePrefixes) {
    EvalReport a, b;
    b.set_constant("x", 1.0);
    b.set_flag("f", true);
    b.tables.push_back({"t", {"c"}, {{1.0}}});
    b.notes.push_back("n");
    a.merge(b, "sub.");
    EXPECT_EQ(a.constant("sub.x"), 1.0);
    EXPECT_TRUE(a.flag("sub.f"));
    EXPECT_EQ(a.table("sub.t").rows.size(), 1u);
    EXPECT_EQ(a.notes.front(), "sub.n");
}

TEST(Fit, LogLogSlope) {
    const std::vector<double> x = {1, 10, 100, 1000};
    std::vector<double> y;
    for (double v : x) y.push_back(3.0 * std::pow(v, -2.0));
    const auto fit = fit_loglog(x, y);
    EXPECT_NEAR(fit.slope, -2.0, 1e-14);
    EXPECT_NEAR(std::exp(fit.intercept), 3.0, 1e-13);
    EXPECT_THROW(fit_loglog(std::vector<double>{1, 2}, std::vector<double>{1}), Error);
    EXPECT_THROW(fit_loglog(std::vector<double>{1, 2}, std::vector<double>{1, -1}), Error);
}

TEST(Fit, HalvingOrders) {
    const auto o = halving_orders(std::vector<double>{1.0, 0.25, 0.0625});
    ASSERT_EQ(o.size(), 2u);
    EXPECT_DOUBLE_EQ(o[0], 2.0);
    EXPECT_DOUBLE_EQ(o[1], 2.0);
}
