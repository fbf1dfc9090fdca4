#pragma once

#include <boost/math/policies/policy.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace fractoback::detail {

// Overflow and poles are handled by the callers (1/Gamma -> 0).
using quiet_policy = boost::math::policies::policy<
    boost::math::policies::overflow_error<boost::math::policies::ignore_error>,
    boost::math::policies::underflow_error<boost::math::policies::ignore_error>,
    boost::math::policies::pole_error<boost::math::policies::ignore_error>,
    boost::math::policies::evaluation_error<boost::math::policies::ignore_error>,
    boost::math::policies::promote_double<false>>;

inline double lgamma_pos(double x) { return boost::math::lgamma(x, quiet_policy{}); }

inline double tgamma_quiet(double x) { return boost::math::tgamma(x, quiet_policy{}); }

}  // namespace fractoback::detail
