#include "detail/series.hpp"
#include "fractoback/error.hpp"
#include "fractoback/mlf.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fractoback::mlf {

namespace {

// Partial sums never need to pass through values this large when the result
// is to carry ~13 significant digits in double precision.
constexpr double kSeriesAbortAbove = 1e3;

EvalResult classical_limit(const MLParams& params, const MLArguments& args, const EvalConfig& config) {
    if (params.size() == 1) {
        const double z = args.leading();
        if (params.beta0() == 1.0) return {std::exp(z), Method::ClosedForm, 0.0};
        if (params.beta0() == 2.0) {
            return {z == 0.0 ? 1.0 : std::expm1(z) / z, Method::ClosedForm, 0.0};
        }
    }
    if (auto r = detail::guarded_series(params, args, config.series, kSeriesAbortAbove)) return *r;
    throw Error(ErrorKind::NoConvergence,
                "no accurate route for a unit-index function at this argument");
}

}  // namespace

EvalResult eval(const MLParams& params, const MLArguments& args, const EvalConfig& config) {
    if (params.size() != args.size()) {
        throw Error(ErrorKind::InvalidParams, "parameter and argument counts differ");
    }
    if (params.has_unit_index()) return classical_limit(params, args, config);

    const auto z = args.z();
    const double abs_z1 = -z[0];
    double others = 0.0;
    double max_abs = abs_z1;
    for (std::size_t j = 1; j < z.size(); ++j) {
        others += -z[j];
        max_abs = std::max(max_abs, -z[j]);
    }

    if (abs_z1 >= config.asymptotic_switch * (1.0 + others)) {
        return asymptotic(params, args, 2, 0.0);
    }
    // Shells of degree n hold C(n + M - 1, M - 1) terms, so the affordable reach shrinks with M.
    const double reach = config.series_reach * std::pow(0.25, std::max<int>(0, static_cast<int>(z.size()) - 2));
    if (max_abs <= config.z_switch && abs_z1 + others <= reach) {
        if (auto r = detail::guarded_series(params, args, config.series, kSeriesAbortAbove)) {
            if (r->est_abs_error <= config.series_max_rel_error * std::abs(r->value)) return *r;
        }
    }
    return contour(params, args, config.contour_rel_tol);
}

}  // namespace fractoback::mlf
