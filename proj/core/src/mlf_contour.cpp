#include "fractoback/error.hpp"
#include "fractoback/mlf.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

namespace fractoback::mlf {

namespace {

using complex = std::complex<double>;

// Past this distance along the cut e^{-r} has removed every significant digit.
constexpr double kRayLength = 60.0;
constexpr int kMaxDepth = 20;

using gk = boost::math::quadrature::gauss_kronrod<double, 31>;

struct Integral {
    double value = 0.0;
    double error = 0.0;
    double l1 = 0.0;
};

// One 15/31-point Gauss-Kronrod panel; the error is the Gauss-Kronrod difference.
template <class F>
Integral panel(const F& f, double a, double b) {
    const auto& x = gk::abscissa();
    const auto& wk = gk::weights();
    const auto& wg = boost::math::quadrature::gauss<double, 15>::weights();
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    // The centre and the even-indexed Kronrod abscissae are the Gauss nodes.
    double fc = f(c);
    double kronrod = wk[0] * fc;
    double gauss = wg[0] * fc;
    double l1 = wk[0] * std::abs(fc);
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double fp = f(c + h * x[i]);
        const double fm = f(c - h * x[i]);
        kronrod += wk[i] * (fp + fm);
        l1 += wk[i] * (std::abs(fp) + std::abs(fm));
        if (i % 2 == 0) gauss += wg[i / 2] * (fp + fm);
    }
    return {h * kronrod, h * std::abs(kronrod - gauss), h * l1};
}

// Bisection against an absolute error density (per unit length). Cancellation
// between the circle and the cut can leave the result far below the integrand
// scale, where a tolerance relative to each local estimate is never met.
template <class F>
Integral refine(const F& f, double a, double b, const Integral& whole, double density, int depth) {
    const double floor = 4.0 * std::numeric_limits<double>::epsilon() * whole.l1;
    if (whole.error <= std::max(density * (b - a), floor) || depth == 0) return whole;
    const double mid = 0.5 * (a + b);
    const Integral l = refine(f, a, mid, panel(f, a, mid), density, depth - 1);
    const Integral r = refine(f, mid, b, panel(f, mid, b), density, depth - 1);
    return {l.value + r.value, l.error + r.error, l.l1 + r.l1};
}

}  // namespace

EvalResult contour(const MLParams& params, const MLArguments& args, double rel_tol) {
    if (params.size() != args.size()) {
        throw Error(ErrorKind::InvalidParams, "parameter and argument counts differ");
    }
    if (params.has_unit_index()) {
        throw Error(ErrorKind::InvalidParams,
                    "contour evaluation needs every beta_j < 1 (a unit index puts a pole on the cut)");
    }
    constexpr double pi = std::numbers::pi;
    const double b0 = params.beta0();
    const auto b = params.betas();
    const auto z = args.z();
    const std::size_t m = b.size();

    std::vector<double> abs_z(m);
    for (std::size_t j = 0; j < m; ++j) abs_z[j] = -z[j];

    // 1 - sum_j z_j s^{-b_j} at s = r e^{i theta}. For z_j <= 0 and b_j in (0,1)
    // its imaginary part has a fixed sign off the positive axis, so it never vanishes.
    auto denominator = [&](double r, double theta) {
        complex d = 1.0;
        for (std::size_t j = 0; j < m; ++j) {
            if (abs_z[j] == 0.0) continue;
            d += abs_z[j] * std::polar(std::pow(r, -b[j]), -b[j] * theta);
        }
        return d;
    };

    // The saddle of e^s s^{-b0} sits at s = b0; a radius below that loses digits for large b0.
    const double radius = std::max(1.0, b0);

    // Circle |s| = radius, upper half by conjugate symmetry: (1/pi) int_0^pi Re[e^s s F(s)] dphi.
    auto on_circle = [&](double phi) {
        const complex s = std::polar(radius, phi);
        const complex s_f = std::polar(std::pow(radius, 1.0 - b0), (1.0 - b0) * phi) / denominator(radius, phi);
        return (std::exp(s) * s_f).real();
    };
    // Both banks of the cut: -(1/pi) int e^{-r} Im F(r e^{i pi}) dr.
    auto on_cut = [&](double r) {
        const complex f = std::polar(std::pow(r, -b0), -pi * b0) / denominator(r, pi);
        return -std::exp(-r) * f.imag();
    };

    const Integral circle0 = panel(on_circle, 0.0, pi);
    const Integral cut0 = panel(on_cut, radius, radius + kRayLength);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double scale = circle0.l1 + cut0.l1;
    const double target = std::max(rel_tol * std::abs(circle0.value + cut0.value), 8.0 * eps * scale);
    const double density = target / (pi + kRayLength);
    const Integral circle = refine(on_circle, 0.0, pi, circle0, density, kMaxDepth);
    const Integral cut = refine(on_cut, radius, radius + kRayLength, cut0, density, kMaxDepth);

    EvalResult out;
    out.method = Method::Contour;
    out.value = (circle.value + cut.value) / pi;
    out.est_abs_error = (circle.error + cut.error + 16.0 * eps * (circle.l1 + cut.l1)) / pi;
    if (!std::isfinite(out.value) || !std::isfinite(out.est_abs_error)) {
        std::ostringstream os;
        os << "contour quadrature produced a non-finite value (beta0 = " << b0
           << ", z_1 = " << z[0] << ")";
        throw Error(ErrorKind::ContourFailure, os.str());
    }
    return out;
}

}  // namespace fractoback::mlf
