#include "fractoback/error.hpp"
#include "fractoback/forward.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace fractoback {

namespace {

struct Rule {
    std::vector<double> x;  // nodes on [-1, 1]
    std::vector<double> w;
};

template <unsigned N>
Rule make_rule() {
    using gauss = boost::math::quadrature::gauss<double, N>;
    const auto& a = gauss::abscissa();
    const auto& wt = gauss::weights();
    Rule r;
    // Boost stores the nonnegative half; the centre (odd N) comes first.
    for (std::size_t i = 0; i < a.size(); ++i) {
        r.x.push_back(a[i]);
        r.w.push_back(wt[i]);
        if (a[i] != 0.0) {
            r.x.push_back(-a[i]);
            r.w.push_back(wt[i]);
        }
    }
    return r;
}

const Rule& rule(int nodes) {
    static const std::array<Rule, 8> rules = {make_rule<2>(), make_rule<3>(), make_rule<4>(), make_rule<5>(),
                                              make_rule<7>(), make_rule<10>(), make_rule<15>(), make_rule<20>()};
    static constexpr std::array<int, 8> counts = {2, 3, 4, 5, 7, 10, 15, 20};
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == nodes) return rules[i];
    }
    std::ostringstream os;
    os << "unsupported Gauss-Legendre node count " << nodes << " (use 2, 3, 4, 5, 7, 10, 15 or 20)";
    throw Error(ErrorKind::InvalidParams, os.str());
}

struct PanelSum {
    double value = 0.0;
    double l1 = 0.0;
};

template <class F>
PanelSum apply(const Rule& r, const F& g, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    PanelSum out;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        const double v = g(c + h * r.x[i]);
        out.value += r.w[i] * v;
        out.l1 += r.w[i] * std::abs(v);
    }
    out.value *= h;
    out.l1 *= h;
    return out;
}

class PanelIntegrator {
public:
    PanelIntegrator(const Rule& r, const QuadratureOptions& opt, double length, std::function<double(double)> g)
        : rule_(r), opt_(opt), length_(length), g_(std::move(g)) {}

    void integrate(double a, double b) { refine(a, b, apply(rule_, g_, a, b), opt_.max_depth); }
    void single(double a, double b) { value_ += apply(rule_, g_, a, b).value; }

    double value() const { return value_; }
    double error() const { return error_; }

private:
    void refine(double a, double b, const PanelSum& whole, int depth) {
        const double mid = 0.5 * (a + b);
        const PanelSum left = apply(rule_, g_, a, mid);
        const PanelSum right = apply(rule_, g_, mid, b);
        const double halves = left.value + right.value;
        const double diff = std::abs(halves - whole.value);
        const double tol = opt_.abs_tol * (b - a) / length_ + opt_.rel_tol * (left.l1 + right.l1) +
                           8.0 * std::numeric_limits<double>::epsilon() * (left.l1 + right.l1);
        if (diff <= tol) {
            value_ += halves;
            error_ += diff;
            return;
        }
        if (depth == 0) {
            std::ostringstream os;
            os << "convolution panel [" << a << ", " << b << "] missed its tolerance after "
               << opt_.max_depth << " bisections (difference " << diff << ", tolerance " << tol << ")";
            throw Error(ErrorKind::QuadratureFailure, os.str());
        }
        refine(a, mid, left, depth - 1);
        refine(mid, b, right, depth - 1);
    }

    const Rule& rule_;
    const QuadratureOptions& opt_;
    double length_;
    std::function<double(double)> g_;
    double value_ = 0.0;
    double error_ = 0.0;
};

void check_options(const QuadratureOptions& q) {
    if (!(q.grading_ratio > 0.0 && q.grading_ratio < 1.0)) {
        throw Error(ErrorKind::InvalidParams, "quadrature grading_ratio must lie in (0, 1)");
    }
    if (!(q.min_fraction > 0.0 && q.min_fraction < 1.0)) {
        throw Error(ErrorKind::InvalidParams, "quadrature min_fraction must lie in (0, 1)");
    }
    if (q.uniform_panels < 1) throw Error(ErrorKind::InvalidParams, "quadrature uniform_panels must be >= 1");
    if (q.max_depth < 0) throw Error(ErrorKind::InvalidParams, "quadrature max_depth must be >= 0");
    if (!(q.abs_tol >= 0.0) || !(q.rel_tol >= 0.0)) {
        throw Error(ErrorKind::InvalidParams, "quadrature tolerances must be nonnegative");
    }
}

}  // namespace

ConvolutionResult convolve_source(const FractionalOrders& orders, double lambda,
                                  const std::function<double(double)>& f_k, double t,
                                  const QuadratureOptions& quadrature, const mlf::EvalConfig& config) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        std::ostringstream os;
        os << "convolution needs t >= 0, got " << t;
        throw Error(ErrorKind::InvalidParams, os.str());
    }
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw Error(ErrorKind::InvalidParams, "convolution needs a finite lambda >= 0");
    }
    check_options(quadrature);
    const Rule& r = rule(quadrature.nodes);
    if (t == 0.0) return {};

    const double rho1 = orders.leading();
    const double S = std::pow(t, rho1);
    std::size_t evaluations = 0;
    // xi^{rho_1 - 1} dxi = ds / rho_1, xi = s^{1/rho_1}.
    auto integrand = [&](double s) {
        ++evaluations;
        const double xi = std::min(t, std::pow(s, 1.0 / rho1));
        const double fv = f_k(t - xi);
        if (fv == 0.0) return 0.0;
        return fv * scaled_propagator(orders, lambda, s, config) / rho1;
    };

    PanelIntegrator integ(r, quadrature, S, integrand);
    std::vector<double> breaks;
    if (quadrature.mesh == MeshKind::Uniform) {
        for (int i = 0; i <= quadrature.uniform_panels; ++i) {
            breaks.push_back(S * static_cast<double>(i) / quadrature.uniform_panels);
        }
    } else {
        breaks.push_back(S);
        double b = S;
        while (b > quadrature.min_fraction * S) {
            b *= quadrature.grading_ratio;
            breaks.push_back(b);
        }
        breaks.push_back(0.0);
        std::reverse(breaks.begin(), breaks.end());
    }
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (quadrature.adaptive) {
            integ.integrate(breaks[i], breaks[i + 1]);
        } else {
            integ.single(breaks[i], breaks[i + 1]);
        }
    }
    return {integ.value(), integ.error(), evaluations};
}

std::vector<double> relaxation_factors(const DiagonalOperator& op, const FractionalOrders& orders, double t,
                                       const mlf::EvalConfig& config) {
    std::vector<double> out(op.size());
    for (std::size_t k = 0; k < op.size(); ++k) out[k] = relaxation(orders, op.eigenvalue(k), t, config);
    return out;
}

TrajectoryResult forward_solve(const DiagonalOperator& op, const FractionalOrders& orders,
                               const SpectralVector& phi, const SourceTerm& f,
                               std::span<const double> times, const ForwardOptions& options) {
    const std::size_t n = op.size();
    if (phi.size() != n || f.size() != n) {
        std::ostringstream os;
        os << "operator has " << n << " modes, initial data " << phi.size() << ", source " << f.size();
        throw Error(ErrorKind::LengthMismatch, os.str());
    }
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] >= 0.0) || !std::isfinite(times[i]) || (i > 0 && times[i] < times[i - 1])) {
            throw Error(ErrorKind::InvalidParams, "forward_solve times must be finite, nonnegative and sorted");
        }
        if (times[i] > f.horizon()) {
            std::ostringstream os;
            os << "time " << times[i] << " lies beyond the sampled source horizon " << f.horizon();
            throw Error(ErrorKind::InvalidParams, os.str());
        }
    }

    // A separable source shares its time factor across modes.
    const bool separable = f.kind() == SourceKind::SeparableModal;
    std::function<double(double)> shared_profile;
    if (separable) shared_profile = [h = f.profile()](double t) { return h(t); };

    TrajectoryResult out;
    out.times.assign(times.begin(), times.end());
    for (double t : times) {
        SpectralVector u = SpectralVector::zeros(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double lambda = op.eigenvalue(k);
            double value = 0.0;
            if (phi[k] != 0.0) value += phi[k] * relaxation(orders, lambda, t, options.mlf);
            if (f.mode_active(k) && t > 0.0) {
                if (separable) {
                    value += f.spatial()[k] *
                             convolve_source(orders, lambda, shared_profile, t, options.quadrature, options.mlf).value;
                } else {
                    value += convolve_source(orders, lambda, f.mode_function(k), t, options.quadrature, options.mlf).value;
                }
            }
            u[k] = value;
        }
        out.norm1.push_back(fractional_norm(op, u, 1.0));
        out.norm0.push_back(fractional_norm(op, u, 0.0));
        out.states.push_back(std::move(u));
    }
    return out;
}

std::vector<double> geometric_time_grid(double T, std::size_t n, double t_min) {
    if (!(T > 0.0) || !(t_min > 0.0) || !(t_min < T) || n < 2) {
        throw Error(ErrorKind::InvalidParams, "geometric grid needs 0 < t_min < T and n >= 2");
    }
    std::vector<double> t(n);
    const double ratio = std::log(T / t_min) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) t[i] = t_min * std::exp(ratio * static_cast<double>(i));
    t.back() = T;
    return t;
}

EvalReport smoothing_check(const TrajectoryResult& result, const DiagonalOperator& op,
                           const FractionalOrders& orders, const SpectralVector& phi,
                           const SourceTerm& f, double eps) {
    EvalReport report;
    report.id = "smoothing";
    if (result.times.empty()) throw Error(ErrorKind::InvalidParams, "smoothing check needs a trajectory");
    const double T = result.times.back();
    const double phi_norm = fractional_norm(op, phi, 0.0);
    const double f_max = f.max_norm(op, eps, T);

    Table table{"ratio", {"t", "norm1", "bound", "R"}, {}};
    std::vector<double> ts, rs;
    double sup_r = 0.0;
    for (std::size_t i = 0; i < result.times.size(); ++i) {
        const double t = result.times[i];
        if (t <= 0.0) continue;
        double power_sum = 0.0;
        for (double rho : orders.rhos()) power_sum += std::pow(t, -rho);
        const double bound = phi_norm * power_sum + f_max;
        const double r = bound > 0.0 ? result.norm1[i] / bound : 0.0;
        table.rows.push_back({t, result.norm1[i], bound, r});
        ts.push_back(t);
        rs.push_back(r);
        sup_r = std::max(sup_r, r);
    }
    report.tables.push_back(std::move(table));
    report.set_constant("sup_R", sup_r);

    // Growth check on the half of the grid nearest t = 0.
    double slope = 0.0;
    const std::size_t half = ts.size() / 2;
    if (half >= 2 && std::all_of(rs.begin(), rs.begin() + static_cast<std::ptrdiff_t>(half), [](double r) { return r > 0.0; })) {
        slope = fit_loglog(std::span(ts).first(half), std::span(rs).first(half)).slope;
    }
    report.set_constant("small_t_slope", slope);
    const double endpoint = phi_norm + f_max > 0.0 ? result.norm1.back() / (phi_norm + f_max) : 0.0;
    report.set_constant("endpoint_ratio", endpoint);
    report.set_flag("sup_finite", std::isfinite(sup_r));
    report.set_flag("no_growth_near_zero", slope >= -0.05);
    return report;
}

}  // namespace fractoback
