#include "fractoback/backward.hpp"
#include "fractoback/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace fractoback {

namespace {

// Portable uniform [-1, 1) from the raw 64-bit engine output.
double uniform_pm1(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-52 - 1.0;
}

std::mt19937_64 case_engine(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

void check_problem(const BackwardProblem& p) {
    const std::size_t n = p.op.size();
    if (p.Phi.size() != n || p.f.size() != n) {
        std::ostringstream os;
        os << "operator has " << n << " modes, final data " << p.Phi.size() << ", source " << p.f.size();
        throw Error(ErrorKind::LengthMismatch, os.str());
    }
    if (!(p.T > 0.0) || !std::isfinite(p.T)) {
        std::ostringstream os;
        os << "final time T must be > 0, got " << p.T;
        throw Error(ErrorKind::InvalidParams, os.str());
    }
}

ReconstructionResult divide(const BackwardProblem& p, const SpectralVector& data, const mlf::EvalConfig& config) {
    const std::size_t n = p.op.size();
    ReconstructionResult r;
    r.phi_hat = SpectralVector::zeros(n);
    r.source_part = SpectralVector::zeros(n);
    bool in_range = true;
    bool monotone = true;
    for (std::size_t k = 0; k < n; ++k) {
        const double d = denominator(p.orders, p.op.eigenvalue(k), p.T, config);
        r.denominators.push_back(d);
        r.amplification.push_back(1.0 / d);
        r.phi_hat[k] = data[k] / d;
        in_range = in_range && d > 0.0 && d <= 1.0;
        if (k > 0) monotone = monotone && r.amplification[k] >= r.amplification[k - 1];
    }
    r.diagnostics.id = "reconstruction";
    r.diagnostics.set_constant("final_norm1", fractional_norm(p.op, p.Phi, 1.0));
    r.diagnostics.set_constant("phi_hat_norm", fractional_norm(p.op, r.phi_hat, 0.0));
    r.diagnostics.set_constant("max_amplification", r.amplification.back());
    r.diagnostics.set_flag("denominators_in_range", in_range);
    r.diagnostics.set_flag("amplification_nondecreasing", monotone);
    return r;
}

}  // namespace

PrioriBound PrioriBound::make(double epsilon, double B0) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw Error(ErrorKind::InvalidParams, "a priori bound needs epsilon > 0");
    }
    if (!(B0 > 0.0) || !std::isfinite(B0)) throw Error(ErrorKind::InvalidParams, "a priori bound needs B0 > 0");
    return {epsilon, B0};
}

double denominator(const FractionalOrders& orders, double lambda, double T, const mlf::EvalConfig& config) {
    if (!(T > 0.0)) throw Error(ErrorKind::InvalidParams, "denominator needs T > 0");
    const double d = relaxation(orders, lambda, T, config);
    if (!(d > 0.0) || !std::isfinite(d)) {
        std::ostringstream os;
        os << "relaxation at lambda = " << lambda << ", T = " << T << " evaluated to " << d;
        throw Error(ErrorKind::NoConvergence, os.str());
    }
    return std::min(d, 1.0);
}

ReconstructionResult backward_solve_homogeneous(const BackwardProblem& problem, const ForwardOptions& options) {
    check_problem(problem);
    if (problem.f.kind() != SourceKind::Zero) {
        throw Error(ErrorKind::InvalidParams, "homogeneous reconstruction needs a zero source");
    }
    return divide(problem, problem.Phi, options.mlf);
}

ReconstructionResult backward_solve(const BackwardProblem& problem, const ForwardOptions& options) {
    check_problem(problem);
    const std::size_t n = problem.op.size();
    SpectralVector v_T = SpectralVector::zeros(n);
    if (problem.f.kind() != SourceKind::Zero) {
        const double times[] = {problem.T};
        v_T = forward_solve(problem.op, problem.orders, SpectralVector::zeros(n), problem.f, times, options).states[0];
    }
    ReconstructionResult r = divide(problem, problem.Phi - v_T, options.mlf);
    r.source_part = v_T;
    r.diagnostics.set_constant("source_max_norm_eps",
                               problem.f.max_norm(problem.op, problem.f.epsilon(), problem.T));
    return r;
}

SpectralVector random_band_limited(std::size_t n, std::size_t band, std::uint64_t seed) {
    if (band == 0 || band > n) throw Error(ErrorKind::InvalidParams, "band must lie in 1..n");
    std::mt19937_64 gen(seed);
    SpectralVector v = SpectralVector::zeros(n);
    for (std::size_t k = 0; k < band; ++k) v[k] = uniform_pm1(gen);
    return v;
}

EvalReport illposedness_demo(const DiagonalOperator& op, const FractionalOrders& orders, double T,
                             const IllposednessOptions& o, const mlf::EvalConfig& config) {
    if (!(o.eps > 0.0)) throw Error(ErrorKind::InvalidParams, "ill-posedness demo needs eps > 0");
    if (o.k_min < 1 || o.k_min >= o.k_max || o.k_max > op.size()) {
        std::ostringstream os;
        os << "k range [" << o.k_min << ", " << o.k_max << "] must satisfy 1 <= k_min < k_max <= " << op.size();
        throw Error(ErrorKind::InvalidParams, os.str());
    }
    EvalReport report;
    report.id = "illposed-demo";
    Table table{"modes", {"k", "lambda", "Phi_norm", "Phi_norm1", "u0_norm", "amplification"}, {}};
    if (o.noise != 0.0) table.columns.push_back("noise_image");

    std::vector<double> lam, amp, phi_norm, phi_norm1, u0_norm;
    for (std::size_t k = 1; k <= o.k_max; ++k) {
        const double l = op.eigenvalue(k - 1);
        const double d = denominator(orders, l, T, config);
        const double scale = std::pow(l, -1.0 + o.eps);
        const SpectralVector Phi = scale * SpectralVector::unit(op.size(), k);
        lam.push_back(l);
        amp.push_back(1.0 / d);
        phi_norm.push_back(fractional_norm(op, Phi, 0.0));
        phi_norm1.push_back(fractional_norm(op, Phi, 1.0));
        u0_norm.push_back(phi_norm.back() / d);
        std::vector<double> row = {static_cast<double>(k), l, phi_norm.back(), phi_norm1.back(), u0_norm.back(), amp.back()};
        if (o.noise != 0.0) row.push_back(std::abs(o.noise) / d);
        table.rows.push_back(std::move(row));
    }
    report.tables.push_back(std::move(table));

    const std::size_t lo = o.k_min - 1;
    // Monotonicity is judged on the demo range; low modes are dominated by 1/(lambda D) > 1.
    auto strictly = [lo](const std::vector<double>& v, bool increasing) {
        for (std::size_t i = lo + 1; i < v.size(); ++i) {
            if (increasing ? !(v[i] > v[i - 1]) : !(v[i] < v[i - 1])) return false;
        }
        return true;
    };
    std::size_t onset = u0_norm.size();
    while (onset > 1 && u0_norm[onset - 1] > u0_norm[onset - 2]) --onset;
    report.set_constant("u0_increasing_from_k", static_cast<double>(onset));
    const auto fit = fit_loglog(std::span(lam).subspan(lo), std::span(amp).subspan(lo));
    report.set_constant("eps", o.eps);
    report.set_constant("T", T);
    report.set_constant("amplification_slope", fit.slope);
    report.set_constant("amplification_prefactor", std::exp(fit.intercept));
    report.set_flag("Phi_norm_decreasing", strictly(phi_norm, false));
    report.set_flag("u0_norm_increasing", strictly(u0_norm, true));
    report.set_flag("Phi_norm1_increasing", strictly(phi_norm1, true));
    report.set_flag("slope_near_one", std::abs(fit.slope - 1.0) <= o.slope_tolerance);
    return report;
}

EvalReport two_sided_estimate(const DiagonalOperator& op, const FractionalOrders& orders, double T,
                              std::size_t family_size, std::uint64_t seed, const mlf::EvalConfig& config) {
    if (family_size == 0) throw Error(ErrorKind::InvalidParams, "two-sided estimate needs a nonempty family");
    if (!(T > 0.0)) throw Error(ErrorKind::InvalidParams, "two-sided estimate needs T > 0");
    const std::size_t n = op.size();
    std::vector<double> d(n);
    for (std::size_t k = 0; k < n; ++k) d[k] = denominator(orders, op.eigenvalue(k), T, config);

    EvalReport report;
    report.id = "two-sided";
    Table table{"family", {"member", "u0_norm", "uT_norm1", "ratio"}, {}};
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = 0; i < family_size; ++i) {
        auto gen = case_engine(seed, i);
        SpectralVector phi = SpectralVector::zeros(n);
        for (std::size_t k = 0; k < n; ++k) phi[k] = uniform_pm1(gen);
        SpectralVector uT = phi;
        for (std::size_t k = 0; k < n; ++k) uT[k] *= d[k];
        const double a = fractional_norm(op, phi, 0.0);
        const double b = fractional_norm(op, uT, 1.0);
        const double ratio = b / a;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        table.rows.push_back({static_cast<double>(i), a, b, ratio});
    }
    report.tables.push_back(std::move(table));
    // Spectral extremes of lambda_k D_k bound every member's ratio.
    double c1 = std::numeric_limits<double>::infinity(), c2 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        c1 = std::min(c1, op.eigenvalue(k) * d[k]);
        c2 = std::max(c2, op.eigenvalue(k) * d[k]);
    }
    report.set_constant("ratio_min", lo);
    report.set_constant("ratio_max", hi);
    report.set_constant("spectral_min", c1);
    report.set_constant("spectral_max", c2);
    report.set_constant("seed", static_cast<double>(seed));
    report.set_flag("ratios_positive", lo > 0.0 && std::isfinite(hi));
    report.set_flag("within_spectral_bounds", lo >= c1 * (1 - 1e-12) && hi <= c2 * (1 + 1e-12));
    return report;
}

std::vector<StabilityCase> stability_family(const DiagonalOperator& op, const PrioriBound& bound,
                                            std::size_t count, std::uint64_t seed) {
    const std::size_t n = op.size();
    std::vector<StabilityCase> cases;
    for (std::size_t i = 0; i < count; ++i) {
        auto gen = case_engine(seed, i);
        SpectralVector phi = SpectralVector::zeros(n);
        if (i < n) {
            phi[i] = 1.0;
        } else {
            // Random spectral envelope k^{-p}, p in [0, 2], then random coefficients.
            const double p = 1.0 + uniform_pm1(gen);
            for (std::size_t k = 0; k < n; ++k) phi[k] = uniform_pm1(gen) * std::pow(static_cast<double>(k + 1), -p);
        }
        const double fill = i < n ? 1.0 : 0.75 + 0.25 * uniform_pm1(gen);
        phi *= fill * bound.B0 / fractional_norm(op, phi, bound.epsilon);
        if (i >= n && i % 4 == 0) {
            const double amp = 0.1 * bound.B0 * (1.0 + uniform_pm1(gen));
            cases.push_back({phi, SourceTerm::separable(amp * SpectralVector::unit(n, 1), TimeProfile::polynomial({1.0, 1.0}))});
        } else {
            cases.push_back({phi, SourceTerm::zero(n)});
        }
    }
    return cases;
}

EvalReport conditional_stability_check(const DiagonalOperator& op, const FractionalOrders& orders, double T,
                                       const PrioriBound& bound, const std::vector<StabilityCase>& cases,
                                       const StabilityOptions& stability, const ForwardOptions& options) {
    if (cases.empty()) throw Error(ErrorKind::InvalidParams, "stability check needs at least one case");
    if (!(T > 0.0)) throw Error(ErrorKind::InvalidParams, "stability check needs T > 0");
    const std::size_t base = stability.base_size == 0 ? cases.size() : std::min(stability.base_size, cases.size());
    const double a = bound.epsilon / (1.0 + bound.epsilon);
    const double b = 1.0 / (1.0 + bound.epsilon);
    const double times[] = {T};

    auto ratio = [&](const SpectralVector& phi, const SourceTerm& f, double B0) {
        const SpectralVector Phi = forward_solve(op, orders, phi, f, times, options).states[0];
        const double data = fractional_norm(op, Phi, 0.0) + f.max_norm(op, 0.0, T);
        return fractional_norm(op, phi, 0.0) / (std::pow(data, a) * std::pow(B0, b));
    };
    auto scaled_source = [](const SourceTerm& f, double s) {
        if (f.kind() != SourceKind::SeparableModal) return f;
        return SourceTerm::separable(s * f.spatial(), f.profile(), f.epsilon());
    };

    EvalReport report;
    report.id = "conditional-stability";
    Table table{"cases", {"case", "phi_norm", "phi_norm_eps", "Q", "Q_scale_variation"}, {}};
    double sup_base = 0.0, sup_all = 0.0, worst_variation = 0.0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& c = cases[i];
        const double norm_eps = fractional_norm(op, c.phi, bound.epsilon);
        if (norm_eps > bound.B0 * (1.0 + 1e-12)) {
            std::ostringstream os;
            os << "case " << i << " has ||phi||_eps = " << norm_eps << " above B0 = " << bound.B0;
            throw Error(ErrorKind::PrioriViolation, os.str());
        }
        const double q = ratio(c.phi, c.f, bound.B0);
        double qmin = q, qmax = q;
        for (double s : stability.scales) {
            const double qs = ratio(s * c.phi, scaled_source(c.f, s), s * bound.B0);
            qmin = std::min(qmin, qs);
            qmax = std::max(qmax, qs);
        }
        const double variation = (qmax - qmin) / q;
        worst_variation = std::max(worst_variation, variation);
        if (i < base) sup_base = std::max(sup_base, q);
        sup_all = std::max(sup_all, q);
        table.rows.push_back({static_cast<double>(i), fractional_norm(op, c.phi, 0.0), norm_eps, q, variation});
    }
    report.tables.push_back(std::move(table));
    const double growth = sup_all / sup_base - 1.0;
    report.set_constant("epsilon", bound.epsilon);
    report.set_constant("B0", bound.B0);
    report.set_constant("sup_Q_base", sup_base);
    report.set_constant("sup_Q_enlarged", sup_all);
    report.set_constant("sup_Q_growth", growth);
    report.set_constant("scale_variation", worst_variation);
    report.set_flag("Q_finite", std::isfinite(sup_all));
    report.set_flag("scale_invariant", worst_variation <= 1e-8);
    report.set_flag("family_stable", growth < 0.1);
    return report;
}

}  // namespace fractoback
