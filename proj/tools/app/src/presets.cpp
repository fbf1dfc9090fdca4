#include "fractoback/app/presets.hpp"
#include "fractoback/app/config.hpp"
#include "fractoback/backward.hpp"
#include "fractoback/error.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

namespace fractoback::app {

namespace {

[[noreturn]] void bad(std::string_view preset, const std::string& why) {
    throw Error(ErrorKind::InvalidParams, "preset '" + std::string(preset) + "': " + why);
}

double number(std::string_view preset, std::string_view text) {
    double v = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(v)) {
        bad(preset, "'" + std::string(text) + "' is not a finite number");
    }
    return v;
}

std::size_t index(std::string_view preset, std::string_view text) {
    std::size_t v = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size()) bad(preset, "'" + std::string(text) + "' is not a count");
    return v;
}

std::vector<double> numbers(std::string_view preset, std::string_view list) {
    std::vector<double> out;
    while (true) {
        const auto comma = list.find(',');
        out.push_back(number(preset, list.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        list.remove_prefix(comma + 1);
    }
    return out;
}

std::pair<std::string_view, std::string_view> split(std::string_view preset) {
    const auto colon = preset.find(':');
    if (colon == std::string_view::npos) return {preset, {}};
    return {preset.substr(0, colon), preset.substr(colon + 1)};
}

SpectralVector projected(std::string_view preset, const DiagonalOperator& op, double (*g)(double)) {
    if (op.basis() != BasisKind::DirichletLaplacian1D) bad(preset, "needs the dirichlet1d basis");
    const auto grid = preset_grid(op.size());
    std::vector<double> samples;
    samples.reserve(grid.size());
    for (double x : grid.points()) samples.push_back(g(x));
    return project(op, grid, samples);
}

}  // namespace

SpatialGrid preset_grid(std::size_t n_modes) { return SpatialGrid::uniform(std::max<std::size_t>(8193, 16 * n_modes + 1)); }

SpectralVector make_state(std::string_view preset, const DiagonalOperator& op, std::uint64_t seed) {
    const std::size_t n = op.size();
    const auto [name, arg] = split(preset);
    if (name == "zero" && arg.empty()) return SpectralVector::zeros(n);
    if (name == "mode") {
        const auto k = index(preset, arg);
        if (k < 1 || k > n) bad(preset, "mode must lie in 1.." + std::to_string(n));
        return SpectralVector::unit(n, k);
    }
    if (name == "poly" && arg.empty()) {
        return projected(preset, op, [](double x) { return x * (std::numbers::pi - x); });
    }
    if (name == "bump" && arg.empty()) {
        return projected(preset, op, [](double x) {
            const double d = (x - std::numbers::pi / 2.0) / 0.3;
            return std::exp(-0.5 * d * d);
        });
    }
    if (name == "random") {
        const auto band = index(preset, arg);
        if (band < 1 || band > n) bad(preset, "band must lie in 1.." + std::to_string(n));
        return random_band_limited(n, band, seed);
    }
    if (name == "decay") {
        const double p = number(preset, arg);
        SpectralVector v = SpectralVector::zeros(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = std::pow(static_cast<double>(k + 1), -p);
        return v;
    }
    if (name == "coeffs") {
        auto c = numbers(preset, arg);
        if (c.size() > n) bad(preset, "has " + std::to_string(c.size()) + " coefficients for " + std::to_string(n) + " modes");
        c.resize(n, 0.0);
        return SpectralVector(std::move(c));
    }
    bad(preset, "unknown state preset (see list-presets)");
}

TimeProfile make_profile(std::string_view preset) {
    const auto [name, arg] = split(preset);
    if (name == "const") return TimeProfile::constant(number(preset, arg));
    if (name == "linear") {
        const auto c = numbers(preset, arg);
        if (c.size() != 2) bad(preset, "expects linear:a,b");
        return TimeProfile::polynomial(c);
    }
    if (name == "poly") return TimeProfile::polynomial(numbers(preset, arg));
    if (name == "exp") {
        const auto c = numbers(preset, arg);
        if (c.size() == 1) return TimeProfile::exponential(1.0, c[0]);
        if (c.size() == 2) return TimeProfile::exponential(c[0], c[1]);
        bad(preset, "expects exp:rate or exp:amplitude,rate");
    }
    bad(preset, "unknown profile preset (see list-presets)");
}

SourceTerm make_source(const SourceSpec& spec, const DiagonalOperator& op, double T, std::uint64_t seed) {
    auto g = make_state(spec.spatial, op, seed);
    const auto h = make_profile(spec.profile);
    const bool zero = h.is_zero() || fractional_norm(op, g, 0.0) == 0.0;
    if (zero && spec.sampled == 0) return SourceTerm::zero(op.size());
    if (spec.sampled == 0) return SourceTerm::separable(std::move(g), h, spec.eps);
    std::vector<double> times;
    std::vector<SpectralVector> values;
    for (std::size_t i = 0; i < spec.sampled; ++i) {
        const double t = T * static_cast<double>(i) / static_cast<double>(spec.sampled - 1);
        times.push_back(t);
        values.push_back(h(t) * g);
    }
    return SourceTerm::sampled(std::move(times), std::move(values), spec.eps);
}

std::vector<PresetInfo> list_presets() {
    return {
        {"zero", "state", "all coefficients zero"},
        {"mode:1", "state", "pure mode e_k (mode:k, k in 1..N)"},
        {"poly", "state", "x(pi - x) projected onto the sine basis (dirichlet1d)"},
        {"bump", "state", "Gaussian exp(-(x - pi/2)^2 / 0.18) projected onto the sine basis (dirichlet1d)"},
        {"random:32", "state", "uniform [-1, 1) coefficients on modes 1..band, seeded by experiment.seed"},
        {"decay:2", "state", "g_k = k^-p"},
        {"coeffs:1,0.5,0.25", "state", "explicit leading coefficients, zero-padded"},
        {"const:1", "profile", "h(t) = c"},
        {"linear:1,1", "profile", "h(t) = a + b t"},
        {"poly:0,0,1", "profile", "h(t) = c0 + c1 t + c2 t^2 + ..."},
        {"exp:-1", "profile", "h(t) = exp(rate t), or exp:amplitude,rate"},
    };
}

}  // namespace fractoback::app
