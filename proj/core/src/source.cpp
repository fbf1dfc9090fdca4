#include "fractoback/error.hpp"
#include "fractoback/source.hpp"

// Boost 1.74's pchip.hpp calls isnan unqualified.
#include <math.h>

#include <boost/math/interpolators/pchip.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace fractoback {

namespace {

void check_epsilon(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        std::ostringstream os;
        os << "source regularity eps must lie in (0, 1), got " << eps;
        throw Error(ErrorKind::InvalidParams, os.str());
    }
}

}  // namespace

TimeProfile TimeProfile::polynomial(std::vector<double> coeffs) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    for (double c : coeffs) {
        if (!std::isfinite(c)) throw Error(ErrorKind::InvalidParams, "polynomial coefficients must be finite");
    }
    return TimeProfile(Kind::Polynomial, std::move(coeffs));
}

TimeProfile TimeProfile::exponential(double amplitude, double rate) {
    if (!std::isfinite(amplitude) || !std::isfinite(rate)) {
        throw Error(ErrorKind::InvalidParams, "exponential profile needs finite amplitude and rate");
    }
    return TimeProfile(Kind::Exponential, {amplitude, rate});
}

double TimeProfile::operator()(double t) const {
    if (kind_ == Kind::Exponential) return coeffs_[0] * std::exp(coeffs_[1] * t);
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

bool TimeProfile::is_zero() const noexcept {
    if (kind_ == Kind::Exponential) return coeffs_[0] == 0.0;
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return c == 0.0; });
}

std::string_view to_string(SourceKind kind) noexcept {
    switch (kind) {
        case SourceKind::Zero: return "zero";
        case SourceKind::SeparableModal: return "separable";
        case SourceKind::Sampled: return "sampled";
    }
    return "unknown";
}

SourceTerm SourceTerm::zero(std::size_t n_modes) {
    SourceTerm s;
    s.kind_ = SourceKind::Zero;
    s.n_ = n_modes;
    s.g_ = SpectralVector::zeros(n_modes);
    s.active_.assign(n_modes, false);
    return s;
}

SourceTerm SourceTerm::separable(SpectralVector g, TimeProfile h, double eps_reg) {
    check_epsilon(eps_reg);
    SourceTerm s;
    s.kind_ = SourceKind::SeparableModal;
    s.n_ = g.size();
    s.eps_ = eps_reg;
    s.active_.resize(s.n_);
    for (std::size_t k = 0; k < s.n_; ++k) s.active_[k] = g[k] != 0.0 && !h.is_zero();
    s.g_ = std::move(g);
    s.h_ = std::move(h);
    return s;
}

SourceTerm SourceTerm::sampled(std::vector<double> times, std::vector<SpectralVector> values, double eps_reg) {
    check_epsilon(eps_reg);
    if (times.size() != values.size()) {
        std::ostringstream os;
        os << "sampled source has " << times.size() << " times but " << values.size() << " coefficient vectors";
        throw Error(ErrorKind::LengthMismatch, os.str());
    }
    if (times.size() < 4) throw Error(ErrorKind::InvalidParams, "sampled source needs at least 4 time samples");
    if (times.front() != 0.0) throw Error(ErrorKind::InvalidParams, "sampled source must start at t = 0");
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1])) {
            std::ostringstream os;
            os << "sampled source times must be strictly increasing (index " << i << ")";
            throw Error(ErrorKind::InvalidParams, os.str());
        }
    }
    const std::size_t n = values.front().size();
    for (const auto& v : values) {
        if (v.size() != n) throw Error(ErrorKind::LengthMismatch, "sampled source vectors differ in length");
    }

    SourceTerm s;
    s.kind_ = SourceKind::Sampled;
    s.n_ = n;
    s.eps_ = eps_reg;
    s.times_ = times;
    s.active_.resize(n);
    s.interpolants_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<double> y(times.size());
        for (std::size_t i = 0; i < times.size(); ++i) y[i] = values[i][k];
        s.active_[k] = std::any_of(y.begin(), y.end(), [](double v) { return v != 0.0; });
        if (!s.active_[k]) {
            s.interpolants_[k] = [](double) { return 0.0; };
            continue;
        }
        boost::math::interpolators::pchip<std::vector<double>> spline(std::vector<double>(times), std::move(y));
        s.interpolants_[k] = [spline, end = times.back()](double t) {
            if (t < 0.0 || t > end) {
                std::ostringstream os;
                os << "sampled source evaluated at t = " << t << " outside [0, " << end << "]";
                throw Error(ErrorKind::InvalidParams, os.str());
            }
            return spline(t);
        };
    }
    return s;
}

double SourceTerm::horizon() const noexcept {
    return kind_ == SourceKind::Sampled ? times_.back() : std::numeric_limits<double>::infinity();
}

bool SourceTerm::mode_active(std::size_t index) const { return active_.at(index); }

double SourceTerm::coefficient(std::size_t index, double t) const {
    if (index >= n_) {
        std::ostringstream os;
        os << "mode index " << index << " outside a source with " << n_ << " modes";
        throw Error(ErrorKind::LengthMismatch, os.str());
    }
    switch (kind_) {
        case SourceKind::Zero: return 0.0;
        case SourceKind::SeparableModal: return g_[index] == 0.0 ? 0.0 : g_[index] * h_(t);
        case SourceKind::Sampled: return interpolants_[index](t);
    }
    return 0.0;
}

std::function<double(double)> SourceTerm::mode_function(std::size_t index) const {
    if (index >= n_) throw Error(ErrorKind::LengthMismatch, "mode index outside the source");
    switch (kind_) {
        case SourceKind::Zero: return [](double) { return 0.0; };
        case SourceKind::SeparableModal: return [g = g_[index], h = h_](double t) { return g * h(t); };
        case SourceKind::Sampled: break;
    }
    return interpolants_[index];
}

SpectralVector SourceTerm::at(double t) const {
    std::vector<double> c(n_);
    for (std::size_t k = 0; k < n_; ++k) c[k] = coefficient(k, t);
    return SpectralVector(std::move(c));
}

double SourceTerm::max_norm(const DiagonalOperator& op, double eps, double T, std::size_t samples) const {
    if (op.size() != n_) {
        std::ostringstream os;
        os << "source has " << n_ << " modes, operator has " << op.size();
        throw Error(ErrorKind::LengthMismatch, os.str());
    }
    if (!(T >= 0.0)) throw Error(ErrorKind::InvalidParams, "max_norm needs T >= 0");
    if (kind_ == SourceKind::Zero) return 0.0;
    samples = std::max<std::size_t>(samples, 2);
    double best = 0.0;
    if (kind_ == SourceKind::SeparableModal) {
        double hmax = 0.0;
        for (std::size_t i = 0; i < samples; ++i) {
            hmax = std::max(hmax, std::abs(h_(T * static_cast<double>(i) / static_cast<double>(samples - 1))));
        }
        return fractional_norm(op, g_, eps) * hmax;
    }
    for (std::size_t i = 0; i < samples; ++i) {
        best = std::max(best, fractional_norm(op, at(T * static_cast<double>(i) / static_cast<double>(samples - 1)), eps));
    }
    for (double t : times_) {
        if (t <= T) best = std::max(best, fractional_norm(op, at(t), eps));
    }
    return best;
}

}  // namespace fractoback
