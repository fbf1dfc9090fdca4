#include "fractoback/verification/oracles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace fractoback::verification {

namespace mp = boost::multiprecision;
using mpfr = mp::mpfr_float;

double classical_mittag_leffler(Rational rho, Rational beta, double z) {
    if (rho.num <= 0 || rho.den <= 0 || beta.num <= 0 || beta.den <= 0) {
        throw std::invalid_argument("classical_mittag_leffler: positive rationals expected");
    }
    if (z == 0.0) return 1.0 / std::tgamma(beta.value());

    // Size of the largest term decides the working precision.
    const double r = rho.value();
    const double b = beta.value();
    const double log_abs_z = std::log(std::abs(z));
    double peak = 0.0;
    for (int k = 0;; ++k) {
        const double lt = k * log_abs_z - std::lgamma(r * k + b);
        peak = std::max(peak, lt);
        if (k > 10 && lt < peak - 80.0) break;
    }
    const unsigned digits = static_cast<unsigned>(peak / std::log(10.0)) + 40;
    mpfr::default_precision(digits);

    const mpfr rho_mp = mpfr(rho.num) / rho.den;
    const mpfr beta_mp = mpfr(beta.num) / beta.den;
    const mpfr zz = z;

    // chain[j] holds Gamma(beta + rho k) for the most recent k = j (mod den).
    std::vector<mpfr> chain(static_cast<std::size_t>(rho.den));
    mpfr sum = 0;
    mpfr power = 1;
    const mpfr threshold = mp::pow(mpfr(10), -30);
    for (int k = 0;; ++k) {
        const auto slot = static_cast<std::size_t>(k % rho.den);
        mpfr& g = chain[slot];
        if (k < rho.den) {
            g = mp::tgamma(beta_mp + rho_mp * k);
        } else {
            const mpfr x = beta_mp + rho_mp * (k - rho.den);
            for (int i = 0; i < rho.num; ++i) g *= x + i;
        }
        const mpfr term = power / g;
        sum += term;
        if (k > 10 && mp::abs(term) < threshold * mp::abs(sum)) break;
        power *= zz;
    }
    return static_cast<double>(sum);
}

double erfc_identity(double z) { return std::exp(z * z) * std::erfc(-z); }

double duhamel_constant(double c, double lambda, double t) { return -c * std::expm1(-lambda * t) / lambda; }

double monomial_response(const FractionalOrders& orders, double lambda, int m, double t) {
    const auto rho = orders.rhos();
    const auto q = orders.weights();
    std::vector<double> z(orders.size());
    z[0] = -lambda * std::pow(t, rho[0]);
    for (std::size_t j = 1; j < z.size(); ++j) z[j] = -q[j] * std::pow(t, rho[0] - rho[j]);
    const auto domain = orders.is_classical() ? OrderDomain::ClassicalLimit : OrderDomain::Fractional;
    const auto params = MLParams::make(rho[0] + m + 1.0, orders.kernel_indices(), domain);
    return std::tgamma(m + 1.0) * std::pow(t, rho[0] + m) * mlf::eval(params, MLArguments::make(std::move(z))).value;
}

double talbot_inverse(const LaplaceTransform& F, double t, int nodes) {
    using real = long double;
    using complex = std::complex<real>;
    const real tt = t;
    const real n = nodes;
    const real r = 2.0L * n / (5.0L * tt);
    real acc = 0.5L * std::exp(r * tt) * F(complex(r, 0.0L)).real();
    for (int k = 1; k < nodes; ++k) {
        const real theta = k * std::numbers::pi_v<real> / n;
        const real cot = std::cos(theta) / std::sin(theta);
        const complex s(r * theta * cot, r * theta);
        const real sigma = theta + (theta * cot - 1.0L) * cot;
        acc += (std::exp(tt * s) * F(s) * complex(1.0L, sigma)).real();
    }
    return static_cast<double>(r / n * acc);
}

double multinomial_by_inversion(const MLParams& params, const MLArguments& args, int nodes) {
    const auto b = params.betas();
    const auto z = args.z();
    const long double b0 = params.beta0();
    auto F = [&](std::complex<long double> s) {
        std::complex<long double> d = 1.0L;
        for (std::size_t j = 0; j < b.size(); ++j) {
            d -= static_cast<long double>(z[j]) * std::pow(s, -static_cast<long double>(b[j]));
        }
        return std::pow(s, -b0) / d;
    };
    return talbot_inverse(F, 1.0, nodes);
}

double sine_coefficient(const std::function<double(double)>& g, int k) {
    auto integrand = [&](double x) { return g(x) * std::sin(k * x); };
    // One panel per half-wave, so each piece is smooth and of one sign for smooth g.
    const int panels = 2 * std::max(k, 1);
    const double h = std::numbers::pi / panels;
    double v = 0.0;
    for (int i = 0; i < panels; ++i) {
        v += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, i * h, (i + 1) * h, 8, 1e-14);
    }
    return std::sqrt(2.0 / std::numbers::pi) * v;
}

double parabola_coefficient(int k) {
    if (k % 2 == 0) return 0.0;
    return std::sqrt(2.0 / std::numbers::pi) * 4.0 / (static_cast<double>(k) * k * k);
}

}  // namespace fractoback::verification
