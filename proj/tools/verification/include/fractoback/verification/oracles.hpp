#pragma once

#include "fractoback/kernels.hpp"

#include <complex>
#include <functional>

namespace fractoback::verification {

struct Rational {
    int num;
    int den;
    double value() const { return static_cast<double>(num) / den; }
};

/// Classical E_{rho, beta}(z) = sum_k z^k / Gamma(rho k + beta) summed in MPFR
/// arithmetic with enough guard digits to absorb the alternating-series cancellation.
/// Gamma values advance by the exact recurrence Gamma(x + num) = Gamma(x) * prod (x + i)
/// along the residues of k mod den.
double classical_mittag_leffler(Rational rho, Rational beta, double z);

/// E_{1/2,1}(z) = exp(z^2) erfc(-z).
double erfc_identity(double z);

/// c / lambda * (1 - exp(-lambda t)): source response of u' + lambda u = c, u(0) = 0.
double duhamel_constant(double c, double lambda, double t);

/// Source response to f(t) = t^m: m! t^{rho_1 + m} E_{rho', rho_1 + m + 1}(-lambda t^{rho_1}, *).
double monomial_response(const FractionalOrders& orders, double lambda, int m, double t);

using LaplaceTransform = std::function<std::complex<long double>(std::complex<long double>)>;

/// Fixed-Talbot inversion of F at t > 0 in long double.
double talbot_inverse(const LaplaceTransform& F, double t, int nodes = 32);

/// E_{(b_1..b_M), b_0}(z) at t = 1 via the transform s^{-b0} / (1 - sum_j z_j s^{-b_j}).
double multinomial_by_inversion(const MLParams& params, const MLArguments& args, int nodes = 32);

/// sqrt(2/pi) int_0^pi g(x) sin(kx) dx by Gauss-Kronrod on each half-wave of the sine.
double sine_coefficient(const std::function<double(double)>& g, int k);

/// Closed form of the k-th sine coefficient of x (pi - x): sqrt(2/pi) * 4 / k^3 for odd k, else 0.
double parabola_coefficient(int k);

}  // namespace fractoback::verification
