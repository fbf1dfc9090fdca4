#include "fractoback/error.hpp"
#include "fractoback/kernels.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace fractoback {

// Fixed Talbot contour s(theta) = r theta (cot theta + i), r = 2 n / (5 t)
// (Abate & Valko). All singularities of the transform lie on the closed
// negative real axis, which the contour encloses.
double relaxation_oracle(const FractionalOrders& orders, double lambda, double t, int nodes) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        std::ostringstream os;
        os << "Laplace inversion needs t > 0, got " << t;
        throw Error(ErrorKind::InvalidParams, os.str());
    }
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw Error(ErrorKind::InvalidParams, "Laplace inversion needs a finite lambda >= 0");
    }
    if (nodes < 2) throw Error(ErrorKind::InvalidParams, "Talbot inversion needs at least 2 nodes");

    using real = long double;
    using complex = std::complex<real>;
    const auto rho = orders.rhos();
    const auto q = orders.weights();

    auto transform = [&](complex s) {
        complex d = 0.0L;
        for (std::size_t j = 0; j < rho.size(); ++j) {
            d += static_cast<real>(q[j]) * std::pow(s, static_cast<real>(rho[j]));
        }
        return d / (s * (d + static_cast<real>(lambda)));
    };

    const real tt = t;
    const real n = nodes;
    const real r = 2.0L * n / (5.0L * tt);
    real acc = 0.5L * std::exp(r * tt) * transform(complex(r, 0.0L)).real();
    for (int k = 1; k < nodes; ++k) {
        const real theta = static_cast<real>(k) * std::numbers::pi_v<real> / n;
        const real cot = std::cos(theta) / std::sin(theta);
        const complex s(r * theta * cot, r * theta);
        const real sigma = theta + (theta * cot - 1.0L) * cot;
        acc += (std::exp(tt * s) * transform(s) * complex(1.0L, sigma)).real();
    }
    const double value = static_cast<double>(r / n * acc);
    if (!std::isfinite(value)) {
        std::ostringstream os;
        os << "Talbot inversion produced a non-finite value at lambda = " << lambda << ", t = " << t;
        throw Error(ErrorKind::ContourFailure, os.str());
    }
    return value;
}

}  // namespace fractoback
