#include "fractoback/error.hpp"
#include "fractoback/kernels.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace fractoback {

namespace {

// Arguments (-lambda t^{rho_1}, -q_2 t^{rho_1 - rho_2}, ..., -q_M t^{rho_1 - rho_M}).
MLArguments kernel_arguments(const FractionalOrders& orders, double lambda, double t) {
    const auto rho = orders.rhos();
    const auto q = orders.weights();
    std::vector<double> z(orders.size());
    z[0] = -lambda * std::pow(t, rho[0]);
    for (std::size_t j = 1; j < z.size(); ++j) z[j] = -q[j] * std::pow(t, rho[0] - rho[j]);
    return MLArguments::make(std::move(z));
}

OrderDomain domain_of(const FractionalOrders& orders) {
    return orders.is_classical() ? OrderDomain::ClassicalLimit : OrderDomain::Fractional;
}

}  // namespace

mlf::EvalResult relaxation_eval(const FractionalOrders& orders, double lambda, double t,
                                const mlf::EvalConfig& config) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        std::ostringstream os;
        os << "relaxation needs lambda > 0, got " << lambda;
        throw Error(ErrorKind::InvalidParams, os.str());
    }
    if (!(t >= 0.0) || !std::isfinite(t)) {
        std::ostringstream os;
        os << "relaxation needs t >= 0, got " << t;
        throw Error(ErrorKind::InvalidParams, os.str());
    }
    if (t == 0.0) return {1.0, mlf::Method::ClosedForm, 0.0};

    const auto rho = orders.rhos();
    const auto q = orders.weights();
    const auto indices = orders.kernel_indices();
    const MLArguments args = kernel_arguments(orders, lambda, t);

    mlf::EvalResult total{0.0, mlf::Method::Series, 0.0};
    for (std::size_t j = 0; j < orders.size(); ++j) {
        const double weight = q[j] * std::pow(t, rho[0] - rho[j]);
        const auto params = MLParams::make(1.0 + rho[0] - rho[j], indices, domain_of(orders));
        const auto part = mlf::eval(params, args, config);
        total.value += weight * part.value;
        total.est_abs_error += weight * part.est_abs_error;
        if (j == 0) total.method = part.method;
    }
    return total;
}

double relaxation(const FractionalOrders& orders, double lambda, double t, const mlf::EvalConfig& config) {
    return relaxation_eval(orders, lambda, t, config).value;
}

double scaled_propagator(const FractionalOrders& orders, double lambda, double s, const mlf::EvalConfig& config) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
        std::ostringstream os;
        os << "scaled propagator needs s >= 0, got " << s;
        throw Error(ErrorKind::InvalidParams, os.str());
    }
    const auto rho = orders.rhos();
    const auto q = orders.weights();
    std::vector<double> z(orders.size());
    z[0] = -lambda * s;
    for (std::size_t j = 1; j < z.size(); ++j) z[j] = -q[j] * std::pow(s, (rho[0] - rho[j]) / rho[0]);
    const auto params = MLParams::make(rho[0], orders.kernel_indices(), domain_of(orders));
    return mlf::eval(params, MLArguments::make(std::move(z)), config).value;
}

double propagator(const FractionalOrders& orders, double lambda, double xi, const mlf::EvalConfig& config) {
    if (!(xi > 0.0) || !std::isfinite(xi)) {
        std::ostringstream os;
        os << "propagator is singular at xi = 0 and needs xi > 0, got " << xi;
        throw Error(ErrorKind::InvalidParams, os.str());
    }
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw Error(ErrorKind::InvalidParams, "propagator needs a finite lambda >= 0");
    }
    const double rho1 = orders.leading();
    const double s = std::pow(xi, rho1);
    return std::pow(xi, rho1 - 1.0) * scaled_propagator(orders, lambda, s, config);
}

}  // namespace fractoback
