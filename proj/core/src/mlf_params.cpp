#include "fractoback/error.hpp"
#include "fractoback/mlf.hpp"

#include "detail/gamma.hpp"

#include <cmath>
#include <sstream>

namespace fractoback {

namespace {

[[noreturn]] void invalid(const std::string& what) {
    throw Error(ErrorKind::InvalidParams, what);
}

bool index_admissible(double b, OrderDomain domain) {
    if (!std::isfinite(b) || b <= 0.0) return false;
    return domain == OrderDomain::ClassicalLimit ? b <= 1.0 : b < 1.0;
}

}  // namespace

FractionalOrders FractionalOrders::make(std::vector<double> rhos,
                                        std::vector<double> weights,
                                        OrderDomain domain) {
    if (rhos.empty()) invalid("at least one fractional order is required");
    if (weights.size() != rhos.size()) {
        std::ostringstream os;
        os << "got " << rhos.size() << " orders but " << weights.size() << " weights";
        invalid(os.str());
    }
    for (std::size_t j = 0; j < rhos.size(); ++j) {
        if (!index_admissible(rhos[j], domain)) {
            std::ostringstream os;
            os << "order rho_" << j + 1 << " = " << rhos[j] << " outside "
               << (domain == OrderDomain::ClassicalLimit ? "(0,1]" : "(0,1)");
            invalid(os.str());
        }
        if (j > 0 && !(rhos[j] < rhos[j - 1])) {
            std::ostringstream os;
            os << "orders must be strictly decreasing, rho_" << j << " = " << rhos[j - 1]
               << " and rho_" << j + 1 << " = " << rhos[j];
            invalid(os.str());
        }
        if (!std::isfinite(weights[j]) || weights[j] <= 0.0) {
            std::ostringstream os;
            os << "weight q_" << j + 1 << " = " << weights[j] << " must be positive";
            invalid(os.str());
        }
    }
    if (weights.front() != 1.0) invalid("the leading weight q_1 must equal 1");
    if (rhos.front() == 1.0 && rhos.size() != 1) {
        invalid("the classical limit rho_1 = 1 is only supported for a single term");
    }
    return FractionalOrders(std::move(rhos), std::move(weights));
}

FractionalOrders FractionalOrders::single(double rho, OrderDomain domain) {
    return make({rho}, {1.0}, domain);
}

std::vector<double> FractionalOrders::kernel_indices() const {
    std::vector<double> out(rhos_.size());
    out[0] = rhos_[0];
    for (std::size_t j = 1; j < rhos_.size(); ++j) out[j] = rhos_[0] - rhos_[j];
    return out;
}

MLParams MLParams::make(double beta0, std::vector<double> betas, OrderDomain domain) {
    if (!std::isfinite(beta0) || beta0 <= 0.0) {
        std::ostringstream os;
        os << "beta0 = " << beta0 << " must be positive";
        invalid(os.str());
    }
    if (betas.empty()) invalid("at least one first index beta_j is required");
    for (std::size_t j = 0; j < betas.size(); ++j) {
        if (!index_admissible(betas[j], domain)) {
            std::ostringstream os;
            os << "index beta_" << j + 1 << " = " << betas[j] << " outside "
               << (domain == OrderDomain::ClassicalLimit ? "(0,1]" : "(0,1)");
            invalid(os.str());
        }
    }
    return MLParams(beta0, std::move(betas));
}

bool MLParams::has_unit_index() const noexcept {
    for (double b : betas_) {
        if (b == 1.0) return true;
    }
    return false;
}

MLArguments MLArguments::make(std::vector<double> z) {
    if (z.empty()) invalid("at least one argument is required");
    for (std::size_t j = 0; j < z.size(); ++j) {
        if (!std::isfinite(z[j]) || z[j] > 0.0) {
            std::ostringstream os;
            os << "argument z_" << j + 1 << " = " << z[j] << " must be finite and <= 0";
            invalid(os.str());
        }
    }
    return MLArguments(std::move(z));
}

namespace mlf {

std::string_view to_string(Method method) noexcept {
    switch (method) {
        case Method::Series: return "series";
        case Method::Asymptotic: return "asymptotic";
        case Method::Contour: return "contour";
        case Method::ClosedForm: return "closed-form";
        case Method::Oracle: return "oracle";
    }
    return "unknown";
}

double reciprocal_gamma(double x) {
    if (x <= 0.0 && x == std::floor(x)) return 0.0;
    if (x > 170.0) return std::exp(-detail::lgamma_pos(x));
    const double g = detail::tgamma_quiet(x);
    return std::isfinite(g) ? 1.0 / g : 0.0;
}

}  // namespace mlf
}  // namespace fractoback
