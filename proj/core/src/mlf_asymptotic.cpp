#include "fractoback/error.hpp"
#include "fractoback/mlf.hpp"

#include <cmath>
#include <sstream>

namespace fractoback::mlf {

EvalResult asymptotic(const MLParams& params, const MLArguments& args, int terms, double min_abs_z1) {
    if (terms != 1 && terms != 2) {
        std::ostringstream os;
        os << "asymptotic expansion supports 1 or 2 terms, got " << terms;
        throw Error(ErrorKind::InvalidOrder, os.str());
    }
    if (params.size() != args.size()) {
        throw Error(ErrorKind::InvalidParams, "parameter and argument counts differ");
    }
    const double z1 = args.leading();
    if (std::abs(z1) < min_abs_z1) {
        std::ostringstream os;
        os << "|z_1| = " << std::abs(z1) << " is below the asymptotic threshold " << min_abs_z1;
        throw Error(ErrorKind::SmallArgument, os.str());
    }

    const double b0 = params.beta0();
    const auto b = params.betas();
    const auto z = args.z();

    const double c1 = reciprocal_gamma(b0 - b[0]);
    double c2 = reciprocal_gamma(b0 - 2.0 * b[0]);
    double others = 0.0;
    for (std::size_t j = 1; j < b.size(); ++j) {
        c2 -= z[j] * reciprocal_gamma(b0 - 2.0 * b[0] + b[j]);
        others += std::abs(z[j]);
    }

    EvalResult out;
    out.method = Method::Asymptotic;
    out.value = -c1 / z1;
    if (terms == 2) out.value -= c2 / (z1 * z1);

    // Next coefficient is not available in closed form; it carries powers of
    // z_2..z_M up to (1 + sum|z_j|)^(terms) so the bound scales with them.
    const double scale = 2.0 * (1.0 + std::abs(c1) + std::abs(c2)) * std::pow(1.0 + others, terms);
    out.est_abs_error = scale * std::pow(std::abs(z1), -(terms + 1));
    return out;
}

}  // namespace fractoback::mlf
