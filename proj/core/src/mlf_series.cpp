#include "detail/gamma.hpp"
#include "detail/series.hpp"
#include "fractoback/error.hpp"
#include "fractoback/mlf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace fractoback::mlf {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct ShellStats {
    double max_term = 0.0;
    double abs_sum = 0.0;
};

enum class SeriesStatus { Converged, Aborted, Exhausted };

struct SeriesRun {
    SeriesStatus status = SeriesStatus::Exhausted;
    EvalResult result;
    int shells = 0;
};

void check_sizes(const MLParams& params, const MLArguments& args) {
    if (params.size() != args.size()) {
        std::ostringstream os;
        os << "parameter count " << params.size() << " does not match argument count "
           << args.size();
        throw Error(ErrorKind::InvalidParams, os.str());
    }
}

SeriesRun run_series(const MLParams& params, const MLArguments& args,
                     const SeriesOptions& options, double abort_above) {
    if (!(options.tol > 0.0)) throw Error(ErrorKind::InvalidParams, "series tolerance must be positive");
    if (options.max_shells < 1) throw Error(ErrorKind::InvalidParams, "max_shells must be >= 1");
    check_sizes(params, args);

    const std::size_t m = params.size();
    const double beta0 = params.beta0();
    const auto betas = params.betas();
    const auto z = args.z();

    std::vector<double> log_abs_z(m);
    std::vector<bool> zero(m);
    for (std::size_t j = 0; j < m; ++j) {
        zero[j] = z[j] == 0.0;
        log_abs_z[j] = zero[j] ? 0.0 : std::log(-z[j]);
    }

    // log k! for k = 0..max_shells
    std::vector<double> log_fact(static_cast<std::size_t>(options.max_shells) + 1, 0.0);
    for (std::size_t k = 1; k < log_fact.size(); ++k) {
        log_fact[k] = log_fact[k - 1] + std::log(static_cast<double>(k));
    }

    CompensatedSum sum;
    double total_abs = 0.0;
    double max_log = 0.0;
    std::vector<int> parts(m, 0);

    SeriesRun run;
    for (int k = 0; k <= options.max_shells; ++k) {
        ShellStats shell;
        // z_j <= 0 makes every term of shell k carry the sign (-1)^k.
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        const double log_k_fact = log_fact[static_cast<std::size_t>(k)];

        // Enumerate compositions k_1 + ... + k_M = k, last part implied.
        auto visit = [&](auto&& self, std::size_t j, int remaining, double log_coef,
                         double gamma_arg) -> void {
            if (j + 1 == m) {
                const int kj = remaining;
                if (kj > 0 && zero[j]) return;
                const double lc = log_coef - log_fact[static_cast<std::size_t>(kj)] +
                                  kj * log_abs_z[j];
                const double arg = gamma_arg + betas[j] * kj;
                const double log_term = lc - fractoback::detail::lgamma_pos(arg);
                const double mag = std::exp(log_term);
                shell.max_term = std::max(shell.max_term, mag);
                shell.abs_sum += mag;
                max_log = std::max(max_log, std::abs(log_term));
                sum.add(sign * mag);
                return;
            }
            for (int kj = 0; kj <= remaining; ++kj) {
                if (kj > 0 && zero[j]) break;
                self(self, j + 1, remaining - kj,
                     log_coef - log_fact[static_cast<std::size_t>(kj)] + kj * log_abs_z[j],
                     gamma_arg + betas[j] * kj);
            }
        };
        visit(visit, 0, k, log_k_fact, beta0);

        total_abs += shell.abs_sum;
        run.shells = k + 1;
        if (shell.max_term > abort_above) {
            run.status = SeriesStatus::Aborted;
            return run;
        }
        const double value = sum.value();
        if (k >= 1 &&
            shell.max_term < options.tol * std::max(std::abs(value), std::numeric_limits<double>::min())) {
            constexpr double eps = std::numeric_limits<double>::epsilon();
            run.status = SeriesStatus::Converged;
            run.result.value = value;
            run.result.method = Method::Series;
            // Tail proxy from the last shell plus rounding in exp/log of each term.
            run.result.est_abs_error = shell.abs_sum + eps * total_abs * (4.0 + max_log);
            return run;
        }
    }
    run.status = SeriesStatus::Exhausted;
    return run;
}

}  // namespace

EvalResult series(const MLParams& params, const MLArguments& args, const SeriesOptions& options) {
    const SeriesRun run = run_series(params, args, options, std::numeric_limits<double>::infinity());
    if (run.status != SeriesStatus::Converged) {
        std::ostringstream os;
        os << "series did not converge within " << options.max_shells << " degree shells"
           << " (|z_1| = " << -args.leading() << ")";
        throw Error(ErrorKind::NoConvergence, os.str());
    }
    return run.result;
}

namespace detail {

std::optional<EvalResult> guarded_series(const MLParams& params, const MLArguments& args,
                                         const SeriesOptions& options, double abort_above) {
    const SeriesRun run = run_series(params, args, options, abort_above);
    if (run.status != SeriesStatus::Converged) return std::nullopt;
    return run.result;
}

}  // namespace detail
}  // namespace fractoback::mlf
