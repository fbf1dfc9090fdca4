#include "fractoback/caputo.hpp"
#include "fractoback/error.hpp"

#include <cmath>
#include <sstream>

namespace fractoback {

namespace {

void check_samples(const TimeGrid& grid, std::span<const double> samples) {
    if (samples.size() != grid.nodes().size()) {
        std::ostringstream os;
        os << "grid has " << grid.nodes().size() << " nodes but " << samples.size() << " samples were given";
        throw Error(ErrorKind::GridMismatch, os.str());
    }
}

}  // namespace

TimeGrid TimeGrid::uniform(double a, double b, std::size_t steps) {
    if (steps < 2) throw Error(ErrorKind::InvalidParams, "a time grid needs at least 2 steps");
    if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
        throw Error(ErrorKind::InvalidParams, "a time grid needs finite a < b");
    }
    const double h = (b - a) / static_cast<double>(steps);
    std::vector<double> t(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) t[i] = a + h * static_cast<double>(i);
    t.back() = b;
    return TimeGrid(std::move(t), h);
}

std::vector<double> caputo_l1(const TimeGrid& grid, std::span<const double> samples, double rho) {
    if (!(rho > 0.0 && rho < 1.0)) {
        std::ostringstream os;
        os << "L1 scheme needs an order in (0, 1), got " << rho;
        throw Error(ErrorKind::InvalidOrder, os.str());
    }
    check_samples(grid, samples);
    const std::size_t n = grid.steps();
    std::vector<double> b(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i);
        b[i] = std::pow(x + 1.0, 1.0 - rho) - std::pow(x, 1.0 - rho);
    }
    std::vector<double> diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = samples[i + 1] - samples[i];
    const double scale = std::pow(grid.step(), -rho) / std::tgamma(2.0 - rho);
    std::vector<double> out(n);
    for (std::size_t m = 1; m <= n; ++m) {
        double acc = 0.0;
        for (std::size_t i = 0; i < m; ++i) acc += b[i] * diff[m - 1 - i];
        out[m - 1] = scale * acc;
    }
    return out;
}

std::vector<double> backward_difference(const TimeGrid& grid, std::span<const double> samples) {
    check_samples(grid, samples);
    std::vector<double> out(grid.steps());
    for (std::size_t m = 1; m <= grid.steps(); ++m) out[m - 1] = (samples[m] - samples[m - 1]) / grid.step();
    return out;
}

ResidualResult residual(const DiagonalOperator& op, const FractionalOrders& orders, const TimeGrid& grid,
                        const TrajectoryResult& trajectory, const SourceTerm& f, double report_from) {
    const auto nodes = grid.nodes();
    if (nodes.front() != 0.0) {
        throw Error(ErrorKind::GridMismatch, "the residual grid must start at t = 0, the derivative's base point");
    }
    if (trajectory.times.size() != nodes.size()) {
        std::ostringstream os;
        os << "trajectory has " << trajectory.times.size() << " times, grid has " << nodes.size() << " nodes";
        throw Error(ErrorKind::GridMismatch, os.str());
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (std::abs(trajectory.times[i] - nodes[i]) > 1e-12 * std::max(1.0, std::abs(nodes[i]))) {
            std::ostringstream os;
            os << "trajectory time " << trajectory.times[i] << " does not match grid node " << nodes[i];
            throw Error(ErrorKind::GridMismatch, os.str());
        }
    }
    const std::size_t n_modes = op.size();
    if (f.size() != n_modes) throw Error(ErrorKind::LengthMismatch, "source and operator sizes differ");

    const auto rho = orders.rhos();
    const auto q = orders.weights();
    ResidualResult out;
    std::size_t first = 1;
    while (first < nodes.size() && nodes[first] < report_from) ++first;
    for (std::size_t m = first; m < nodes.size(); ++m) out.times.push_back(nodes[m]);
    out.per_mode.assign(out.times.size(), std::vector<double>(n_modes, 0.0));

    std::vector<double> u(nodes.size());
    for (std::size_t k = 0; k < n_modes; ++k) {
        for (std::size_t i = 0; i < nodes.size(); ++i) u[i] = trajectory.states[i][k];
        std::vector<double> lhs(grid.steps(), 0.0);
        for (std::size_t j = 0; j < orders.size(); ++j) {
            const auto d = rho[j] == 1.0 ? backward_difference(grid, u) : caputo_l1(grid, u, rho[j]);
            for (std::size_t m = 0; m < d.size(); ++m) lhs[m] += q[j] * d[m];
        }
        const double lambda = op.eigenvalue(k);
        for (std::size_t m = first; m < nodes.size(); ++m) {
            const double r = lhs[m - 1] + lambda * u[m] - f.coefficient(k, nodes[m]);
            out.per_mode[m - first][k] = r;
            out.max_abs = std::max(out.max_abs, std::abs(r));
        }
    }
    return out;
}

}  // namespace fractoback
