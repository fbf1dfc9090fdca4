#include "fractoback/app/runner.hpp"
#include "fractoback/app/presets.hpp"
#include "fractoback/backward.hpp"
#include "fractoback/error.hpp"
#include "fractoback/forward.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <numeric>

namespace fractoback::app {

namespace {

std::uint64_t final_seed(const ExperimentConfig& c) { return c.seed + 1; }
std::uint64_t source_seed(const ExperimentConfig& c) { return c.seed + 2; }

std::vector<double> output_times(const ExperimentConfig& c) {
    std::vector<double> times{0.0};
    if (c.time.grid == "uniform") {
        for (std::size_t i = 1; i <= c.time.points; ++i) times.push_back(c.time.T * double(i) / double(c.time.points));
    } else {
        const auto g = geometric_time_grid(c.time.T, c.time.points, c.time.t_min);
        times.insert(times.end(), g.begin(), g.end());
    }
    return times;
}

double relative(const SpectralVector& a, const SpectralVector& b) {
    const double scale = std::sqrt(std::inner_product(b.coeffs().begin(), b.coeffs().end(), b.coeffs().begin(), 0.0));
    double diff = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) diff += (a[i] - b[i]) * (a[i] - b[i]);
    return scale > 0.0 ? std::sqrt(diff) / scale : std::sqrt(diff);
}

SpectralVector final_state(const DiagonalOperator& op, const FractionalOrders& orders, const SpectralVector& phi,
                           const SourceTerm& f, double T, const ForwardOptions& opts) {
    const double t[] = {T};
    return forward_solve(op, orders, phi, f, t, opts).states.front();
}

Table mode_table(const DiagonalOperator& op, const ReconstructionResult& r, const SpectralVector& Phi,
                 const SpectralVector* phi) {
    Table t{"modes", {"k", "lambda", "D", "amplification", "Phi", "phi_hat"}, {}};
    if (phi) t.columns.push_back("phi");
    for (std::size_t k = 0; k < op.size(); ++k) {
        std::vector<double> row = {double(k + 1), op.eigenvalue(k), r.denominators[k], r.amplification[k], Phi[k],
                                   r.phi_hat[k]};
        if (phi) row.push_back((*phi)[k]);
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace

EvalReport run_forward(const ExperimentConfig& c) {
    const auto op = make_operator(c);
    const auto orders = make_orders(c);
    const auto phi = make_state(c.data.initial, op, c.seed);
    const auto f = make_source(c.source, op, c.time.T, source_seed(c));
    const auto times = output_times(c);
    const auto traj = forward_solve(op, orders, phi, f, times, make_forward_options(c));

    EvalReport report = smoothing_check(traj, op, orders, phi, f, c.source.eps);
    report.id = c.id;
    Table t{"trajectory", {"t", "k", "u_k", "norm1", "norm0"}, {}};
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        for (std::size_t k = 0; k < op.size(); ++k) {
            t.rows.push_back({traj.times[i], double(k + 1), traj.states[i][k], traj.norm1[i], traj.norm0[i]});
        }
    }
    report.tables.insert(report.tables.begin(), std::move(t));
    report.set_constant("initial_condition_error", relative(traj.states.front(), phi));
    report.set_flag("initial_condition_exact", report.constant("initial_condition_error") == 0.0);
    return report;
}

EvalReport run_backward(const ExperimentConfig& c) {
    const auto op = make_operator(c);
    const auto orders = make_orders(c);
    const auto Phi = make_state(c.data.final_data, op, final_seed(c));
    const auto f = make_source(c.source, op, c.time.T, source_seed(c));
    const auto opts = make_forward_options(c);
    const auto r = backward_solve({op, orders, c.time.T, Phi, f}, opts);

    EvalReport report = r.diagnostics;
    report.id = c.id;
    report.tables.push_back(mode_table(op, r, Phi, nullptr));
    const double rehit = relative(final_state(op, orders, r.phi_hat, f, c.time.T, opts), Phi);
    report.set_constant("rehit_error", rehit);
    report.set_constant("max_amplification", *std::max_element(r.amplification.begin(), r.amplification.end()));
    report.set_flag("final_data_reproduced", rehit <= 1e-8);
    return report;
}

EvalReport run_roundtrip(const ExperimentConfig& c) {
    const auto op = make_operator(c);
    const auto orders = make_orders(c);
    const auto phi = make_state(c.data.initial, op, c.seed);
    const auto f = make_source(c.source, op, c.time.T, source_seed(c));
    const auto opts = make_forward_options(c);
    const auto Phi = final_state(op, orders, phi, f, c.time.T, opts);
    const auto r = backward_solve({op, orders, c.time.T, Phi, f}, opts);

    EvalReport report = r.diagnostics;
    report.id = c.id;
    report.tables.push_back(mode_table(op, r, Phi, &phi));
    const double err = relative(r.phi_hat, phi);
    const double rehit = relative(final_state(op, orders, r.phi_hat, f, c.time.T, opts), Phi);
    report.set_constant("reconstruction_error", err);
    report.set_constant("rehit_error", rehit);
    report.set_flag("reconstruction_accurate", err <= 1e-6);
    report.set_flag("final_data_reproduced", rehit <= 1e-8);
    return report;
}

EvalReport run_illposed(const ExperimentConfig& c) {
    const auto op = c.op.basis == BasisKind::DirichletLaplacian1D
                        ? make_operator(c, std::max(c.op.n_modes, c.illposed.k_max))
                        : make_operator(c);
    IllposednessOptions o;
    o.eps = c.illposed.eps;
    o.k_min = c.illposed.k_min;
    o.k_max = c.illposed.k_max;
    o.noise = c.illposed.noise;
    EvalReport report = illposedness_demo(op, make_orders(c), c.time.T, o, c.mlf);
    report.id = c.id;
    return report;
}

EvalReport run_conditional_stability(const ExperimentConfig& c) {
    const auto op = make_operator(c);
    const auto bound = PrioriBound::make(c.stability.eps, c.stability.B0);
    const auto cases = stability_family(op, bound, 2 * c.stability.family, c.seed);
    StabilityOptions s;
    s.scales = c.stability.scales;
    s.base_size = c.stability.family;
    EvalReport report = conditional_stability_check(op, make_orders(c), c.time.T, bound, cases, s, make_forward_options(c));
    report.id = c.id;
    report.set_constant("seed", static_cast<double>(c.seed));
    return report;
}

EvalReport run_two_sided(const ExperimentConfig& c) {
    const auto orders = make_orders(c);
    EvalReport report;
    report.id = c.id;
    if (c.op.basis == BasisKind::AbstractDiagonal) {
        report.merge(two_sided_estimate(make_operator(c), orders, c.time.T, c.two_sided.family, c.seed, c.mlf), "");
        report.notes.push_back("diagonal spectrum: no refinement study");
        return report;
    }
    const std::size_t n = c.op.n_modes;
    const auto coarse = two_sided_estimate(make_operator(c, n), orders, c.time.T, c.two_sided.family, c.seed, c.mlf);
    const auto fine = two_sided_estimate(make_operator(c, 2 * n), orders, c.time.T, c.two_sided.family, c.seed, c.mlf);
    report.merge(coarse, "N.");
    report.merge(fine, "2N.");
    const double dmin = std::abs(fine.constant("ratio_min") - coarse.constant("ratio_min")) / coarse.constant("ratio_min");
    const double dmax = std::abs(fine.constant("ratio_max") - coarse.constant("ratio_max")) / coarse.constant("ratio_max");
    report.set_constant("N", double(n));
    report.set_constant("ratio_min_change", dmin);
    report.set_constant("ratio_max_change", dmax);
    report.set_flag("interval_stable_under_refinement", dmin < 0.1 && dmax < 0.1);
    return report;
}

RunOutcome run(const std::string& command, const ExperimentConfig& config) {
    using Fn = EvalReport (*)(const ExperimentConfig&);
    Fn fn = nullptr;
    if (command == "forward") fn = run_forward;
    if (command == "backward") fn = run_backward;
    if (command == "roundtrip") fn = run_roundtrip;
    if (command == "illposed-demo") fn = run_illposed;
    if (command == "conditional-stability") fn = run_conditional_stability;
    if (command == "two-sided") fn = run_two_sided;
    if (!fn) throw Error(ErrorKind::Config, "unknown experiment '" + command + "'");
    const auto start = std::chrono::steady_clock::now();
    RunOutcome out{command, fn(config), 0.0};
    out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::filesystem::path output_dir(const ExperimentConfig& config) {
    if (!config.output_dir.empty()) return config.output_dir;
    if (const char* env = std::getenv("FRACTOBACK_OUTPUT_DIR"); env && *env) return env;
    return "fractoback-out";
}

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string format_csv(const Table& table) {
    std::string out;
    for (std::size_t j = 0; j < table.columns.size(); ++j) out += (j ? "," : "") + table.columns[j];
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ',';
            out += format_number(row[j]);
        }
        out += '\n';
    }
    return out;
}

std::string format_json(const RunOutcome& o, const ExperimentConfig& config, const std::vector<std::string>& files) {
    using nlohmann::ordered_json;
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);

    ordered_json j;
    j["header"] = {{"experiment", o.report.id}, {"command", o.command}, {"timestamp", stamp},
                   {"wall_seconds", o.wall_seconds}};
    j["pass"] = o.report.all_pass();
    ordered_json flags = ordered_json::object();
    for (const auto& [k, v] : o.report.flags) flags[k] = v;
    j["flags"] = flags;
    ordered_json constants = ordered_json::object();
    for (const auto& [k, v] : o.report.constants) {
        constants[k] = std::isfinite(v) ? ordered_json(v) : ordered_json(format_number(v));
    }
    j["constants"] = constants;
    j["notes"] = o.report.notes;
    ordered_json tables = ordered_json::array();
    for (std::size_t i = 0; i < o.report.tables.size(); ++i) {
        const auto& t = o.report.tables[i];
        tables.push_back({{"name", t.name}, {"file", i < files.size() ? files[i] : ""}, {"columns", t.columns},
                          {"rows", t.rows.size()}});
    }
    j["tables"] = tables;
    j["config"] = dump_config(config);
    return j.dump(2) + "\n";
}

std::vector<std::filesystem::path> write_outputs(const RunOutcome& o, const ExperimentConfig& config,
                                                 const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(ErrorKind::Io, "cannot create output directory '" + dir.string() + "': " + ec.message());
    auto write = [](const std::filesystem::path& path, const std::string& text) {
        std::ofstream out(path, std::ios::binary);
        out << text;
        out.close();
        if (!out) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
    };
    const std::string stem = o.report.id + "_" + o.command;
    std::vector<std::filesystem::path> written;
    std::vector<std::string> names;
    for (const auto& t : o.report.tables) {
        const auto path = dir / (stem + "_" + t.name + ".csv");
        write(path, format_csv(t));
        written.push_back(path);
        names.push_back(path.filename().string());
    }
    const auto json = dir / (stem + ".json");
    write(json, format_json(o, config, names));
    written.push_back(json);
    return written;
}

}  // namespace fractoback::app
