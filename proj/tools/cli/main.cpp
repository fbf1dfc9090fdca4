#include "fractoback/app/config.hpp"
#include "fractoback/app/presets.hpp"
#include "fractoback/app/runner.hpp"
#include "fractoback/error.hpp"
#include "fractoback/mlf.hpp"
#include "fractoback/verification/criteria.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>

namespace fb = fractoback;
namespace app = fractoback::app;

namespace {

enum Exit { kPass = 0, kConfig = 1, kNumeric = 2, kAcceptance = 3, kIo = 4 };

int exit_code(fb::ErrorKind kind) {
    if (kind == fb::ErrorKind::Io) return kIo;
    return fb::is_numeric_failure(kind) ? kNumeric : kConfig;
}

/// Command-line overrides shared by the experiment subcommands; unset ones leave the config alone.
struct Overrides {
    std::string config;
    std::optional<std::string> id, output, initial, final_data, source_spatial, source_profile, basis;
    std::optional<std::uint64_t> seed;
    std::optional<double> T, eps, B0, noise;
    std::optional<std::size_t> n_modes, kmin, kmax, family;
    std::vector<double> rhos, weights;

    void attach(CLI::App* cmd) {
        cmd->add_option("-c,--config", config, "YAML experiment file")->check(CLI::ExistingFile);
        cmd->add_option("--id", id, "experiment id (file name stem)");
        cmd->add_option("-o,--output", output, "output directory (overrides FRACTOBACK_OUTPUT_DIR)");
        cmd->add_option("--seed", seed, "seed of every randomized family");
        cmd->add_option("--T", T, "final time");
        cmd->add_option("--n-modes", n_modes, "number of modes N");
        cmd->add_option("--rho", rhos, "orders rho_1 > ... > rho_M")->delimiter(',');
        cmd->add_option("--q", weights, "weights q_1 = 1, q_j > 0")->delimiter(',');
        cmd->add_option("--initial", initial, "initial-data preset");
        cmd->add_option("--final", final_data, "final-data preset");
        cmd->add_option("--source", source_spatial, "spatial source preset");
        cmd->add_option("--profile", source_profile, "source time-profile preset");
        cmd->add_option("--eps", eps, "regularity index of the subcommand (demo, stability bound, or source)");
        cmd->add_option("--B0", B0, "a priori bound");
        cmd->add_option("--kmin", kmin, "first mode of the ill-posedness fit");
        cmd->add_option("--kmax", kmax, "last mode of the ill-posedness demo");
        cmd->add_option("--noise", noise, "final-data perturbation size");
        cmd->add_option("--family", family, "family size (stability base family or two-sided sample)");
    }

    app::ExperimentConfig apply(const std::string& command) const {
        app::ExperimentConfig c = config.empty() ? app::ExperimentConfig{} : app::load_config(config);
        auto flag = [&](const std::string& field) { c.origins[field] = "command line"; };
        if (id) c.id = *id, flag("experiment.id");
        if (output) c.output_dir = *output, flag("output.dir");
        if (seed) c.seed = *seed, flag("experiment.seed");
        if (T) c.time.T = *T, flag("time.T");
        if (n_modes) c.op.n_modes = *n_modes, flag("operator.n_modes");
        if (!rhos.empty()) c.rhos = rhos, flag("orders.rhos");
        if (!weights.empty()) c.weights = weights, flag("orders.weights");
        if (initial) c.data.initial = *initial, flag("data.initial");
        if (final_data) c.data.final_data = *final_data, flag("data.final");
        if (source_spatial) c.source.spatial = *source_spatial, flag("source.spatial");
        if (source_profile) c.source.profile = *source_profile, flag("source.profile");
        if (eps) {
            if (command == "illposed-demo") {
                c.illposed.eps = *eps, flag("illposed.eps");
            } else if (command == "conditional-stability") {
                c.stability.eps = *eps, flag("stability.eps");
            } else {
                c.source.eps = *eps, flag("source.eps");
            }
        }
        if (B0) c.stability.B0 = *B0, flag("stability.B0");
        if (kmin) c.illposed.k_min = *kmin, flag("illposed.k_min");
        if (kmax) c.illposed.k_max = *kmax, flag("illposed.k_max");
        if (noise) c.illposed.noise = *noise, flag("illposed.noise");
        if (family) {
            if (command == "two-sided") {
                c.two_sided.family = *family, flag("two_sided.family");
            } else {
                c.stability.family = *family, flag("stability.family");
            }
        }
        app::validate(c);
        return c;
    }
};

int run_experiment(const std::string& command, const Overrides& o) {
    const auto config = o.apply(command);
    const auto outcome = app::run(command, config);
    const auto files = app::write_outputs(outcome, config, app::output_dir(config));
    for (const auto& [name, value] : outcome.report.constants) {
        std::cout << "  " << name << " = " << app::format_number(value) << '\n';
    }
    for (const auto& [name, value] : outcome.report.flags) {
        std::cout << "  [" << (value ? "pass" : "FAIL") << "] " << name << '\n';
    }
    for (const auto& f : files) std::cout << "wrote " << f.string() << '\n';
    const bool pass = outcome.report.all_pass();
    std::cout << command << ": " << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? kPass : kAcceptance;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App cli{"Multi-term time-fractional diffusion: forward and backward solvers and experiments"};
    cli.require_subcommand(1);

    auto* mlf_cmd = cli.add_subcommand("mlf-eval", "Evaluate the multinomial Mittag-Leffler function of an order set");
    std::vector<double> rho, q, z;
    double beta0 = 1.0;
    std::string method = "auto";
    bool classical = false;
    mlf_cmd->add_option("--rho", rho, "orders rho_1 > ... > rho_M; kernel indices are (rho_1, rho_1 - rho_j)")
        ->delimiter(',')
        ->required();
    mlf_cmd->add_option("--q", q, "weights (default all 1)")->delimiter(',');
    mlf_cmd->add_option("--beta0", beta0, "index beta_0");
    mlf_cmd->add_option("--z", z, "arguments z_1..z_M (<= 0)")->delimiter(',')->required();
    mlf_cmd->add_option("--method", method, "auto | series | contour | asymptotic")
        ->check(CLI::IsMember({"auto", "series", "contour", "asymptotic"}));
    mlf_cmd->add_flag("--classical", classical, "admit rho_1 = 1");

    Overrides overrides[6];
    const auto& commands = app::experiment_commands();
    const char* help[] = {"Forward solve with smoothing diagnostics", "Reconstruct u(0) from final data",
                          "Forward then backward; reconstruction error", "Ill-posedness demonstration",
                          "Conditional stability ratio over a family", "Two-sided estimate ratio interval"};
    std::vector<CLI::App*> experiment;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        experiment.push_back(cli.add_subcommand(commands[i], help[i]));
        overrides[i].attach(experiment.back());
    }

    auto* validate_cmd = cli.add_subcommand("validate", "Run acceptance criteria");
    std::vector<int> criteria;
    validate_cmd->add_option("--criterion", criteria, "criterion ids (default: all)")
        ->delimiter(',')
        ->check(CLI::Range(1, fb::verification::kCriterionCount));

    auto* presets_cmd = cli.add_subcommand("list-presets", "List data and source presets");

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = cli.exit(e);
        return code == 0 ? kPass : kConfig;
    }

    try {
        if (*mlf_cmd) {
            if (q.empty()) q.assign(rho.size(), 1.0);
            const auto domain = classical ? fb::OrderDomain::ClassicalLimit : fb::OrderDomain::Fractional;
            const auto orders = fb::FractionalOrders::make(rho, q, domain);
            const auto params = fb::MLParams::make(beta0, orders.kernel_indices(), domain);
            const auto args = fb::MLArguments::make(z);
            fb::mlf::EvalResult r;
            if (method == "series") {
                r = fb::mlf::series(params, args);
            } else if (method == "contour") {
                r = fb::mlf::contour(params, args);
            } else if (method == "asymptotic") {
                r = fb::mlf::asymptotic(params, args, 2);
            } else {
                r = fb::mlf::eval(params, args);
            }
            std::printf("value %.17g\nmethod %s\nest_abs_error %.3e\n", r.value, std::string(fb::mlf::to_string(r.method)).c_str(),
                        r.est_abs_error);
            return kPass;
        }
        for (std::size_t i = 0; i < experiment.size(); ++i) {
            if (*experiment[i]) return run_experiment(commands[i], overrides[i]);
        }
        if (*validate_cmd) {
            if (criteria.empty()) {
                for (int id = 1; id <= fb::verification::kCriterionCount; ++id) criteria.push_back(id);
            }
            bool pass = true;
            for (int id : criteria) {
                const auto r = fb::verification::run_criterion(id);
                std::cout << fb::verification::format_line(r) << std::endl;
                pass = pass && r.pass;
            }
            return pass ? kPass : kAcceptance;
        }
        if (*presets_cmd) {
            for (const auto& p : app::list_presets()) std::printf("%-8s %-20s %s\n", p.kind.c_str(), p.name.c_str(), p.summary.c_str());
            return kPass;
        }
    } catch (const fb::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumeric;
    }
    return kPass;
}
