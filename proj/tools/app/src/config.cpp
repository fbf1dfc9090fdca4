#include "fractoback/app/config.hpp"
#include "fractoback/app/presets.hpp"
#include "fractoback/error.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace fractoback::app {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& field, const std::string& why) {
    throw Error(ErrorKind::Config, where + ": " + field + ": " + why);
}

std::string where(const std::string& origin, const YAML::Node& node) {
    return origin + ":" + std::to_string(node.Mark().line + 1);
}

class Reader {
public:
    Reader(ExperimentConfig& cfg, std::string origin) : cfg_(cfg), origin_(std::move(origin)) {}

    void section(const YAML::Node& root, const std::string& name, const std::set<std::string>& keys,
                 const std::function<void(const YAML::Node&, const std::string&)>& each) {
        const YAML::Node node = root[name];
        if (!node) return;
        if (!node.IsMap()) fail(where(origin_, node), name, "expected a mapping");
        for (const auto& kv : node) {
            const std::string key = kv.first.as<std::string>();
            const std::string field = name + "." + key;
            if (!keys.count(key)) fail(where(origin_, kv.first), field, "unknown key");
            cfg_.origins[field] = where(origin_, kv.second);
            each(kv.second, field);
        }
    }

    template <class T>
    T scalar(const YAML::Node& node, const std::string& field) {
        if (!node.IsScalar()) fail(where(origin_, node), field, "expected a scalar");
        try {
            return node.as<T>();
        } catch (const YAML::Exception&) {
            fail(where(origin_, node), field, "cannot read '" + node.Scalar() + "' as " + type_name<T>());
        }
    }

    std::size_t count(const YAML::Node& node, const std::string& field) {
        const auto v = scalar<long long>(node, field);
        if (v < 0) fail(where(origin_, node), field, "must be nonnegative");
        return static_cast<std::size_t>(v);
    }

    std::vector<double> list(const YAML::Node& node, const std::string& field) {
        if (!node.IsSequence()) fail(where(origin_, node), field, "expected a list");
        std::vector<double> out;
        for (std::size_t i = 0; i < node.size(); ++i) out.push_back(scalar<double>(node[i], field + "[" + std::to_string(i) + "]"));
        return out;
    }

private:
    template <class T>
    static const char* type_name() {
        if constexpr (std::is_same_v<T, double>) return "a number";
        if constexpr (std::is_same_v<T, bool>) return "a boolean";
        if constexpr (std::is_integral_v<T>) return "an integer";
        return "a string";
    }

    ExperimentConfig& cfg_;
    std::string origin_;
};

}  // namespace

std::string ExperimentConfig::origin_of(const std::string& field) const {
    auto it = origins.find(field);
    return it == origins.end() ? std::string("<default>") : it->second;
}

ExperimentConfig parse_config(std::string_view text, const std::string& origin) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::ParserException& e) {
        throw Error(ErrorKind::Config, origin + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
    }
    ExperimentConfig cfg;
    if (root.IsNull()) return cfg;
    if (!root.IsMap()) throw Error(ErrorKind::Config, origin + ": top level must be a mapping");

    static const std::set<std::string> sections = {"experiment", "operator", "orders", "time", "data", "source",
                                                   "mlf", "quadrature", "illposed", "stability", "two_sided", "output"};
    for (const auto& kv : root) {
        const std::string key = kv.first.as<std::string>();
        if (!sections.count(key)) fail(where(origin, kv.first), key, "unknown section");
    }

    Reader r(cfg, origin);
    r.section(root, "experiment", {"id", "seed"}, [&](const YAML::Node& n, const std::string& f) {
        if (f == "experiment.id") cfg.id = r.scalar<std::string>(n, f);
        if (f == "experiment.seed") cfg.seed = r.scalar<std::uint64_t>(n, f);
    });
    r.section(root, "operator", {"basis", "n_modes", "eigenvalues"}, [&](const YAML::Node& n, const std::string& f) {
        if (f == "operator.basis") {
            const auto b = r.scalar<std::string>(n, f);
            if (b == "dirichlet1d") {
                cfg.op.basis = BasisKind::DirichletLaplacian1D;
            } else if (b == "diagonal") {
                cfg.op.basis = BasisKind::AbstractDiagonal;
            } else {
                fail(where(origin, n), f, "expected 'dirichlet1d' or 'diagonal', got '" + b + "'");
            }
        }
        if (f == "operator.n_modes") cfg.op.n_modes = r.count(n, f);
        if (f == "operator.eigenvalues") cfg.op.eigenvalues = r.list(n, f);
    });
    r.section(root, "orders", {"rhos", "weights", "classical_limit"}, [&](const YAML::Node& n, const std::string& f) {
        if (f == "orders.rhos") cfg.rhos = r.list(n, f);
        if (f == "orders.weights") cfg.weights = r.list(n, f);
        if (f == "orders.classical_limit") cfg.classical_limit = r.scalar<bool>(n, f);
    });
    r.section(root, "time", {"T", "grid", "points", "t_min"}, [&](const YAML::Node& n, const std::string& f) {
        if (f == "time.T") cfg.time.T = r.scalar<double>(n, f);
        if (f == "time.grid") cfg.time.grid = r.scalar<std::string>(n, f);
        if (f == "time.points") cfg.time.points = r.count(n, f);
        if (f == "time.t_min") cfg.time.t_min = r.scalar<double>(n, f);
    });
    r.section(root, "data", {"initial", "final"}, [&](const YAML::Node& n, const std::string& f) {
        if (f == "data.initial") cfg.data.initial = r.scalar<std::string>(n, f);
        if (f == "data.final") cfg.data.final_data = r.scalar<std::string>(n, f);
    });
    r.section(root, "source", {"spatial", "profile", "eps", "sampled"}, [&](const YAML::Node& n, const std::string& f) {
        if (f == "source.spatial") cfg.source.spatial = r.scalar<std::string>(n, f);
        if (f == "source.profile") cfg.source.profile = r.scalar<std::string>(n, f);
        if (f == "source.eps") cfg.source.eps = r.scalar<double>(n, f);
        if (f == "source.sampled") cfg.source.sampled = r.count(n, f);
    });
    r.section(root, "mlf", {"series_tol", "max_shells", "z_switch", "series_reach", "asymptotic_switch", "series_max_rel_error", "contour_rel_tol"},
              [&](const YAML::Node& n, const std::string& f) {
                  if (f == "mlf.series_tol") cfg.mlf.series.tol = r.scalar<double>(n, f);
                  if (f == "mlf.max_shells") cfg.mlf.series.max_shells = r.scalar<int>(n, f);
                  if (f == "mlf.z_switch") cfg.mlf.z_switch = r.scalar<double>(n, f);
                  if (f == "mlf.series_reach") cfg.mlf.series_reach = r.scalar<double>(n, f);
                  if (f == "mlf.asymptotic_switch") cfg.mlf.asymptotic_switch = r.scalar<double>(n, f);
                  if (f == "mlf.series_max_rel_error") cfg.mlf.series_max_rel_error = r.scalar<double>(n, f);
                  if (f == "mlf.contour_rel_tol") cfg.mlf.contour_rel_tol = r.scalar<double>(n, f);
              });
    r.section(root, "quadrature", {"mesh", "nodes", "grading_ratio", "min_fraction", "panels", "abs_tol", "rel_tol", "max_depth", "adaptive"},
              [&](const YAML::Node& n, const std::string& f) {
                  auto& q = cfg.quadrature;
                  if (f == "quadrature.mesh") {
                      const auto m = r.scalar<std::string>(n, f);
                      if (m == "graded") {
                          q.mesh = MeshKind::Graded;
                      } else if (m == "uniform") {
                          q.mesh = MeshKind::Uniform;
                      } else {
                          fail(where(origin, n), f, "expected 'graded' or 'uniform', got '" + m + "'");
                      }
                  }
                  if (f == "quadrature.nodes") q.nodes = r.scalar<int>(n, f);
                  if (f == "quadrature.grading_ratio") q.grading_ratio = r.scalar<double>(n, f);
                  if (f == "quadrature.min_fraction") q.min_fraction = r.scalar<double>(n, f);
                  if (f == "quadrature.panels") q.uniform_panels = r.scalar<int>(n, f);
                  if (f == "quadrature.abs_tol") q.abs_tol = r.scalar<double>(n, f);
                  if (f == "quadrature.rel_tol") q.rel_tol = r.scalar<double>(n, f);
                  if (f == "quadrature.max_depth") q.max_depth = r.scalar<int>(n, f);
                  if (f == "quadrature.adaptive") q.adaptive = r.scalar<bool>(n, f);
              });
    r.section(root, "illposed", {"eps", "k_min", "k_max", "noise"}, [&](const YAML::Node& n, const std::string& f) {
        if (f == "illposed.eps") cfg.illposed.eps = r.scalar<double>(n, f);
        if (f == "illposed.k_min") cfg.illposed.k_min = r.count(n, f);
        if (f == "illposed.k_max") cfg.illposed.k_max = r.count(n, f);
        if (f == "illposed.noise") cfg.illposed.noise = r.scalar<double>(n, f);
    });
    r.section(root, "stability", {"eps", "B0", "family", "scales"}, [&](const YAML::Node& n, const std::string& f) {
        if (f == "stability.eps") cfg.stability.eps = r.scalar<double>(n, f);
        if (f == "stability.B0") cfg.stability.B0 = r.scalar<double>(n, f);
        if (f == "stability.family") cfg.stability.family = r.count(n, f);
        if (f == "stability.scales") cfg.stability.scales = r.list(n, f);
    });
    r.section(root, "two_sided", {"family"}, [&](const YAML::Node& n, const std::string& f) {
        if (f == "two_sided.family") cfg.two_sided.family = r.count(n, f);
    });
    r.section(root, "output", {"dir"}, [&](const YAML::Node& n, const std::string& f) {
        if (f == "output.dir") cfg.output_dir = r.scalar<std::string>(n, f);
    });
    validate(cfg);
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open config file '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), path.string());
}

void validate(const ExperimentConfig& c) {
    auto check = [&](bool ok, const std::string& field, const std::string& why) {
        if (!ok) fail(c.origin_of(field), field, why);
    };
    // Solver preconditions, reported against the config field that carries them.
    auto rethrow = [&](const std::string& field, auto&& build) {
        try {
            build();
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Config) throw;
            fail(c.origin_of(field), field, e.what());
        }
    };
    if (c.op.basis == BasisKind::DirichletLaplacian1D) {
        check(c.op.n_modes >= 1, "operator.n_modes", "must be >= 1");
        check(c.op.eigenvalues.empty(), "operator.eigenvalues", "only allowed with basis 'diagonal'");
    } else {
        rethrow("operator.eigenvalues", [&] { DiagonalOperator::diagonal(c.op.eigenvalues); });
    }
    check(c.rhos.size() == c.weights.size(), "orders.weights",
          "has " + std::to_string(c.weights.size()) + " entries, orders.rhos has " + std::to_string(c.rhos.size()));
    rethrow("orders.rhos", [&] { make_orders(c); });
    check(c.time.T > 0.0 && std::isfinite(c.time.T), "time.T", "must be finite and > 0");
    check(c.time.grid == "geometric" || c.time.grid == "uniform", "time.grid", "expected 'geometric' or 'uniform'");
    check(c.time.points >= 2, "time.points", "must be >= 2");
    check(c.time.t_min > 0.0 && c.time.t_min < c.time.T, "time.t_min", "must lie in (0, T)");
    check(c.source.eps > 0.0 && c.source.eps < 1.0, "source.eps", "must lie in (0, 1)");
    check(c.source.sampled == 0 || c.source.sampled >= 4, "source.sampled", "must be 0 or >= 4");
    check(c.mlf.series.tol > 0.0, "mlf.series_tol", "must be > 0");
    check(c.mlf.series.max_shells >= 1, "mlf.max_shells", "must be >= 1");
    check(c.mlf.z_switch >= 0.0, "mlf.z_switch", "must be >= 0");
    check(c.mlf.asymptotic_switch > 0.0, "mlf.asymptotic_switch", "must be > 0");
    check(c.mlf.contour_rel_tol > 0.0, "mlf.contour_rel_tol", "must be > 0");
    const auto& q = c.quadrature;
    check(q.nodes == 2 || q.nodes == 3 || q.nodes == 4 || q.nodes == 5 || q.nodes == 7 || q.nodes == 10 ||
              q.nodes == 15 || q.nodes == 20,
          "quadrature.nodes", "must be one of 2, 3, 4, 5, 7, 10, 15, 20");
    check(q.grading_ratio > 0.0 && q.grading_ratio < 1.0, "quadrature.grading_ratio", "must lie in (0, 1)");
    check(q.min_fraction > 0.0 && q.min_fraction < 1.0, "quadrature.min_fraction", "must lie in (0, 1)");
    check(q.uniform_panels >= 1, "quadrature.panels", "must be >= 1");
    check(q.abs_tol >= 0.0 && q.rel_tol >= 0.0, "quadrature.abs_tol", "tolerances must be >= 0");
    check(q.max_depth >= 0, "quadrature.max_depth", "must be >= 0");
    check(c.illposed.eps > 0.0, "illposed.eps", "must be > 0");
    check(c.illposed.k_min >= 1 && c.illposed.k_min < c.illposed.k_max, "illposed.k_min", "must satisfy 1 <= k_min < k_max");
    check(c.stability.eps > 0.0, "stability.eps", "must be > 0");
    check(c.stability.B0 > 0.0, "stability.B0", "must be > 0");
    check(c.stability.family >= 1, "stability.family", "must be >= 1");
    for (double s : c.stability.scales) check(s > 0.0, "stability.scales", "scales must be > 0");
    check(c.two_sided.family >= 1, "two_sided.family", "must be >= 1");

    const auto op = make_operator(c);
    rethrow("data.initial", [&] { make_state(c.data.initial, op, c.seed); });
    rethrow("data.final", [&] { make_state(c.data.final_data, op, c.seed); });
    rethrow("source.spatial", [&] { make_state(c.source.spatial, op, c.seed); });
    rethrow("source.profile", [&] { make_profile(c.source.profile); });
}

DiagonalOperator make_operator(const ExperimentConfig& c) {
    if (c.op.basis == BasisKind::AbstractDiagonal) return DiagonalOperator::diagonal(c.op.eigenvalues);
    return DiagonalOperator::dirichlet_laplacian_1d(c.op.n_modes);
}

DiagonalOperator make_operator(const ExperimentConfig& c, std::size_t n_modes) {
    if (c.op.basis == BasisKind::AbstractDiagonal) {
        throw Error(ErrorKind::Config, "operator.basis: resizing needs the dirichlet1d basis");
    }
    return DiagonalOperator::dirichlet_laplacian_1d(n_modes);
}

FractionalOrders make_orders(const ExperimentConfig& c) {
    return FractionalOrders::make(c.rhos, c.weights,
                                  c.classical_limit ? OrderDomain::ClassicalLimit : OrderDomain::Fractional);
}

ForwardOptions make_forward_options(const ExperimentConfig& c) { return {c.mlf, c.quadrature}; }

std::string dump_config(const ExperimentConfig& c) {
    YAML::Emitter out;
    out.SetDoublePrecision(17);
    out << YAML::BeginMap;
    out << YAML::Key << "experiment" << YAML::Value << YAML::BeginMap << YAML::Key << "id" << YAML::Value << c.id
        << YAML::Key << "seed" << YAML::Value << c.seed << YAML::EndMap;
    out << YAML::Key << "operator" << YAML::Value << YAML::BeginMap << YAML::Key << "basis" << YAML::Value
        << std::string(to_string(c.op.basis)) << YAML::Key << "n_modes" << YAML::Value << c.op.n_modes;
    if (!c.op.eigenvalues.empty()) out << YAML::Key << "eigenvalues" << YAML::Value << YAML::Flow << c.op.eigenvalues;
    out << YAML::EndMap;
    out << YAML::Key << "orders" << YAML::Value << YAML::BeginMap << YAML::Key << "rhos" << YAML::Value << YAML::Flow
        << c.rhos << YAML::Key << "weights" << YAML::Value << YAML::Flow << c.weights << YAML::Key << "classical_limit"
        << YAML::Value << c.classical_limit << YAML::EndMap;
    out << YAML::Key << "time" << YAML::Value << YAML::BeginMap << YAML::Key << "T" << YAML::Value << c.time.T
        << YAML::Key << "grid" << YAML::Value << c.time.grid << YAML::Key << "points" << YAML::Value << c.time.points
        << YAML::Key << "t_min" << YAML::Value << c.time.t_min << YAML::EndMap;
    out << YAML::Key << "data" << YAML::Value << YAML::BeginMap << YAML::Key << "initial" << YAML::Value
        << c.data.initial << YAML::Key << "final" << YAML::Value << c.data.final_data << YAML::EndMap;
    out << YAML::Key << "source" << YAML::Value << YAML::BeginMap << YAML::Key << "spatial" << YAML::Value
        << c.source.spatial << YAML::Key << "profile" << YAML::Value << c.source.profile << YAML::Key << "eps"
        << YAML::Value << c.source.eps << YAML::Key << "sampled" << YAML::Value << c.source.sampled << YAML::EndMap;
    out << YAML::Key << "mlf" << YAML::Value << YAML::BeginMap << YAML::Key << "series_tol" << YAML::Value
        << c.mlf.series.tol << YAML::Key << "max_shells" << YAML::Value << c.mlf.series.max_shells << YAML::Key
        << "z_switch" << YAML::Value << c.mlf.z_switch << YAML::Key << "series_reach" << YAML::Value
        << c.mlf.series_reach << YAML::Key << "asymptotic_switch" << YAML::Value << c.mlf.asymptotic_switch
        << YAML::Key << "series_max_rel_error" << YAML::Value << c.mlf.series_max_rel_error << YAML::Key
        << "contour_rel_tol" << YAML::Value << c.mlf.contour_rel_tol << YAML::EndMap;
    const auto& q = c.quadrature;
    out << YAML::Key << "quadrature" << YAML::Value << YAML::BeginMap << YAML::Key << "mesh" << YAML::Value
        << (q.mesh == MeshKind::Graded ? "graded" : "uniform") << YAML::Key << "nodes" << YAML::Value << q.nodes
        << YAML::Key << "grading_ratio" << YAML::Value << q.grading_ratio << YAML::Key << "min_fraction"
        << YAML::Value << q.min_fraction << YAML::Key << "panels" << YAML::Value << q.uniform_panels << YAML::Key
        << "abs_tol" << YAML::Value << q.abs_tol << YAML::Key << "rel_tol" << YAML::Value << q.rel_tol << YAML::Key
        << "max_depth" << YAML::Value << q.max_depth << YAML::Key << "adaptive" << YAML::Value << q.adaptive
        << YAML::EndMap;
    out << YAML::Key << "illposed" << YAML::Value << YAML::BeginMap << YAML::Key << "eps" << YAML::Value
        << c.illposed.eps << YAML::Key << "k_min" << YAML::Value << c.illposed.k_min << YAML::Key << "k_max"
        << YAML::Value << c.illposed.k_max << YAML::Key << "noise" << YAML::Value << c.illposed.noise << YAML::EndMap;
    out << YAML::Key << "stability" << YAML::Value << YAML::BeginMap << YAML::Key << "eps" << YAML::Value
        << c.stability.eps << YAML::Key << "B0" << YAML::Value << c.stability.B0 << YAML::Key << "family"
        << YAML::Value << c.stability.family << YAML::Key << "scales" << YAML::Value << YAML::Flow
        << c.stability.scales << YAML::EndMap;
    out << YAML::Key << "two_sided" << YAML::Value << YAML::BeginMap << YAML::Key << "family" << YAML::Value
        << c.two_sided.family << YAML::EndMap;
    if (!c.output_dir.empty()) {
        out << YAML::Key << "output" << YAML::Value << YAML::BeginMap << YAML::Key << "dir" << YAML::Value
            << c.output_dir << YAML::EndMap;
    }
    out << YAML::EndMap;
    return out.c_str();
}

}  // namespace fractoback::app
