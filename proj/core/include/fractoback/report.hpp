#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fractoback {

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Structured outcome of one experiment: tables, fitted constants and pass flags.
struct EvalReport {
    std::string id;
    std::vector<Table> tables;
    std::vector<std::pair<std::string, double>> constants;
    std::vector<std::pair<std::string, bool>> flags;
    std::vector<std::string> notes;

    void set_constant(const std::string& name, double value);
    void set_flag(const std::string& name, bool value);
    /// Throws std::out_of_range for unknown names.
    double constant(const std::string& name) const;
    bool flag(const std::string& name) const;
    const Table& table(const std::string& name) const;
    bool all_pass() const;
    void merge(const EvalReport& other, const std::string& prefix);
};

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};

/// Least-squares line through (log x, log y); all entries must be positive.
LineFit fit_loglog(std::span<const double> x, std::span<const double> y);

/// Observed orders log2(e_i / e_{i+1}) for errors under successive halving.
std::vector<double> halving_orders(std::span<const double> errors);

}  // namespace fractoback
