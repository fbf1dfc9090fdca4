#include "fractoback/error.hpp"
#include "fractoback/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fractoback {

namespace {

template <class T>
void upsert(std::vector<std::pair<std::string, T>>& items, const std::string& name, T value) {
    auto it = std::find_if(items.begin(), items.end(), [&](const auto& p) { return p.first == name; });
    if (it == items.end()) {
        items.emplace_back(name, value);
    } else {
        it->second = value;
    }
}

template <class T>
T lookup(const std::vector<std::pair<std::string, T>>& items, const std::string& name) {
    auto it = std::find_if(items.begin(), items.end(), [&](const auto& p) { return p.first == name; });
    if (it == items.end()) throw std::out_of_range("no report entry named '" + name + "'");
    return it->second;
}

}  // namespace

void EvalReport::set_constant(const std::string& name, double value) { upsert(constants, name, value); }
void EvalReport::set_flag(const std::string& name, bool value) { upsert(flags, name, value); }
double EvalReport::constant(const std::string& name) const { return lookup(constants, name); }
bool EvalReport::flag(const std::string& name) const { return lookup(flags, name); }

const Table& EvalReport::table(const std::string& name) const {
    auto it = std::find_if(tables.begin(), tables.end(), [&](const Table& t) { return t.name == name; });
    if (it == tables.end()) throw std::out_of_range("no report table named '" + name + "'");
    return *it;
}

bool EvalReport::all_pass() const {
    return std::all_of(flags.begin(), flags.end(), [](const auto& p) { return p.second; });
}

void EvalReport::merge(const EvalReport& other, const std::string& prefix) {
    for (const auto& [k, v] : other.constants) set_constant(prefix + k, v);
    for (const auto& [k, v] : other.flags) set_flag(prefix + k, v);
    for (Table t : other.tables) {
        t.name = prefix + t.name;
        tables.push_back(std::move(t));
    }
    for (const auto& n : other.notes) notes.push_back(prefix + n);
}

LineFit fit_loglog(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw Error(ErrorKind::LengthMismatch, "fit_loglog: x and y differ in length");
    if (x.size() < 2) throw Error(ErrorKind::InvalidParams, "fit_loglog needs at least two points");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
            throw Error(ErrorKind::InvalidParams, "fit_loglog needs positive data");
        }
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw Error(ErrorKind::InvalidParams, "fit_loglog needs distinct x values");
    LineFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

std::vector<double> halving_orders(std::span<const double> errors) {
    std::vector<double> out;
    for (std::size_t i = 0; i + 1 < errors.size(); ++i) out.push_back(std::log2(errors[i] / errors[i + 1]));
    return out;
}

}  // namespace fractoback
