#pragma once

#include "fractoback/source.hpp"
#include "fractoback/spectral.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fractoback::app {

struct PresetInfo {
    std::string name;     ///< a spelling that parses as-is
    std::string kind;     ///< "state" or "profile"
    std::string summary;
};

/// Named coefficient vectors:
///   zero, mode:k, poly (x(pi - x)), bump (Gaussian at pi/2), random:band,
///   decay:p (g_k = k^-p), coeffs:a,b,c,...
/// poly and bump are sampled on a fine grid and projected, so they need the dirichlet1d basis.
SpectralVector make_state(std::string_view preset, const DiagonalOperator& op, std::uint64_t seed);

/// Time profiles h(t): const:c, linear:a,b (a + b t), poly:c0,c1,..., exp:rate, exp:amplitude,rate.
TimeProfile make_profile(std::string_view preset);

struct SourceSpec;

/// Separable source g h(t) from the spatial and profile presets; with `sampled` > 0
/// the same source is tabulated on that many uniform times over [0, T] instead.
SourceTerm make_source(const SourceSpec& spec, const DiagonalOperator& op, double T, std::uint64_t seed);

/// Fine grid used by the projected presets.
SpatialGrid preset_grid(std::size_t n_modes);

std::vector<PresetInfo> list_presets();

}  // namespace fractoback::app
