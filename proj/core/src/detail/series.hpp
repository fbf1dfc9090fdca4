#pragma once

#include "fractoback/mlf.hpp"

#include <optional>

namespace fractoback::mlf::detail {

/// Series summation that gives up (nullopt) as soon as a term exceeds
/// `abort_above` in magnitude or the shell budget runs out.
std::optional<EvalResult> guarded_series(const MLParams& params, const MLArguments& args,
                                         const SeriesOptions& options, double abort_above);

}  // namespace fractoback::mlf::detail
