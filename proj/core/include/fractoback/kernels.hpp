#pragma once

#include "fractoback/mlf.hpp"

namespace fractoback {

/// Relaxation function omega(t; lambda) = 1 - lambda t^{rho_1} E_{rho', rho_1+1}(-lambda t^{rho_1}, *),
/// the per-mode decay factor of the homogeneous solution; omega(0) = 1.
///
/// Evaluated through the equivalent positive decomposition
///   omega = sum_j q_j t^{rho_1 - rho_j} E_{rho', 1 + rho_1 - rho_j}(-lambda t^{rho_1}, *),
/// which avoids the 1 - (~1) cancellation for large lambda t^{rho_1}.
mlf::EvalResult relaxation_eval(const FractionalOrders& orders, double lambda, double t,
                                const mlf::EvalConfig& config = {});

double relaxation(const FractionalOrders& orders, double lambda, double t,
                  const mlf::EvalConfig& config = {});

/// Source kernel xi^{rho_1 - 1} E_{rho', rho_1}(-lambda xi^{rho_1}, *), singular at xi = 0.
double propagator(const FractionalOrders& orders, double lambda, double xi,
                  const mlf::EvalConfig& config = {});

/// The propagator with its singular factor removed, in the variable s = xi^{rho_1}:
///   E_{rho', rho_1}(-lambda s, -q_2 s^{(rho_1-rho_2)/rho_1}, ...).
/// Finite at s = 0, where it equals 1/Gamma(rho_1).
double scaled_propagator(const FractionalOrders& orders, double lambda, double s,
                         const mlf::EvalConfig& config = {});

inline constexpr int kTalbotNodes = 32;

/// Independent check on relaxation(): fixed-Talbot inversion (long double) of the
/// Laplace transform (sum_j q_j s^{rho_j - 1}) / (sum_j q_j s^{rho_j} + lambda).
double relaxation_oracle(const FractionalOrders& orders, double lambda, double t,
                         int nodes = kTalbotNodes);

}  // namespace fractoback
