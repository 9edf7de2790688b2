#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fcable/weights.hpp"

namespace fcable {

/// A sampled trajectory u^0..u^k on the uniform time grid t_j = j * step.
/// Times are derived from the index, never stored.
struct TimeHistory {
    double step = 0.0;
    std::vector<double> values;
};

/// The un-scaled history sum  sum_{l=0}^{k} w_l u^{k-l}.
/// Throws std::length_error if the weight table is shorter than k+1 or
/// the history does not reach index k.
double history_convolution(const WeightSequence& w, const TimeHistory& h,
                           std::size_t k);

/// Midpoint Riemann-Liouville application: step^{-order} times the history
/// convolution. Second-order approximation to the derivative of order
/// w.order at the half-point t_{k+1/2} for smooth u with u(0) = 0.
/// Weight tables are computed once by the caller and passed in.
double midpoint_rl_apply(const WeightSequence& w, const TimeHistory& h,
                         std::size_t k);

/// Classical first-order Grunwald-Letnikov application at t_k using the
/// binomial weights g (see binomial_weights). Serves as an independent
/// first-order oracle for the midpoint formula.
double gl_first_order_apply(double order, std::span<const double> g,
                            const TimeHistory& h, std::size_t k);

/// Exact Riemann-Liouville derivative of t^exponent:
///   Gamma(exponent+1) / Gamma(exponent+1-order) * t^(exponent-order).
/// Requires t >= 0, exponent > 0 and 0 < order < exponent + 1.
double exact_rl_monomial(double exponent, double order, double t);

}  // namespace fcable
