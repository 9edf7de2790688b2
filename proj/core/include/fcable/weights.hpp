#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fcable {

/// Quadrature weights of the midpoint discretization of the
/// Riemann-Liouville derivative of order `order`, i.e. the power-series
/// coefficients of
///
///   G(z) = ((3b+1)/(2b) - (2b+1)/b z + (b+1)/(2b) z^2)^b,   b = order.
///
/// Everything in this module is parameterized by the actual derivative
/// order b in (0,1]. The time-fractional Cable solvers discretize
/// derivatives of order 1-alpha and therefore request tables with
/// order = 1 - alpha; the substitution happens exactly once, at that
/// call site.
struct WeightSequence {
    double order = 0.0;           // b in (0,1]
    std::vector<double> weights;  // w_0 .. w_n

    std::size_t size() const { return weights.size(); }
    double operator[](std::size_t i) const { return weights[i]; }
};

/// Alternating binomial coefficients g_m = (-1)^m C(order, m), m = 0..n,
/// computed by the ratio recurrence g_m = (1 - (order+1)/m) g_{m-1}.
/// These are the classical first-order Grunwald-Letnikov weights.
/// Throws std::domain_error for order <= 0.
std::vector<double> binomial_weights(double order, std::size_t n);

/// Weights w_0..w_n from the explicit convolution of two binomial
/// expansions. O(n^2); used as the independent oracle for the recurrence.
/// Throws std::domain_error unless order is in (0,1].
WeightSequence midpoint_weights_direct(double order, std::size_t n);

/// Weights w_0..w_n from the three-term recurrence
///   w_0 = ((3b+1)/(2b))^b,
///   w_1 = -2b(2b+1)/(3b+1) w_0,
///   w_l = [2(l-1-b)(2b+1) w_{l-1} + (1+b)(2+2b-l) w_{l-2}] / ((3b+1) l).
/// O(n); the production path. Throws std::domain_error unless order in (0,1].
WeightSequence midpoint_weights_recurrence(double order, std::size_t n);

/// G(z) on the principal branch, |z| <= 1.
std::complex<double> generating_function_eval(double order,
                                              std::complex<double> z);

/// Minimum over a uniform x-grid on [0, pi] of the truncated generating
/// symbol Re[(1 + e^{ix}) sum_{k<=n_trunc} w_k e^{ikx}] of the history
/// quadrature matrix. Nonnegativity of this symbol certifies positive
/// semi-definiteness of the quadrature form underpinning stability.
double symbol_min_scan(double order, std::size_t x_points,
                       std::size_t n_trunc);

}  // namespace fcable
