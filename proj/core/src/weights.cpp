#include "fcable/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fcable {

namespace {

void require_unit_interval(double order) {
    if (!(order > 0.0) || order > 1.0)
        throw std::domain_error("fractional order must lie in (0, 1]");
}

}  // namespace

std::vector<double> binomial_weights(double order, std::size_t n) {
    if (!(order > 0.0))
        throw std::domain_error("binomial_weights: order must be positive");
    std::vector<double> g(n + 1);
    g[0] = 1.0;
    for (std::size_t m = 1; m <= n; ++m)
        g[m] = (1.0 - (order + 1.0) / static_cast<double>(m)) * g[m - 1];
    return g;
}

WeightSequence midpoint_weights_direct(double order, std::size_t n) {
    require_unit_interval(order);
    const double b = order;
    const auto g = binomial_weights(b, n);
    const double scale = std::pow((3.0 * b + 1.0) / (2.0 * b), b);
    const double ratio = (b + 1.0) / (3.0 * b + 1.0);

    WeightSequence seq;
    seq.order = b;
    seq.weights.resize(n + 1);
    // Terms alternate in sign; Kahan compensation keeps the long
    // convolutions at n ~ 4096 from losing digits.
    std::vector<double> rpow(n + 1);
    rpow[0] = 1.0;
    for (std::size_t m = 1; m <= n; ++m) rpow[m] = rpow[m - 1] * ratio;
    for (std::size_t l = 0; l <= n; ++l) {
        double sum = 0.0, comp = 0.0;
        for (std::size_t m = 0; m <= l; ++m) {
            const double term = rpow[m] * g[m] * g[l - m];
            const double y = term - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        seq.weights[l] = scale * sum;
    }
    return seq;
}

WeightSequence midpoint_weights_recurrence(double order, std::size_t n) {
    require_unit_interval(order);
    const double b = order;
    WeightSequence seq;
    seq.order = b;
    seq.weights.resize(n + 1);
    seq.weights[0] = std::pow((3.0 * b + 1.0) / (2.0 * b), b);
    if (n >= 1)
        seq.weights[1] =
            -2.0 * b * (2.0 * b + 1.0) / (3.0 * b + 1.0) * seq.weights[0];
    for (std::size_t l = 2; l <= n; ++l) {
        const double ld = static_cast<double>(l);
        seq.weights[l] = (2.0 * (ld - 1.0 - b) * (2.0 * b + 1.0) * seq.weights[l - 1] +
                          (1.0 + b) * (2.0 + 2.0 * b - ld) * seq.weights[l - 2]) /
                         ((3.0 * b + 1.0) * ld);
    }
    return seq;
}

std::complex<double> generating_function_eval(double order,
                                              std::complex<double> z) {
    require_unit_interval(order);
    const double b = order;
    const std::complex<double> q =
        (3.0 * b + 1.0) / (2.0 * b) - (2.0 * b + 1.0) / b * z +
        (b + 1.0) / (2.0 * b) * z * z;
    return std::pow(q, b);
}

double symbol_min_scan(double order, std::size_t x_points,
                       std::size_t n_trunc) {
    const auto w = midpoint_weights_recurrence(order, n_trunc);
    double min_value = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < x_points; ++p) {
        const double x = std::numbers::pi * static_cast<double>(p) /
                         static_cast<double>(x_points - 1);
        const std::complex<double> rot = std::polar(1.0, x);
        std::complex<double> phase = 1.0;
        std::complex<double> series = 0.0;
        for (std::size_t k = 0; k <= n_trunc; ++k) {
            series += w[k] * phase;
            phase *= rot;
        }
        const double value = ((1.0 + rot) * series).real();
        min_value = std::min(min_value, value);
    }
    return min_value;
}

}  // namespace fcable
