#include "fcable/rl_operator.hpp"

#include <cmath>
#include <stdexcept>

namespace fcable {

double history_convolution(const WeightSequence& w, const TimeHistory& h,
                           std::size_t k) {
    if (k >= h.values.size())
        throw std::length_error("history_convolution: history ends before index k");
    if (w.size() < k + 1)
        throw std::length_error("history_convolution: weight table shorter than k+1");
    double sum = 0.0;
    for (std::size_t l = 0; l <= k; ++l) sum += w[l] * h.values[k - l];
    return sum;
}

double midpoint_rl_apply(const WeightSequence& w, const TimeHistory& h,
                         std::size_t k) {
    return std::pow(h.step, -w.order) * history_convolution(w, h, k);
}

double gl_first_order_apply(double order, std::span<const double> g,
                            const TimeHistory& h, std::size_t k) {
    if (k >= h.values.size())
        throw std::length_error("gl_first_order_apply: history ends before index k");
    if (g.size() < k + 1)
        throw std::length_error("gl_first_order_apply: weight table shorter than k+1");
    double sum = 0.0;
    for (std::size_t l = 0; l <= k; ++l) sum += g[l] * h.values[k - l];
    return std::pow(h.step, -order) * sum;
}

double exact_rl_monomial(double exponent, double order, double t) {
    if (!(exponent > 0.0))
        throw std::domain_error("exact_rl_monomial: exponent must be positive");
    if (!(order > 0.0) || !(order < exponent + 1.0))
        throw std::domain_error("exact_rl_monomial: order must lie in (0, exponent+1)");
    if (t < 0.0)
        throw std::domain_error("exact_rl_monomial: t must be nonnegative");
    return std::tgamma(exponent + 1.0) / std::tgamma(exponent + 1.0 - order) *
           std::pow(t, exponent - order);
}

}  // namespace fcable
