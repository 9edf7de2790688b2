#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fcable/compact1d.hpp"
#include "fcable/weights.hpp"

namespace fcable {

/// Time-fractional Cable problem
///   du/dt = K1 D^{1-a1} d2u/dx2 - K2 D^{1-a2} u + f(x,t)
/// on (0, length) x (0, horizon], Dirichlet boundaries, u(x,0) = 0.
/// The zero initial condition is part of the formulation and is enforced,
/// not configurable.
struct CableProblem1D {
    double alpha1 = 0.5;
    double alpha2 = 0.5;
    double k1 = 1.0;
    double k2 = 1.0;
    double length = 1.0;
    double horizon = 1.0;
    std::function<double(double x, double t)> source;
    std::function<double(double t)> left_boundary;
    std::function<double(double t)> right_boundary;
    std::function<double(double x, double t)> exact;  // optional

    void validate() const;  // throws std::domain_error
};

struct ErrorReport1D {
    double max_final = 0.0;  // max-norm at t = horizon
    double max_all = 0.0;    // max over all time levels of the max-norm
    double l2_final = 0.0;   // discrete L2 norm at t = horizon
};

/// Interior right-hand side for the compact solve at level k+1, plus the
/// Dirichlet pair for t_{k+1}.
struct Rhs1D {
    Field1D rhs;
    double left = 0.0;
    double right = 0.0;
};

/// Marching state for the compact scheme: one compact tridiagonal solve
/// per step, with two fractional history convolutions feeding the
/// right-hand side. History fields keep their boundary nodes so the
/// second difference at j = 1 sees the boundary history.
class MarchState1D {
public:
    MarchState1D(CableProblem1D problem, int time_steps, int cells);

    /// rhs_j = (L u^k)_j + tau^{a1} K1 (dx2 H1)_j - tau^{a2} K2 (L H2)_j
    ///       + tau (L f^{k+1/2})_j
    /// where H_i = sum_{l<=k} w_l^{(1-a_i)} u^{k-l}.
    Rhs1D assemble_rhs(int k) const;

    /// Appends u^{k+1}. Throws std::logic_error once k reaches time_steps.
    void step();

    int completed_steps() const { return static_cast<int>(history_.size()) - 1; }
    int time_steps() const { return time_steps_; }
    double tau() const { return tau_; }
    const Grid1D& grid() const { return grid_; }
    const CableProblem1D& problem() const { return problem_; }
    const std::vector<Field1D>& history() const { return history_; }

private:
    CableProblem1D problem_;
    Grid1D grid_;
    int time_steps_;
    double tau_;
    WeightSequence w1_;  // order 1 - alpha1
    WeightSequence w2_;  // order 1 - alpha2
    std::vector<Field1D> history_;
};

struct Solution1D {
    Grid1D grid;
    double tau = 0.0;
    std::vector<Field1D> states;  // u^0..u^N
    std::optional<ErrorReport1D> report;
};

/// March k = 0..N-1. The scheme display starts at k = 1 but u^1 must come
/// from the k = 0 instance, which is well defined because u^0 = 0 makes
/// both history sums vanish.
Solution1D solve_1d(const CableProblem1D& problem, int time_steps, int cells);

/// Homogeneous perturbation march: f = 0, zero boundaries, u^0 = rho.
/// Returns max over n of ||eps^n|| / ||rho|| in the discrete L2 norm.
double perturbation_ratio_1d(double alpha1, double alpha2, double k1,
                             double k2, int time_steps,
                             const Field1D& rho);

}  // namespace fcable
