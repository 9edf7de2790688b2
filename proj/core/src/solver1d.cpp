#include "fcable/solver1d.hpp"

#include <cmath>
#include <stdexcept>

namespace fcable {

void CableProblem1D::validate() const {
    if (!(alpha1 > 0.0) || !(alpha1 < 1.0) || !(alpha2 > 0.0) || !(alpha2 < 1.0))
        throw std::domain_error("CableProblem1D: fractional orders must lie in (0,1)");
    if (!(length > 0.0) || !(horizon > 0.0))
        throw std::domain_error("CableProblem1D: domain length and horizon must be positive");
    if (!source || !left_boundary || !right_boundary)
        throw std::domain_error("CableProblem1D: source and boundary callables are required");
}

MarchState1D::MarchState1D(CableProblem1D problem, int time_steps, int cells)
    : problem_(std::move(problem)),
      grid_{problem_.length, cells},
      time_steps_(time_steps),
      tau_(problem_.horizon / time_steps) {
    problem_.validate();
    if (time_steps < 1 || cells < 2)
        throw std::domain_error("MarchState1D: need time_steps >= 1 and cells >= 2");
    w1_ = midpoint_weights_recurrence(1.0 - problem_.alpha1, time_steps);
    w2_ = midpoint_weights_recurrence(1.0 - problem_.alpha2, time_steps);

    Field1D u0 = Field1D::zeros(grid_);
    u0[0] = problem_.left_boundary(0.0);
    u0[grid_.cells] = problem_.right_boundary(0.0);
    history_.push_back(std::move(u0));
}

Rhs1D MarchState1D::assemble_rhs(int k) const {
    if (k < 0 || k >= static_cast<int>(history_.size()))
        throw std::logic_error("assemble_rhs: history incomplete through index k");
    const int m = grid_.cells;

    Field1D h1 = Field1D::zeros(grid_);
    Field1D h2 = Field1D::zeros(grid_);
    for (int l = 0; l <= k; ++l) {
        const Field1D& u = history_[k - l];
        for (int j = 0; j <= m; ++j) {
            h1[j] += w1_[l] * u[j];
            h2[j] += w2_[l] * u[j];
        }
    }

    Field1D f = Field1D::zeros(grid_);
    const double t_half = (k + 0.5) * tau_;
    for (int j = 0; j <= m; ++j) f[j] = problem_.source(grid_.node(j), t_half);

    const Field1D lu = compact_L(history_[k]);
    const Field1D d2h1 = delta_x2(h1);
    const Field1D lh2 = compact_L(h2);
    const Field1D lf = compact_L(f);

    const double c1 = std::pow(tau_, problem_.alpha1) * problem_.k1;
    const double c2 = std::pow(tau_, problem_.alpha2) * problem_.k2;

    Rhs1D out{Field1D::zeros(grid_), 0.0, 0.0};
    for (int j = 1; j < m; ++j)
        out.rhs[j] = lu[j] + c1 * d2h1[j] - c2 * lh2[j] + tau_ * lf[j];
    const double t_next = (k + 1.0) * tau_;
    out.left = problem_.left_boundary(t_next);
    out.right = problem_.right_boundary(t_next);
    return out;
}

void MarchState1D::step() {
    const int k = completed_steps();
    if (k >= time_steps_)
        throw std::logic_error("step: march already complete");
    const Rhs1D r = assemble_rhs(k);
    history_.push_back(solve_compact(r.rhs, r.left, r.right));
}

Solution1D solve_1d(const CableProblem1D& problem, int time_steps, int cells) {
    MarchState1D state(problem, time_steps, cells);
    Solution1D sol;
    sol.grid = state.grid();
    sol.tau = state.tau();

    ErrorReport1D report;
    const bool have_exact = static_cast<bool>(problem.exact);
    for (int k = 0; k < time_steps; ++k) {
        state.step();
        if (have_exact) {
            const Field1D& u = state.history().back();
            const double t = (k + 1.0) * state.tau();
            double level_max = 0.0;
            for (int j = 0; j <= cells; ++j)
                level_max = std::max(level_max,
                                     std::abs(u[j] - problem.exact(sol.grid.node(j), t)));
            report.max_all = std::max(report.max_all, level_max);
            if (k == time_steps - 1) {
                report.max_final = level_max;
                Field1D err = Field1D::zeros(sol.grid);
                for (int j = 0; j <= cells; ++j)
                    err[j] = u[j] - problem.exact(sol.grid.node(j), t);
                report.l2_final = norm(err);
            }
        }
    }
    sol.states = state.history();
    if (have_exact) sol.report = report;
    return sol;
}

double perturbation_ratio_1d(double alpha1, double alpha2, double k1,
                             double k2, int time_steps, const Field1D& rho) {
    const Grid1D grid = rho.grid;
    const int m = grid.cells;
    const double tau = 1.0 / time_steps;
    const auto w1 = midpoint_weights_recurrence(1.0 - alpha1, time_steps);
    const auto w2 = midpoint_weights_recurrence(1.0 - alpha2, time_steps);

    Field1D eps0 = rho;
    eps0[0] = 0.0;
    eps0[m] = 0.0;
    const double rho_norm = norm(eps0);
    if (rho_norm == 0.0) return 0.0;

    const double c1 = std::pow(tau, alpha1) * k1;
    const double c2 = std::pow(tau, alpha2) * k2;
    std::vector<Field1D> eps{eps0};
    double worst = 0.0;
    for (int k = 0; k < time_steps; ++k) {
        Field1D h1 = Field1D::zeros(grid);
        Field1D h2 = Field1D::zeros(grid);
        for (int l = 0; l <= k; ++l) {
            const Field1D& e = eps[k - l];
            for (int j = 0; j <= m; ++j) {
                h1[j] += w1[l] * e[j];
                h2[j] += w2[l] * e[j];
            }
        }
        const Field1D lu = compact_L(eps[k]);
        const Field1D d2h1 = delta_x2(h1);
        const Field1D lh2 = compact_L(h2);
        Field1D rhs = Field1D::zeros(grid);
        for (int j = 1; j < m; ++j)
            rhs[j] = lu[j] + c1 * d2h1[j] - c2 * lh2[j];
        eps.push_back(solve_compact(rhs, 0.0, 0.0));
        worst = std::max(worst, norm(eps.back()) / rho_norm);
    }
    return worst;
}

}  // namespace fcable
