#include "fcable/solver2d.hpp"

#include <cmath>
#include <stdexcept>

namespace fcable {

namespace {

void check_shape(const Field2D& a, const Field2D& b, const char* what) {
    if (!a.same_shape(b)) throw std::invalid_argument(what);
}

// Tridiagonal solve for (x_{i-1} + 10 x_i + x_{i+1})/12 = d_i,
// i = 1..n, with x_0 and x_{n+1} known. Overwrites d with the solution
// at indices 1..n.
void compact_line_solve(std::vector<double>& d, double first, double last) {
    const int n = static_cast<int>(d.size()) - 2;
    constexpr double off = 1.0 / 12.0;
    std::vector<double> diag(n + 1, 10.0 / 12.0);
    d[1] -= off * first;
    d[n] -= off * last;
    for (int i = 2; i <= n; ++i) {
        const double w = off / diag[i - 1];
        diag[i] -= w * off;
        d[i] -= w * d[i - 1];
    }
    d[n] /= diag[n];
    for (int i = n - 1; i >= 1; --i) d[i] = (d[i] - off * d[i + 1]) / diag[i];
    d[0] = first;
    d[n + 1] = last;
}

}  // namespace

Field2D apply_Lx(const Field2D& f) {
    const int m1 = f.grid_x.cells, m2 = f.grid_y.cells;
    Field2D r = f;
    for (int i = 1; i < m1; ++i)
        for (int j = 0; j <= m2; ++j)
            r.at(i, j) = (f.at(i + 1, j) + 10.0 * f.at(i, j) + f.at(i - 1, j)) / 12.0;
    return r;
}

Field2D apply_Ly(const Field2D& f) {
    const int m1 = f.grid_x.cells, m2 = f.grid_y.cells;
    Field2D r = f;
    for (int i = 0; i <= m1; ++i)
        for (int j = 1; j < m2; ++j)
            r.at(i, j) = (f.at(i, j + 1) + 10.0 * f.at(i, j) + f.at(i, j - 1)) / 12.0;
    return r;
}

Field2D apply_dx2(const Field2D& f) {
    const int m1 = f.grid_x.cells, m2 = f.grid_y.cells;
    const double h2 = f.grid_x.spacing() * f.grid_x.spacing();
    Field2D r = Field2D::zeros(f.grid_x, f.grid_y);
    for (int i = 1; i < m1; ++i)
        for (int j = 0; j <= m2; ++j)
            r.at(i, j) = (f.at(i + 1, j) - 2.0 * f.at(i, j) + f.at(i - 1, j)) / h2;
    return r;
}

Field2D apply_dy2(const Field2D& f) {
    const int m1 = f.grid_x.cells, m2 = f.grid_y.cells;
    const double h2 = f.grid_y.spacing() * f.grid_y.spacing();
    Field2D r = Field2D::zeros(f.grid_x, f.grid_y);
    for (int i = 0; i <= m1; ++i)
        for (int j = 1; j < m2; ++j)
            r.at(i, j) = (f.at(i, j + 1) - 2.0 * f.at(i, j) + f.at(i, j - 1)) / h2;
    return r;
}

Field2D factored_compact_solve(const Field2D& rhs, const Field2D& boundary) {
    check_shape(rhs, boundary, "factored_compact_solve: shape mismatch");
    const int m1 = rhs.grid_x.cells, m2 = rhs.grid_y.cells;

    // Stage 1: x-sweeps for V = Ly u. End values of each row come from
    // the known boundary columns of u.
    Field2D v = Field2D::zeros(rhs.grid_x, rhs.grid_y);
    std::vector<double> line(std::max(m1, m2) + 1);
    for (int j = 1; j < m2; ++j) {
        const double v_left = (boundary.at(0, j + 1) + 10.0 * boundary.at(0, j) +
                               boundary.at(0, j - 1)) / 12.0;
        const double v_right = (boundary.at(m1, j + 1) + 10.0 * boundary.at(m1, j) +
                                boundary.at(m1, j - 1)) / 12.0;
        std::vector<double> d(m1 + 1);
        for (int i = 1; i < m1; ++i) d[i] = rhs.at(i, j);
        compact_line_solve(d, v_left, v_right);
        for (int i = 0; i <= m1; ++i) v.at(i, j) = d[i];
    }

    // Stage 2: y-sweeps recover u from V with the known boundary rows.
    Field2D u = boundary;
    for (int i = 1; i < m1; ++i) {
        std::vector<double> d(m2 + 1);
        for (int j = 1; j < m2; ++j) d[j] = v.at(i, j);
        compact_line_solve(d, boundary.at(i, 0), boundary.at(i, m2));
        for (int j = 1; j < m2; ++j) u.at(i, j) = d[j];
    }
    return u;
}

double inner(const Field2D& u, const Field2D& v) {
    check_shape(u, v, "inner: fields live on different grids");
    double s = 0.0;
    for (int i = 1; i < u.grid_x.cells; ++i)
        for (int j = 1; j < u.grid_y.cells; ++j)
            s += u.at(i, j) * v.at(i, j);
    return u.grid_x.spacing() * u.grid_y.spacing() * s;
}

double norm(const Field2D& u) { return std::sqrt(inner(u, u)); }

void CableProblem2D::validate() const {
    if (!(alpha1 > 0.0) || !(alpha1 < 1.0) || !(alpha2 > 0.0) || !(alpha2 < 1.0))
        throw std::domain_error("CableProblem2D: fractional orders must lie in (0,1)");
    if (!(length_x > 0.0) || !(length_y > 0.0) || !(horizon > 0.0))
        throw std::domain_error("CableProblem2D: domain and horizon must be positive");
    if (!source || !boundary)
        throw std::domain_error("CableProblem2D: source and boundary callables are required");
}

MarchState2D::MarchState2D(CableProblem2D problem, int time_steps, int cells_x,
                           int cells_y)
    : problem_(std::move(problem)),
      grid_x_{problem_.length_x, cells_x},
      grid_y_{problem_.length_y, cells_y},
      time_steps_(time_steps),
      tau_(problem_.horizon / time_steps) {
    problem_.validate();
    if (time_steps < 1 || cells_x < 2 || cells_y < 2)
        throw std::domain_error("MarchState2D: need time_steps >= 1 and cells >= 2");
    w1_ = midpoint_weights_recurrence(1.0 - problem_.alpha1, time_steps);
    w2_ = midpoint_weights_recurrence(1.0 - problem_.alpha2, time_steps);

    Field2D u0 = Field2D::zeros(grid_x_, grid_y_);
    const int m1 = cells_x, m2 = cells_y;
    for (int i = 0; i <= m1; ++i) {
        u0.at(i, 0) = problem_.boundary(grid_x_.node(i), 0.0, 0.0);
        u0.at(i, m2) = problem_.boundary(grid_x_.node(i), grid_y_.length, 0.0);
    }
    for (int j = 0; j <= m2; ++j) {
        u0.at(0, j) = problem_.boundary(0.0, grid_y_.node(j), 0.0);
        u0.at(m1, j) = problem_.boundary(grid_x_.length, grid_y_.node(j), 0.0);
    }
    history_.push_back(std::move(u0));
}

std::pair<Field2D, Field2D> MarchState2D::assemble_rhs(int k) const {
    if (k < 0 || k >= static_cast<int>(history_.size()))
        throw std::logic_error("assemble_rhs: history incomplete through index k");
    const int m1 = grid_x_.cells, m2 = grid_y_.cells;

    Field2D h1 = Field2D::zeros(grid_x_, grid_y_);
    Field2D h2 = Field2D::zeros(grid_x_, grid_y_);
    const std::size_t nodes = h1.values.size();
    for (int l = 0; l <= k; ++l) {
        const Field2D& u = history_[k - l];
        for (std::size_t p = 0; p < nodes; ++p) {
            h1.values[p] += w1_[l] * u.values[p];
            h2.values[p] += w2_[l] * u.values[p];
        }
    }

    Field2D f = Field2D::zeros(grid_x_, grid_y_);
    const double t_half = (k + 0.5) * tau_;
    for (int i = 0; i <= m1; ++i)
        for (int j = 0; j <= m2; ++j)
            f.at(i, j) = problem_.source(grid_x_.node(i), grid_y_.node(j), t_half);

    const Field2D lxlyu = apply_Lx(apply_Ly(history_[k]));
    const Field2D mixed1 = apply_Ly(apply_dx2(h1));
    const Field2D mixed2 = apply_Lx(apply_dy2(h1));
    const Field2D lxlyh2 = apply_Lx(apply_Ly(h2));
    const Field2D lxlyf = apply_Lx(apply_Ly(f));

    const double c1 = std::pow(tau_, problem_.alpha1) * problem_.k1;
    const double c2 = std::pow(tau_, problem_.alpha2) * problem_.k2;

    Field2D rhs = Field2D::zeros(grid_x_, grid_y_);
    for (int i = 1; i < m1; ++i)
        for (int j = 1; j < m2; ++j)
            rhs.at(i, j) = lxlyu.at(i, j) +
                           c1 * (mixed1.at(i, j) + mixed2.at(i, j)) -
                           c2 * lxlyh2.at(i, j) + tau_ * lxlyf.at(i, j);

    Field2D bnd = Field2D::zeros(grid_x_, grid_y_);
    const double t_next = (k + 1.0) * tau_;
    for (int i = 0; i <= m1; ++i) {
        bnd.at(i, 0) = problem_.boundary(grid_x_.node(i), 0.0, t_next);
        bnd.at(i, m2) = problem_.boundary(grid_x_.node(i), grid_y_.length, t_next);
    }
    for (int j = 0; j <= m2; ++j) {
        bnd.at(0, j) = problem_.boundary(0.0, grid_y_.node(j), t_next);
        bnd.at(m1, j) = problem_.boundary(grid_x_.length, grid_y_.node(j), t_next);
    }
    return {std::move(rhs), std::move(bnd)};
}

void MarchState2D::step() {
    const int k = completed_steps();
    if (k >= time_steps_)
        throw std::logic_error("step: march already complete");
    auto [rhs, bnd] = assemble_rhs(k);
    history_.push_back(factored_compact_solve(rhs, bnd));
}

Solution2D solve_2d(const CableProblem2D& problem, int time_steps,
                    int cells_x, int cells_y) {
    MarchState2D state(problem, time_steps, cells_x, cells_y);
    Solution2D sol;
    sol.tau = state.tau();

    ErrorReport2D report;
    const bool have_exact = static_cast<bool>(problem.exact);
    const Grid1D& gx = state.grid_x();
    const Grid1D& gy = state.grid_y();
    for (int k = 0; k < time_steps; ++k) {
        state.step();
        if (have_exact) {
            const Field2D& u = state.history().back();
            const double t = (k + 1.0) * state.tau();
            double level_max = 0.0;
            for (int i = 0; i <= cells_x; ++i)
                for (int j = 0; j <= cells_y; ++j)
                    level_max = std::max(
                        level_max,
                        std::abs(u.at(i, j) -
                                 problem.exact(gx.node(i), gy.node(j), t)));
            report.max_all = std::max(report.max_all, level_max);
            if (k == time_steps - 1) {
                report.max_final = level_max;
                Field2D err = Field2D::zeros(gx, gy);
                for (int i = 0; i <= cells_x; ++i)
                    for (int j = 0; j <= cells_y; ++j)
                        err.at(i, j) = u.at(i, j) -
                                       problem.exact(gx.node(i), gy.node(j), t);
                report.l2_final = norm(err);
            }
        }
    }
    sol.states = state.history();
    if (have_exact) sol.report = report;
    return sol;
}

double perturbation_ratio_2d(double alpha1, double alpha2, double k1,
                             double k2, int time_steps, const Field2D& rho) {
    const Grid1D gx = rho.grid_x, gy = rho.grid_y;
    const int m1 = gx.cells, m2 = gy.cells;
    const double tau = 1.0 / time_steps;
    const auto w1 = midpoint_weights_recurrence(1.0 - alpha1, time_steps);
    const auto w2 = midpoint_weights_recurrence(1.0 - alpha2, time_steps);

    Field2D eps0 = rho;
    for (int i = 0; i <= m1; ++i) { eps0.at(i, 0) = 0.0; eps0.at(i, m2) = 0.0; }
    for (int j = 0; j <= m2; ++j) { eps0.at(0, j) = 0.0; eps0.at(m1, j) = 0.0; }
    const double rho_norm = norm(eps0);
    if (rho_norm == 0.0) return 0.0;

    const double c1 = std::pow(tau, alpha1) * k1;
    const double c2 = std::pow(tau, alpha2) * k2;
    const Field2D zero_bnd = Field2D::zeros(gx, gy);
    std::vector<Field2D> eps{eps0};
    double worst = 0.0;
    for (int k = 0; k < time_steps; ++k) {
        Field2D h1 = Field2D::zeros(gx, gy);
        Field2D h2 = Field2D::zeros(gx, gy);
        for (int l = 0; l <= k; ++l) {
            const Field2D& e = eps[k - l];
            for (std::size_t p = 0; p < h1.values.size(); ++p) {
                h1.values[p] += w1[l] * e.values[p];
                h2.values[p] += w2[l] * e.values[p];
            }
        }
        const Field2D lxlyu = apply_Lx(apply_Ly(eps[k]));
        const Field2D mixed1 = apply_Ly(apply_dx2(h1));
        const Field2D mixed2 = apply_Lx(apply_dy2(h1));
        const Field2D lxlyh2 = apply_Lx(apply_Ly(h2));
        Field2D rhs = Field2D::zeros(gx, gy);
        for (int i = 1; i < m1; ++i)
            for (int j = 1; j < m2; ++j)
                rhs.at(i, j) = lxlyu.at(i, j) +
                               c1 * (mixed1.at(i, j) + mixed2.at(i, j)) -
                               c2 * lxlyh2.at(i, j);
        eps.push_back(factored_compact_solve(rhs, zero_bnd));
        worst = std::max(worst, norm(eps.back()) / rho_norm);
    }
    return worst;
}

}  // namespace fcable
