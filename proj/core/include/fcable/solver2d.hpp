#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fcable/compact1d.hpp"
#include "fcable/weights.hpp"

namespace fcable {

/// Rectangular grid function on (M1+1) x (M2+1) nodes including the
/// boundary ring. Row-major in the x index.
struct Field2D {
    Grid1D grid_x;  // spacing h_x, M1 cells
    Grid1D grid_y;  // spacing h_y, M2 cells
    std::vector<double> values;

    static Field2D zeros(const Grid1D& gx, const Grid1D& gy) {
        return Field2D{gx, gy,
                       std::vector<double>((gx.cells + 1) * (gy.cells + 1), 0.0)};
    }
    double& at(int i, int j) { return values[i * (grid_y.cells + 1) + j]; }
    double at(int i, int j) const { return values[i * (grid_y.cells + 1) + j]; }
    bool same_shape(const Field2D& o) const {
        return grid_x == o.grid_x && grid_y == o.grid_y;
    }
};

/// Tensorized 1D stencils: the compact average along one axis (identity on
/// that axis's boundary lines) and the second difference along one axis
/// (zero on that axis's boundary lines).
Field2D apply_Lx(const Field2D& f);
Field2D apply_Ly(const Field2D& f);
Field2D apply_dx2(const Field2D& f);
Field2D apply_dy2(const Field2D& f);

/// Solve Lx Ly u = rhs on interior nodes with the boundary ring of u
/// prescribed by `boundary`. Two families of tridiagonal sweeps: first
/// each interior row for V = Ly u (with end values of V computed from the
/// known boundary columns), then each interior column for u.
Field2D factored_compact_solve(const Field2D& rhs, const Field2D& boundary);

/// Discrete inner product h_x h_y * sum over interior nodes, and norm.
double inner(const Field2D& u, const Field2D& v);
double norm(const Field2D& u);

/// Two-dimensional Cable problem; zero initial condition enforced.
struct CableProblem2D {
    double alpha1 = 0.5;
    double alpha2 = 0.5;
    double k1 = 1.0;
    double k2 = 1.0;
    double length_x = 1.0;
    double length_y = 1.0;
    double horizon = 1.0;
    std::function<double(double x, double y, double t)> source;
    std::function<double(double x, double y, double t)> boundary;
    std::function<double(double x, double y, double t)> exact;  // optional

    void validate() const;
};

struct ErrorReport2D {
    double max_final = 0.0;
    double max_all = 0.0;
    double l2_final = 0.0;
};

class MarchState2D {
public:
    MarchState2D(CableProblem2D problem, int time_steps, int cells_x,
                 int cells_y);

    /// rhs = Lx Ly u^k + tau^{a1} K1 (Ly dx2 + Lx dy2) H1
    ///     - tau^{a2} K2 Lx Ly H2 + tau Lx Ly f^{k+1/2}   (interior),
    /// plus the boundary ring for t_{k+1}.
    std::pair<Field2D, Field2D> assemble_rhs(int k) const;

    void step();

    int completed_steps() const { return static_cast<int>(history_.size()) - 1; }
    double tau() const { return tau_; }
    const CableProblem2D& problem() const { return problem_; }
    const std::vector<Field2D>& history() const { return history_; }
    const Grid1D& grid_x() const { return grid_x_; }
    const Grid1D& grid_y() const { return grid_y_; }

private:
    CableProblem2D problem_;
    Grid1D grid_x_, grid_y_;
    int time_steps_;
    double tau_;
    WeightSequence w1_, w2_;
    std::vector<Field2D> history_;
};

struct Solution2D {
    double tau = 0.0;
    std::vector<Field2D> states;
    std::optional<ErrorReport2D> report;
};

Solution2D solve_2d(const CableProblem2D& problem, int time_steps,
                    int cells_x, int cells_y);

/// Homogeneous perturbation march; returns max_n ||eps^n|| / ||rho||.
double perturbation_ratio_2d(double alpha1, double alpha2, double k1,
                             double k2, int time_steps, const Field2D& rho);

}  // namespace fcable
