#pragma once

#include <vector>

namespace fcable {

/// Uniform 1D grid on [0, length] with `cells` intervals.
struct Grid1D {
    double length = 1.0;
    int cells = 0;  // M >= 2

    double spacing() const { return length / cells; }
    double node(int j) const { return j * spacing(); }
    friend bool operator==(const Grid1D&, const Grid1D&) = default;
};

/// Grid function u_0..u_M, boundary nodes included.
struct Field1D {
    Grid1D grid;
    std::vector<double> values;  // size cells + 1

    static Field1D zeros(const Grid1D& g) {
        return Field1D{g, std::vector<double>(g.cells + 1, 0.0)};
    }
    double& operator[](int j) { return values[j]; }
    double operator[](int j) const { return values[j]; }
};

/// Second difference (f_{j+1} - 2 f_j + f_{j-1}) / h^2 on interior nodes;
/// boundary entries of the result are zero.
Field1D delta_x2(const Field1D& f);

/// Fourth-order compact operator: (f_{j+1} + 10 f_j + f_{j-1}) / 12 on
/// interior nodes, identity at j = 0 and j = M.
Field1D compact_L(const Field1D& f);

/// Solve (Lu)_j = rhs_j for 1 <= j <= M-1 with u_0 = left, u_M = right.
/// Thomas algorithm; the matrix is strictly diagonally dominant, so no
/// pivoting is needed. Boundary entries of rhs are ignored.
Field1D solve_compact(const Field1D& rhs, double left, double right);

/// Discrete inner product h * sum_{j=1}^{M-1} u_j v_j and induced norm.
/// Throws std::invalid_argument on grid mismatch.
double inner(const Field1D& u, const Field1D& v);
double norm(const Field1D& u);

}  // namespace fcable
