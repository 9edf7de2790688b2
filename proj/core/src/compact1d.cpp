#include "fcable/compact1d.hpp"

#include <cmath>
#include <stdexcept>

namespace fcable {

Field1D delta_x2(const Field1D& f) {
    const int m = f.grid.cells;
    const double h2 = f.grid.spacing() * f.grid.spacing();
    Field1D r = Field1D::zeros(f.grid);
    for (int j = 1; j < m; ++j)
        r[j] = (f[j + 1] - 2.0 * f[j] + f[j - 1]) / h2;
    return r;
}

Field1D compact_L(const Field1D& f) {
    const int m = f.grid.cells;
    Field1D r = Field1D::zeros(f.grid);
    r[0] = f[0];
    r[m] = f[m];
    for (int j = 1; j < m; ++j)
        r[j] = (f[j + 1] + 10.0 * f[j] + f[j - 1]) / 12.0;
    return r;
}

Field1D solve_compact(const Field1D& rhs, double left, double right) {
    const int m = rhs.grid.cells;
    const int n = m - 1;  // interior unknowns
    Field1D u = Field1D::zeros(rhs.grid);
    u[0] = left;
    u[m] = right;
    if (n <= 0) return u;

    constexpr double off = 1.0 / 12.0;
    std::vector<double> diag(n, 10.0 / 12.0), d(n);
    for (int i = 0; i < n; ++i) d[i] = rhs[i + 1];
    d[0] -= off * left;
    d[n - 1] -= off * right;
    for (int i = 1; i < n; ++i) {
        const double w = off / diag[i - 1];
        diag[i] -= w * off;
        d[i] -= w * d[i - 1];
    }
    u[n] = d[n - 1] / diag[n - 1];
    for (int i = n - 2; i >= 0; --i)
        u[i + 1] = (d[i] - off * u[i + 2]) / diag[i];
    return u;
}

double inner(const Field1D& u, const Field1D& v) {
    if (!(u.grid == v.grid))
        throw std::invalid_argument("inner: fields live on different grids");
    double s = 0.0;
    for (int j = 1; j < u.grid.cells; ++j) s += u[j] * v[j];
    return u.grid.spacing() * s;
}

double norm(const Field1D& u) { return std::sqrt(inner(u, u)); }

}  // namespace fcable
