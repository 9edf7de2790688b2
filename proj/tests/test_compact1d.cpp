#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "fcable/compact1d.hpp"

using namespace fcable;

namespace {

Field1D from_fn(const Grid1D& g, double (*f)(double)) {
    auto out = Field1D::zeros(g);
    for (int j = 0; j <= g.cells; ++j) out[j] = f(g.node(j));
    return out;
}

Field1D random_interior(const Grid1D& g, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    auto f = Field1D::zeros(g);
    for (int j = 1; j < g.cells; ++j) f[j] = dist(rng);
    return f;
}

}  // namespace

TEST_CASE("second difference annihilates affine data") {
    Grid1D g{1.0, 8};
    auto d = delta_x2(from_fn(g, +[](double x) { return 3.0 * x - 1.0; }));
    for (int j = 0; j <= g.cells; ++j) CHECK(std::abs(d[j]) < 1e-12);
}

TEST_CASE("second difference is exact on quadratics") {
    Grid1D g{1.0, 8};
    auto d = delta_x2(from_fn(g, +[](double x) { return x * x; }));
    for (int j = 1; j < g.cells; ++j) CHECK(d[j] == doctest::Approx(2.0));
    CHECK(d[0] == 0.0);
    CHECK(d[g.cells] == 0.0);
}

TEST_CASE("second difference of a sine approaches -pi^2 sin at O(h^2)") {
    const double pi = std::numbers::pi;
    double prev = 0.0;
    for (int m : {8, 16}) {
        Grid1D g{1.0, m};
        auto d = delta_x2(from_fn(g, +[](double x) {
            return std::sin(std::numbers::pi * x);
        }));
        double worst = 0.0;
        for (int j = 1; j < m; ++j)
            worst = std::max(worst,
                             std::abs(d[j] + pi * pi * std::sin(pi * g.node(j))));
        if (prev > 0.0) CHECK(prev / worst == doctest::Approx(4.0).epsilon(0.1));
        prev = worst;
    }
}

TEST_CASE("compact stencil preserves constants and matches a hand value") {
    Grid1D g{1.0, 8};
    auto ones = from_fn(g, +[](double) { return 1.0; });
    auto L1 = compact_L(ones);
    for (int j = 0; j <= g.cells; ++j) CHECK(L1[j] == doctest::Approx(1.0));

    Grid1D g2{1.0, 2};
    Field1D spike{g2, {0.0, 1.0, 0.0}};
    CHECK(compact_L(spike)[1] == doctest::Approx(10.0 / 12.0));
}

TEST_CASE("compact stencil Rayleigh quotient lies in [2/3, 1]") {
    std::mt19937 rng(7);
    Grid1D g{1.0, 24};
    for (int trial = 0; trial < 100; ++trial) {
        auto f = random_interior(g, rng);
        const double q = inner(compact_L(f), f) / inner(f, f);
        CHECK(q >= 2.0 / 3.0 - 1e-12);
        CHECK(q <= 1.0 + 1e-12);
    }
}

TEST_CASE("compact solve inverts the forward stencil") {
    std::mt19937 rng(11);
    Grid1D g{1.0, 16};
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    auto u = Field1D::zeros(g);
    for (int j = 0; j <= g.cells; ++j) u[j] = dist(rng);
    auto rhs = compact_L(u);
    auto back = solve_compact(rhs, u[0], u[g.cells]);
    for (int j = 0; j <= g.cells; ++j) CHECK(std::abs(back[j] - u[j]) < 1e-12);

    // Constant data round-trips exactly.
    auto ones = Field1D{g, std::vector<double>(g.cells + 1, 1.0)};
    auto id = solve_compact(ones, 1.0, 1.0);
    for (int j = 0; j <= g.cells; ++j) CHECK(id[j] == doctest::Approx(1.0));
}

TEST_CASE("compact solve matches a dense direct solve") {
    Grid1D g{1.0, 4};
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Field1D rhs = Field1D::zeros(g);
    for (int j = 1; j < g.cells; ++j) rhs[j] = dist(rng);
    const double left = dist(rng), right = dist(rng);

    const int n = g.cells - 1;
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd b(n);
    for (int i = 0; i < n; ++i) {
        D(i, i) = 10.0 / 12.0;
        if (i > 0) D(i, i - 1) = 1.0 / 12.0;
        if (i + 1 < n) D(i, i + 1) = 1.0 / 12.0;
        b(i) = rhs[i + 1];
    }
    b(0) -= left / 12.0;
    b(n - 1) -= right / 12.0;
    Eigen::VectorXd x = D.fullPivLu().solve(b);

    auto u = solve_compact(rhs, left, right);
    for (int i = 0; i < n; ++i) CHECK(std::abs(u[i + 1] - x(i)) < 1e-13);
}

TEST_CASE("inner product and norm follow the interior trapezoid convention") {
    Grid1D g{1.0, 10};
    auto ones = from_fn(g, +[](double) { return 1.0; });
    ones[0] = ones[g.cells] = 0.0;
    CHECK(inner(ones, ones) == doctest::Approx(0.9));  // h * (M - 1)
    CHECK(norm(ones) == doctest::Approx(std::sqrt(0.9)));

    Grid1D other{2.0, 10};
    auto v = Field1D::zeros(other);
    CHECK_THROWS_AS(inner(ones, v), std::invalid_argument);
}

TEST_CASE("summation by parts couples the difference operators") {
    // (dx2 u, v) = (u, dx2 v) for interior-supported u, v.
    std::mt19937 rng(19);
    Grid1D g{1.0, 20};
    for (int trial = 0; trial < 10; ++trial) {
        auto u = random_interior(g, rng);
        auto v = random_interior(g, rng);
        CHECK(std::abs(inner(delta_x2(u), v) - inner(u, delta_x2(v))) < 1e-9);
    }
}
