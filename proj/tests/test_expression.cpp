#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <random>
#include <string>

#include "fcable/expression.hpp"

using namespace fcable;

TEST_CASE("expression: arithmetic, functions and constants") {
    auto e = Expression::parse("2*(t + t^1.5/gamma(2.5))*sin(pi*x)");
    const double expected = 2.0 * (1.0 + 1.0 / std::tgamma(2.5));
    CHECK(e.eval(0.5, 0.0, 1.0) == doctest::Approx(expected));
    CHECK(e.eval(0.5, 0.0, 1.0) == doctest::Approx(3.5045).epsilon(1e-4));

    CHECK(Expression::parse("pow(2, 10)").eval(0, 0, 0) == doctest::Approx(1024.0));
    CHECK(Expression::parse("sqrt(x*x)").eval(3.0, 0, 0) == doctest::Approx(3.0));
    CHECK(Expression::parse("exp(0) + cos(0)").eval(0, 0, 0) == doctest::Approx(2.0));
    CHECK(Expression::parse("pi").eval(0, 0, 0) == doctest::Approx(std::numbers::pi));
    CHECK(Expression::parse("y - t").eval(0, 5.0, 2.0) == doctest::Approx(3.0));
}

TEST_CASE("expression: documented precedence") {
    // Unary minus binds looser than ^.
    CHECK(Expression::parse("-t^2").eval(0, 0, 3.0) == doctest::Approx(-9.0));
    // ^ is right-associative: 2^3^2 = 2^9.
    CHECK(Expression::parse("2^3^2").eval(0, 0, 0) == doctest::Approx(512.0));
    CHECK(Expression::parse("1 + 2*3").eval(0, 0, 0) == doctest::Approx(7.0));
    CHECK(Expression::parse("2 - 3 - 4").eval(0, 0, 0) == doctest::Approx(-5.0));
}

TEST_CASE("expression: errors carry a byte offset") {
    try {
        Expression::parse("x + ");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 4);
    }

    CHECK_THROWS_AS(Expression::parse("bogus(1)"), ParseError);
    CHECK_THROWS_AS(Expression::parse("sin(1, 2)"), ParseError);  // arity
    CHECK_THROWS_AS(Expression::parse("pow(1)"), ParseError);     // arity
    CHECK_THROWS_AS(Expression::parse("(x"), ParseError);
    CHECK_THROWS_AS(Expression::parse("2 3"), ParseError);
}

namespace {

/// Random well-formed expression string plus a direct evaluator result.
struct RandomExpr {
    std::string text;
    double value;
};

RandomExpr gen(std::mt19937& rng, int depth, double x, double y, double t) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 4 : 9);
    std::uniform_real_distribution<double> num(0.5, 3.0);
    switch (pick(rng)) {
        case 0: {
            const double v = num(rng);
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6g", v);
            return {buf, std::strtod(buf, nullptr)};
        }
        case 1: return {"x", x};
        case 2: return {"y", y};
        case 3: return {"t", t};
        case 4: return {"pi", std::numbers::pi};
        case 5: {
            auto a = gen(rng, depth - 1, x, y, t);
            auto b = gen(rng, depth - 1, x, y, t);
            return {"(" + a.text + " + " + b.text + ")", a.value + b.value};
        }
        case 6: {
            auto a = gen(rng, depth - 1, x, y, t);
            auto b = gen(rng, depth - 1, x, y, t);
            return {"(" + a.text + " * " + b.text + ")", a.value * b.value};
        }
        case 7: {
            auto a = gen(rng, depth - 1, x, y, t);
            auto b = gen(rng, depth - 1, x, y, t);
            return {"(" + a.text + " / " + b.text + ")", a.value / b.value};
        }
        case 8: {
            auto a = gen(rng, depth - 1, x, y, t);
            return {"sin(" + a.text + ")", std::sin(a.value)};
        }
        default: {
            auto a = gen(rng, depth - 1, x, y, t);
            return {"(-" + a.text + ")", -a.value};
        }
    }
}

}  // namespace

TEST_CASE("expression: print/parse round trip is a fixed point") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        auto r = gen(rng, 4, 0.3, 0.7, 1.3);
        auto e = Expression::parse(r.text);
        CHECK(e.eval(0.3, 0.7, 1.3) == doctest::Approx(r.value).epsilon(1e-13));

        const std::string once = e.str();
        const std::string twice = Expression::parse(once).str();
        CHECK(once == twice);
        CHECK(Expression::parse(once).eval(0.3, 0.7, 1.3) ==
              doctest::Approx(r.value).epsilon(1e-13));
    }
}

TEST_CASE("expression: value semantics") {
    auto a = Expression::parse("x + 1");
    auto b = a;  // deep copy
    auto c = Expression::parse("t");
    c = a;
    CHECK(b.eval(2, 0, 0) == doctest::Approx(3.0));
    CHECK(c.eval(2, 0, 0) == doctest::Approx(3.0));
    auto d = std::move(a);
    CHECK(d.eval(2, 0, 0) == doctest::Approx(3.0));
}
