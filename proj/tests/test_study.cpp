#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "fcable/study.hpp"

using namespace fcable;

TEST_CASE("norm selection parses and round-trips") {
    CHECK(parse_norm("max-final") == NormKind::max_final);
    CHECK(parse_norm("max-all") == NormKind::max_all);
    CHECK(parse_norm("l2-final") == NormKind::l2_final);
    CHECK(norm_name(parse_norm("max-all")) == "max-all");
    CHECK_THROWS_AS(parse_norm("sup"), std::invalid_argument);

    ErrorReport1D r{1.0, 2.0, 3.0};
    CHECK(pick_norm(r, NormKind::max_final) == 1.0);
    CHECK(pick_norm(r, NormKind::max_all) == 2.0);
    CHECK(pick_norm(r, NormKind::l2_final) == 3.0);
}

TEST_CASE("observed orders from error ratios") {
    const std::vector<double> errs = {4e-2, 1e-2};
    const std::vector<double> steps = {0.2, 0.1};
    auto o = compute_orders(errs, steps);
    REQUIRE(o.size() == 1);
    CHECK(o[0] == doctest::Approx(2.0));

    // Reference error pair: tau 1/5 -> 1/20 gives order 1.8906.
    auto o2 = compute_orders(std::vector<double>{3.552136e-02, 2.583580e-03},
                             std::vector<double>{1.0 / 5, 1.0 / 20});
    CHECK(o2[0] == doctest::Approx(1.8906).epsilon(1e-4));

    // Halved-step pair at order two.
    auto o3 = compute_orders(std::vector<double>{7.611138e-03, 1.903986e-03},
                             std::vector<double>{1.0 / 20, 1.0 / 40});
    CHECK(o3[0] == doctest::Approx(1.9991).epsilon(1e-4));
}

TEST_CASE("observed orders are scale invariant and validated") {
    const std::vector<double> errs = {3e-3, 8e-4, 2.1e-4};
    const std::vector<double> steps = {0.1, 0.05, 0.025};
    auto base = compute_orders(errs, steps);
    std::vector<double> scaled;
    for (double e : errs) scaled.push_back(17.0 * e);
    auto after = compute_orders(scaled, steps);
    for (std::size_t i = 0; i < base.size(); ++i)
        CHECK(base[i] == doctest::Approx(after[i]).epsilon(1e-14));

    CHECK_THROWS_AS(compute_orders(std::vector<double>{1e-2, 0.0},
                                   std::vector<double>{0.2, 0.1}),
                    std::domain_error);
    CHECK_THROWS_AS(compute_orders(std::vector<double>{1e-2, 1e-3},
                                   std::vector<double>{0.1, 0.1}),
                    std::domain_error);
    CHECK_THROWS_AS(compute_orders(std::vector<double>{1e-2},
                                   std::vector<double>{0.1, 0.05}),
                    std::invalid_argument);
}

TEST_CASE("refinement ladder and study row layout") {
    auto ladder = coupled_ladder(3);
    REQUIRE(ladder.size() == 3);
    CHECK(ladder[0].time_steps == 5);
    CHECK(ladder[2].time_steps == 45);
    CHECK(ladder[2].cells_x == 15);

    RefinementStudy st;
    st.problem = example2_problem(0.5, 0.5);
    st.levels = coupled_ladder(2);
    auto rows = run_study(st);
    REQUIRE(rows.size() == 2);
    CHECK_FALSE(rows[0].tco.has_value());
    REQUIRE(rows[1].tco.has_value());
    CHECK(*rows[1].sco == doctest::Approx(2.0 * *rows[1].tco).epsilon(1e-9));

    // A single level yields errors but no orders.
    st.levels = {ladder[0]};
    auto one = run_study(st);
    REQUIRE(one.size() == 1);
    CHECK_FALSE(one[0].tco.has_value());
}

TEST_CASE("derivative convergence table: aligned and reference conventions") {
    // Aligned half-point ladder: second order, known magnitude near 1/80.
    const std::vector<int> denoms = {41, 81, 161};
    auto rows = derivative_test(0.5, denoms);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].error_aligned / rows[1].error_aligned ==
          doctest::Approx(std::pow(81.0 / 41.0, 2)).epsilon(0.02));

    auto near80 = derivative_test(0.5, std::vector<int>{80});
    CHECK(std::abs(near80[0].error_aligned - 4.759995e-04) < 1e-8);

    // Reference convention targets exactly t = 0.5 and is also second order.
    CHECK(rows[0].error_shifted / rows[2].error_shifted ==
          doctest::Approx(std::pow(161.0 / 41.0, 2)).epsilon(0.1));

    CHECK_THROWS_AS(derivative_test(1.5, denoms), std::domain_error);
    CHECK_THROWS_AS(derivative_test(0.5, std::vector<int>{1}), std::domain_error);
}

TEST_CASE("csv emission: header, separators, line endings, precision") {
    const std::vector<std::string> header = {"a", "b"};
    std::vector<std::vector<double>> rows = {{1.0, 0.123456789123}, {2.5, 3e-7}};
    std::ostringstream os;
    emit_csv(os, header, rows);
    const std::string text = os.str();
    CHECK(text == "a,b\n1,0.123456789\n2.5,3e-07\n");
    CHECK(text.find('\r') == std::string::npos);

    // Empty payload: header-only file.
    std::ostringstream os2;
    emit_csv(os2, header, {});
    CHECK(os2.str() == "a,b\n");

    std::vector<std::vector<double>> bad = {{1.0}};
    std::ostringstream os3;
    CHECK_THROWS_AS(emit_csv(os3, header, bad), std::invalid_argument);
}

TEST_CASE("csv round trip preserves nine significant digits") {
    std::vector<std::vector<double>> rows = {
        {6.69481283e-05, 1.0 / 3.0}, {9.87654321e+08, -2.718281828e-10}};
    const std::vector<std::string> header = {"u", "v"};
    std::ostringstream os;
    emit_csv(os, header, rows);

    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);  // header
    for (const auto& row : rows) {
        std::getline(in, line);
        const auto comma = line.find(',');
        const double a = std::stod(line.substr(0, comma));
        const double b = std::stod(line.substr(comma + 1));
        CHECK(a == doctest::Approx(row[0]).epsilon(1e-8));
        CHECK(b == doctest::Approx(row[1]).epsilon(1e-8));
    }
}

TEST_CASE("built-in manufactured problems expose the documented exact field") {
    auto p1 = example2_problem(0.4, 0.6);
    CHECK(p1.exact(0.5, 1.0) == doctest::Approx(1.0));
    CHECK(p1.exact(0.0, 1.0) == doctest::Approx(0.0));
    CHECK(p1.k2 == doctest::Approx(1.0));

    auto p2 = example3_problem(0.4, 0.6);
    CHECK(p2.exact(0.5, 0.5, 1.0) == doctest::Approx(1.0));
    CHECK(p2.boundary(0.0, 0.3, 0.7) == doctest::Approx(0.0));
}
