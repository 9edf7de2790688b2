// Command-line surface: weight dumps, derivative convergence checks,
// single Cable solves (1D/2D), and refinement studies with CSV output.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fcable/expression.hpp"
#include "fcable/solver1d.hpp"
#include "fcable/solver2d.hpp"
#include "fcable/study.hpp"
#include "fcable/weights.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitValidation = 2;

struct OutputSink {
    std::optional<fs::path> dir;

    /// Writes the CSV either to <dir>/<name> or to stdout.
    void write(const std::string& name, std::span<const std::string> header,
               std::span<const std::vector<double>> rows) const {
        if (dir) {
            fs::create_directories(*dir);
            fcable::emit_csv_file((*dir / name).string(), header, rows);
            std::cout << "wrote " << (*dir / name).string() << "\n";
        } else {
            fcable::emit_csv(std::cout, header, rows);
        }
    }
};

std::pair<double, double> parse_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--pair expects 'a1,a2'");
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config '" + path + "'");
    json cfg;
    try {
        in >> cfg;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config '" + path + "': " + e.what());
    }
    return cfg;
}

double need_number(const json& cfg, const char* key) {
    if (!cfg.contains(key) || !cfg[key].is_number())
        throw std::invalid_argument(std::string("config key '") + key +
                                    "' missing or not a number");
    return cfg[key].get<double>();
}

fcable::Expression need_expr(const json& cfg, const char* key) {
    if (!cfg.contains(key) || !cfg[key].is_string())
        throw std::invalid_argument(std::string("config key '") + key +
                                    "' missing or not a string");
    return fcable::Expression::parse(cfg[key].get<std::string>());
}

fcable::CableProblem1D problem1d_from_config(const json& cfg) {
    const std::string preset = cfg.value("problem", "custom");
    if (preset == "example2")
        return fcable::example2_problem(need_number(cfg, "alpha1"),
                                        need_number(cfg, "alpha2"));
    if (preset != "custom")
        throw std::invalid_argument("unknown 1D problem preset '" + preset + "'");

    fcable::CableProblem1D p;
    p.alpha1 = need_number(cfg, "alpha1");
    p.alpha2 = need_number(cfg, "alpha2");
    p.k1 = cfg.value("K1", 1.0);
    p.k2 = cfg.value("K2", 1.0);
    p.length = cfg.value("domain", 1.0);
    p.horizon = cfg.value("T", 1.0);

    auto src = need_expr(cfg, "source");
    p.source = [src](double x, double t) { return src.eval(x, 0.0, t); };
    if (cfg.contains("boundary")) {
        auto b = need_expr(cfg, "boundary");
        const double L = p.length;
        p.left_boundary = [b](double t) { return b.eval(0.0, 0.0, t); };
        p.right_boundary = [b, L](double t) { return b.eval(L, 0.0, t); };
    } else {
        p.left_boundary = [](double) { return 0.0; };
        p.right_boundary = [](double) { return 0.0; };
    }
    if (cfg.contains("exact")) {
        auto e = need_expr(cfg, "exact");
        p.exact = [e](double x, double t) { return e.eval(x, 0.0, t); };
    }
    return p;
}

fcable::CableProblem2D problem2d_from_config(const json& cfg) {
    const std::string preset = cfg.value("problem", "custom");
    if (preset == "example3")
        return fcable::example3_problem(need_number(cfg, "alpha1"),
                                        need_number(cfg, "alpha2"));
    if (preset != "custom")
        throw std::invalid_argument("unknown 2D problem preset '" + preset + "'");

    fcable::CableProblem2D p;
    p.alpha1 = need_number(cfg, "alpha1");
    p.alpha2 = need_number(cfg, "alpha2");
    p.k1 = cfg.value("K1", 1.0);
    p.k2 = cfg.value("K2", 1.0);
    if (cfg.contains("domain") && cfg["domain"].is_array()) {
        p.length_x = cfg["domain"][0].get<double>();
        p.length_y = cfg["domain"][1].get<double>();
    }
    p.horizon = cfg.value("T", 1.0);

    auto src = need_expr(cfg, "source");
    p.source = [src](double x, double y, double t) { return src.eval(x, y, t); };
    if (cfg.contains("boundary")) {
        auto b = need_expr(cfg, "boundary");
        p.boundary = [b](double x, double y, double t) { return b.eval(x, y, t); };
    } else {
        p.boundary = [](double, double, double) { return 0.0; };
    }
    if (cfg.contains("exact")) {
        auto e = need_expr(cfg, "exact");
        p.exact = [e](double x, double y, double t) { return e.eval(x, y, t); };
    }
    return p;
}

fcable::Field1D random_interior_1d(const fcable::Grid1D& g, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    auto f = fcable::Field1D::zeros(g);
    for (int j = 1; j < g.cells; ++j) f[j] = dist(rng);
    return f;
}

fcable::Field2D random_interior_2d(const fcable::Grid1D& gx,
                                   const fcable::Grid1D& gy, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    auto f = fcable::Field2D::zeros(gx, gy);
    for (int i = 1; i < gx.cells; ++i)
        for (int j = 1; j < gy.cells; ++j) f.at(i, j) = dist(rng);
    return f;
}

const double kNaN = std::numeric_limits<double>::quiet_NaN();

void study_to_csv(const std::vector<fcable::StudyRow>& rows,
                  const OutputSink& sink, const std::string& name) {
    const std::vector<std::string> header = {"tau", "h", "error", "tco", "sco"};
    std::vector<std::vector<double>> data;
    for (const auto& r : rows)
        data.push_back({r.tau, r.h, r.error, r.tco.value_or(kNaN),
                        r.sco.value_or(kNaN)});
    sink.write(name, header, data);
}

int run(int argc, char** argv) {
    CLI::App app{"Fractional Cable equation toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    std::optional<std::string> out_dir;
    app.add_option("--out", out_dir, "Directory for CSV output (default: stdout)");

    // weights
    auto* cmd_w = app.add_subcommand("weights", "Dump midpoint quadrature weights");
    double beta = 0.5;
    int count = 16;
    cmd_w->add_option("--beta", beta, "Derivative order in (0, 1]")->required();
    cmd_w->add_option("--count", count, "Number of weights")->required();

    // derivative-test
    auto* cmd_d =
        app.add_subcommand("derivative-test", "Midpoint derivative convergence check");
    double alpha = 0.5;
    std::vector<double> taus;
    std::string convention = "aligned";
    cmd_d->add_option("--alpha", alpha, "Derivative order in (0, 1]")->required();
    cmd_d->add_option("--taus", taus, "Step sizes (e.g. 0.05 0.025)")->required();
    cmd_d->add_option("--convention", convention,
                      "aligned (half-point grid) or shifted (target exactly 0.5)")
        ->check(CLI::IsMember({"aligned", "shifted"}));

    // solve1d / solve2d
    auto* cmd_s1 = app.add_subcommand("solve1d", "Single 1D Cable solve");
    auto* cmd_s2 = app.add_subcommand("solve2d", "Single 2D Cable solve");
    std::string config_path;
    std::string norm_flag;
    std::optional<unsigned> seed;
    for (auto* c : {cmd_s1, cmd_s2}) {
        c->add_option("--config", config_path, "JSON problem description")->required();
        c->add_option("--norm", norm_flag, "max-final | max-all | l2-final");
        c->add_option("--seed", seed,
                      "Also run a perturbation-decay test with this RNG seed");
    }

    // study1d / study2d
    auto* cmd_t1 = app.add_subcommand("study1d", "1D refinement study");
    auto* cmd_t2 = app.add_subcommand("study2d", "2D refinement study");
    std::string preset1 = "table2", preset2 = "table3", pair_text = "0.5,0.5";
    int levels = 5;
    cmd_t1->add_option("--preset", preset1, "table2")->check(CLI::IsMember({"table2"}));
    cmd_t2->add_option("--preset", preset2, "table3")->check(CLI::IsMember({"table3"}));
    for (auto* c : {cmd_t1, cmd_t2}) {
        c->add_option("--pair", pair_text, "alpha1,alpha2")->required();
        c->add_option("--levels", levels, "Refinement levels (default 5)");
        c->add_option("--norm", norm_flag, "max-final | max-all | l2-final");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    OutputSink sink;
    if (out_dir) sink.dir = fs::path(*out_dir);

    if (cmd_w->parsed()) {
        if (count < 1) throw std::invalid_argument("--count must be positive");
        auto w = fcable::midpoint_weights_recurrence(beta, count - 1);
        std::vector<std::vector<double>> rows;
        for (std::size_t l = 0; l < w.size(); ++l)
            rows.push_back({static_cast<double>(l), w[l]});
        const std::vector<std::string> header = {"index", "weight"};
        sink.write("weights.csv", header, rows);
        return kExitOk;
    }

    if (cmd_d->parsed()) {
        std::vector<int> denoms;
        for (double t : taus) {
            if (!(t > 0.0 && t < 1.0))
                throw std::invalid_argument("--taus entries must lie in (0, 1)");
            denoms.push_back(static_cast<int>(std::lround(1.0 / t)));
        }
        auto table = fcable::derivative_test(alpha, denoms);
        std::vector<double> errs, steps;
        for (const auto& r : table) {
            errs.push_back(convention == "aligned" ? r.error_aligned
                                                   : r.error_shifted);
            steps.push_back(r.tau);
        }
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < table.size(); ++i) {
            double order = kNaN;
            if (i > 0)
                order = std::log(errs[i - 1] / errs[i]) /
                        std::log(steps[i - 1] / steps[i]);
            rows.push_back({steps[i], errs[i], order});
        }
        const std::vector<std::string> header = {"tau", "abs_error", "observed_order"};
        sink.write("derivative_test.csv", header, rows);
        return kExitOk;
    }

    if (cmd_s1->parsed()) {
        json cfg = load_config(config_path);
        auto problem = problem1d_from_config(cfg);
        const int N = static_cast<int>(need_number(cfg, "N"));
        const int M = static_cast<int>(need_number(cfg, "M"));
        auto sol = fcable::solve_1d(problem, N, M);

        std::vector<std::string> header = {"x", "u"};
        if (problem.exact) header.push_back("exact");
        std::vector<std::vector<double>> rows;
        const auto& u = sol.states.back();
        for (int j = 0; j <= sol.grid.cells; ++j) {
            std::vector<double> row = {sol.grid.node(j), u[j]};
            if (problem.exact)
                row.push_back(problem.exact(sol.grid.node(j), problem.horizon));
            rows.push_back(row);
        }
        sink.write(cfg.value("output", std::string("solution1d.csv")), header, rows);
        if (sol.report) {
            auto norm = fcable::parse_norm(
                !norm_flag.empty() ? norm_flag
                                   : cfg.value("norm", std::string("max-all")));
            std::cout << "error (" << fcable::norm_name(norm)
                      << ") = " << fcable::format_float(pick_norm(*sol.report, norm))
                      << "\n";
        }
        if (seed) {
            auto rho = random_interior_1d(sol.grid, *seed);
            const double ratio = fcable::perturbation_ratio_1d(
                problem.alpha1, problem.alpha2, problem.k1, problem.k2, N, rho);
            const std::vector<std::string> ph = {"seed", "ratio", "bound"};
            const std::vector<std::vector<double>> pr = {
                {static_cast<double>(*seed), ratio, std::sqrt(6.0) / 2.0}};
            sink.write("perturbation1d.csv", ph, pr);
        }
        return kExitOk;
    }

    if (cmd_s2->parsed()) {
        json cfg = load_config(config_path);
        auto problem = problem2d_from_config(cfg);
        const int N = static_cast<int>(need_number(cfg, "N"));
        const int M1 = static_cast<int>(cfg.contains("M1") ? need_number(cfg, "M1")
                                                           : need_number(cfg, "M"));
        const int M2 = static_cast<int>(cfg.contains("M2") ? need_number(cfg, "M2")
                                                           : need_number(cfg, "M"));
        auto sol = fcable::solve_2d(problem, N, M1, M2);

        std::vector<std::string> header = {"x", "y", "u"};
        if (problem.exact) header.push_back("exact");
        std::vector<std::vector<double>> rows;
        const auto& u = sol.states.back();
        for (int i = 0; i <= M1; ++i)
            for (int j = 0; j <= M2; ++j) {
                std::vector<double> row = {u.grid_x.node(i), u.grid_y.node(j),
                                           u.at(i, j)};
                if (problem.exact)
                    row.push_back(problem.exact(u.grid_x.node(i), u.grid_y.node(j),
                                                problem.horizon));
                rows.push_back(row);
            }
        sink.write(cfg.value("output", std::string("solution2d.csv")), header, rows);
        if (sol.report) {
            auto norm = fcable::parse_norm(
                !norm_flag.empty() ? norm_flag
                                   : cfg.value("norm", std::string("max-all")));
            std::cout << "error (" << fcable::norm_name(norm)
                      << ") = " << fcable::format_float(pick_norm(*sol.report, norm))
                      << "\n";
        }
        if (seed) {
            auto rho = random_interior_2d(sol.states.back().grid_x,
                                          sol.states.back().grid_y, *seed);
            const double ratio = fcable::perturbation_ratio_2d(
                problem.alpha1, problem.alpha2, problem.k1, problem.k2, N, rho);
            const std::vector<std::string> ph = {"seed", "ratio", "bound"};
            const std::vector<std::vector<double>> pr = {
                {static_cast<double>(*seed), ratio, std::sqrt(3.0)}};
            sink.write("perturbation2d.csv", ph, pr);
        }
        return kExitOk;
    }

    const auto [a1, a2] = parse_pair(pair_text);
    fcable::RefinementStudy study;
    study.levels = fcable::coupled_ladder(levels);
    if (!norm_flag.empty()) study.norm = fcable::parse_norm(norm_flag);
    if (cmd_t1->parsed()) {
        study.problem = fcable::example2_problem(a1, a2);
        study_to_csv(fcable::run_study(study), sink, "study1d.csv");
    } else {
        study.problem = fcable::example3_problem(a1, a2);
        study_to_csv(fcable::run_study(study), sink, "study2d.csv");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const fcable::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
