#include "fcable/study.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "fcable/rl_operator.hpp"

namespace fcable {

NormKind parse_norm(std::string_view name) {
    if (name == "max-final") return NormKind::max_final;
    if (name == "max-all") return NormKind::max_all;
    if (name == "l2-final") return NormKind::l2_final;
    throw std::invalid_argument("unknown norm '" + std::string(name) +
                                "' (expected max-final, max-all or l2-final)");
}

std::string_view norm_name(NormKind kind) {
    switch (kind) {
        case NormKind::max_final: return "max-final";
        case NormKind::max_all: return "max-all";
        case NormKind::l2_final: return "l2-final";
    }
    return "?";
}

double pick_norm(const ErrorReport1D& r, NormKind kind) {
    switch (kind) {
        case NormKind::max_final: return r.max_final;
        case NormKind::max_all: return r.max_all;
        case NormKind::l2_final: return r.l2_final;
    }
    return 0.0;
}

double pick_norm(const ErrorReport2D& r, NormKind kind) {
    switch (kind) {
        case NormKind::max_final: return r.max_final;
        case NormKind::max_all: return r.max_all;
        case NormKind::l2_final: return r.l2_final;
    }
    return 0.0;
}

std::vector<double> compute_orders(std::span<const double> errors,
                                   std::span<const double> steps) {
    if (errors.size() != steps.size())
        throw std::invalid_argument("errors and steps must have equal length");
    std::vector<double> orders;
    for (std::size_t i = 1; i < errors.size(); ++i) {
        if (errors[i - 1] <= 0.0 || errors[i] <= 0.0)
            throw std::domain_error("observed orders require positive errors");
        if (steps[i] >= steps[i - 1])
            throw std::domain_error("steps must be strictly decreasing");
        orders.push_back(std::log(errors[i - 1] / errors[i]) /
                         std::log(steps[i - 1] / steps[i]));
    }
    return orders;
}

std::vector<StudyLevel> coupled_ladder(int levels) {
    if (levels < 1) throw std::invalid_argument("need at least one level");
    std::vector<StudyLevel> out;
    for (int m = 1; m <= levels; ++m)
        out.push_back(StudyLevel{5 * m * m, 5 * m, 5 * m});
    return out;
}

std::vector<StudyRow> run_study(const RefinementStudy& study) {
    if (study.levels.empty())
        throw std::invalid_argument("refinement study needs levels");

    std::vector<StudyRow> rows;
    std::vector<double> errors, taus, hs;
    for (const StudyLevel& lvl : study.levels) {
        StudyRow row;
        if (const auto* p1 = std::get_if<CableProblem1D>(&study.problem)) {
            auto sol = solve_1d(*p1, lvl.time_steps, lvl.cells_x);
            if (!sol.report)
                throw std::invalid_argument("study problem needs an exact solution");
            row.tau = sol.tau;
            row.h = sol.grid.spacing();
            row.error = pick_norm(*sol.report, study.norm);
        } else {
            const auto& p2 = std::get<CableProblem2D>(study.problem);
            auto sol = solve_2d(p2, lvl.time_steps, lvl.cells_x, lvl.cells_y);
            if (!sol.report)
                throw std::invalid_argument("study problem needs an exact solution");
            row.tau = sol.tau;
            row.h = p2.length_x / lvl.cells_x;
            row.error = pick_norm(*sol.report, study.norm);
        }
        errors.push_back(row.error);
        taus.push_back(row.tau);
        hs.push_back(row.h);
        rows.push_back(row);
    }
    if (rows.size() >= 2) {
        auto tco = compute_orders(errors, taus);
        auto sco = compute_orders(errors, hs);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            rows[i].tco = tco[i - 1];
            rows[i].sco = sco[i - 1];
        }
    }
    return rows;
}

CableProblem1D example2_problem(double alpha1, double alpha2) {
    const double pi = std::numbers::pi;
    const double k1 = 1.0 / std::pow(pi, 8);
    CableProblem1D p;
    p.alpha1 = alpha1;
    p.alpha2 = alpha2;
    p.k1 = k1;
    p.k2 = 1.0;
    p.source = [=](double x, double t) {
        return 2.0 *
               (t + std::pow(t, 1.0 + alpha1) /
                        (std::pow(pi, 6) * std::tgamma(2.0 + alpha1)) +
                std::pow(t, 1.0 + alpha2) / std::tgamma(2.0 + alpha2)) *
               std::sin(pi * x);
    };
    p.left_boundary = [](double) { return 0.0; };
    p.right_boundary = [](double) { return 0.0; };
    p.exact = [=](double x, double t) { return t * t * std::sin(pi * x); };
    return p;
}

CableProblem2D example3_problem(double alpha1, double alpha2) {
    const double pi = std::numbers::pi;
    CableProblem2D p;
    p.alpha1 = alpha1;
    p.alpha2 = alpha2;
    p.k1 = 1.0 / std::pow(pi, 8);
    p.k2 = 1.0;
    p.source = [=](double x, double y, double t) {
        return 2.0 *
               (t + 2.0 * std::pow(t, 1.0 + alpha1) /
                        (std::pow(pi, 6) * std::tgamma(2.0 + alpha1)) +
                std::pow(t, 1.0 + alpha2) / std::tgamma(2.0 + alpha2)) *
               std::sin(pi * x) * std::sin(pi * y);
    };
    p.boundary = [](double, double, double) { return 0.0; };
    p.exact = [=](double x, double y, double t) {
        return t * t * std::sin(pi * x) * std::sin(pi * y);
    };
    return p;
}

std::vector<DerivativeTestRow> derivative_test(double alpha,
                                               std::span<const int> denominators) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::domain_error("derivative test order must lie in (0, 1]");
    const double exponent = 3.0 - alpha;
    auto u = [&](double t) { return t <= 0.0 ? 0.0 : std::pow(t, exponent); };

    std::vector<DerivativeTestRow> out;
    for (int d : denominators) {
        if (d < 2) throw std::domain_error("step denominator must be >= 2");
        const double tau = 1.0 / d;
        const double scale = std::pow(tau, -alpha);
        DerivativeTestRow row;
        row.tau = tau;

        // Aligned: grid t_j = j*tau, target the half-point nearest 0.5.
        {
            const int k = static_cast<int>(std::lround(0.5 / tau - 0.5));
            WeightSequence w = midpoint_weights_recurrence(alpha, k + 1);
            double sum = 0.0;
            for (int l = 0; l <= k; ++l) sum += w[l] * u((k - l) * tau);
            const double t_half = (k + 0.5) * tau;
            row.error_aligned =
                std::abs(scale * sum - exact_rl_monomial(exponent, alpha, t_half));
        }

        // Shifted: target exactly 0.5 with samples at 0.5 - (l+1/2)*tau.
        {
            const int k = static_cast<int>(std::lround(0.5 / tau));
            WeightSequence w = midpoint_weights_recurrence(alpha, k);
            double sum = 0.0;
            for (int l = 0; l < k; ++l) sum += w[l] * u(0.5 - (l + 0.5) * tau);
            row.error_shifted =
                std::abs(scale * sum - exact_rl_monomial(exponent, alpha, 0.5));
        }
        out.push_back(row);
    }
    return out;
}

std::string format_float(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void emit_csv(std::ostream& os, std::span<const std::string> header,
              std::span<const std::vector<double>> rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) os << ',';
        os << header[i];
    }
    os << '\n';
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::invalid_argument("csv row width does not match header");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << format_float(row[i]);
        }
        os << '\n';
    }
}

void emit_csv_file(const std::string& path, std::span<const std::string> header,
                   std::span<const std::vector<double>> rows) {
    std::ofstream os(path, std::ios::binary);  // binary: keep LF endings
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    emit_csv(os, header, rows);
    if (!os) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace fcable
