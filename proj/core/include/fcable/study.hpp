#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fcable/solver1d.hpp"
#include "fcable/solver2d.hpp"

namespace fcable {

enum class NormKind { max_final, max_all, l2_final };

NormKind parse_norm(std::string_view name);       // throws std::invalid_argument
std::string_view norm_name(NormKind kind);

double pick_norm(const ErrorReport1D& r, NormKind kind);
double pick_norm(const ErrorReport2D& r, NormKind kind);

/// One refinement level: time steps and spatial cells.
struct StudyLevel {
    int time_steps = 1;
    int cells_x = 2;
    int cells_y = 2;  // ignored in 1D
};

struct StudyRow {
    double tau = 0.0;
    double h = 0.0;
    double error = 0.0;
    std::optional<double> tco;
    std::optional<double> sco;
};

/// A refinement study over a 1D or 2D problem. Levels must refine
/// (strictly decreasing steps) and there must be at least two of them
/// for orders to be reported.
struct RefinementStudy {
    std::variant<CableProblem1D, CableProblem2D> problem;
    std::vector<StudyLevel> levels;
    NormKind norm = NormKind::max_all;
};

/// Observed orders from successive error ratios:
///   order_i = ln(e_{i-1}/e_i) / ln(s_{i-1}/s_i).
/// Requires positive errors and strictly decreasing steps; the result has
/// one entry fewer than the inputs.
std::vector<double> compute_orders(std::span<const double> errors,
                                   std::span<const double> steps);

std::vector<StudyRow> run_study(const RefinementStudy& study);

/// The ladder tau = 1/(5 m^2), h = 1/(5 m), m = 1..levels.
std::vector<StudyLevel> coupled_ladder(int levels);

/// Built-in manufactured problems: u = t^2 sin(pi x) (times sin(pi y) in
/// 2D), K1 = 1/pi^8, K2 = 1, unit domain and horizon, zero boundaries.
CableProblem1D example2_problem(double alpha1, double alpha2);
CableProblem2D example3_problem(double alpha1, double alpha2);

/// One row of the midpoint-derivative convergence experiment for a
/// single step size tau = 1/denominator.
struct DerivativeTestRow {
    double tau = 0.0;
    /// Aligned convention: samples on t_j = j*tau, k chosen so the target
    /// half-point (k+1/2)*tau is nearest to 0.5.
    double error_aligned = 0.0;
    /// Reference convention: target exactly 0.5 with samples at
    /// 0.5 - (l+1/2)*tau (history truncated at zero).
    double error_shifted = 0.0;
};

/// Midpoint approximation of the order-`alpha` derivative of
/// u(t) = t^{3-alpha} near t = 0.5, at tau = 1/denominator for each entry.
std::vector<DerivativeTestRow> derivative_test(double alpha,
                                               std::span<const int> denominators);

/// CSV emission: comma separators, LF line endings, header row always
/// present, floats with 9 significant digits.
void emit_csv(std::ostream& os, std::span<const std::string> header,
              std::span<const std::vector<double>> rows);
void emit_csv_file(const std::string& path, std::span<const std::string> header,
                   std::span<const std::vector<double>> rows);

std::string format_float(double v);  // 9 significant digits

}  // namespace fcable
