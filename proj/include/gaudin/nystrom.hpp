#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

namespace gaudin {

/// Fermi selects the Gaudin equation f + L f = 1, Bose the Lieb-Liniger
/// equation f - L f = 1.
enum class Statistics { Fermi, Bose };

std::string_view to_string(Statistics s);
Statistics parse_statistics(std::string_view name);

namespace nystrom {

/// Composite Gauss-Legendre grid on (-r/2, r/2), symmetric under x -> -x.
struct GridSpec {
  double r = 0.0;
  std::size_t nodes_per_panel = 0;
  std::vector<double> panels;  // breakpoints, size = panel count + 1
  std::vector<double> nodes;   // ascending
  std::vector<double> weights;
};

GridSpec build_grid(double r, std::size_t nodes_per_panel, double panel_width);

/// Same panels, twice the nodes per panel.
GridSpec refine(const GridSpec& grid);

/// Solution of the rescaled equation
///   f(x)/2 +- (1/2pi) int_{-r/2}^{r/2} f(y) dy / ((x-y)^2 + 1) = 1,
/// related to the unit-interval density by f(r x / 2) = 2 f_F(x; kappa).
struct Solution {
  Statistics statistics = Statistics::Fermi;
  double r = 0.0;
  double kappa = 0.0;
  GridSpec grid;
  std::vector<double> values;
  double moment0 = 0.0;
  double moment2 = 0.0;
  double err_estimate = 0.0;  // |moment0(grid) - moment0(refined grid)|
  double residual = 0.0;      // max off-node equation residual

  /// Nystrom natural interpolant 2 -+ (1/pi) sum_j w_j f_j / ((x-x_j)^2+1).
  double interpolate(double x) const;
};

/// Values of f at the grid nodes, no error estimate or residual check.
std::vector<double> solve_values(Statistics statistics, const GridSpec& grid);

/// Full solve: values on `grid`, moments, a node-doubling error estimate,
/// the off-node residual and all structural invariants. Throws
/// ConsistencyError on an invariant violation and AccuracyError when the
/// residual exceeds 1e-8.
Solution solve(Statistics statistics, double r, const GridSpec& grid);

/// (int f, int x^2 f) by the grid weights.
std::pair<double, double> moments(const Solution& sol);
std::pair<double, double> moments(const GridSpec& grid, const std::vector<double>& values);

/// Throws ConsistencyError if any Solution invariant fails.
void check_invariants(const Solution& sol);

struct ErrorEstimate {
  double abs_error = 0.0;
  double rel_error = 0.0;
  std::size_t nodes_per_panel = 0;  // finest level used
};

/// |delta moment0| between the grid and its refinement; refines once more if
/// the relative change exceeds 1e-8 and throws AccuracyError after that.
ErrorEstimate estimate_error(Statistics statistics, double r, const GridSpec& grid);

/// The unscaled problem f_F +- L_kappa f_F = 1 on (-1, 1), kernel
/// (kappa/pi) / ((x-y)^2 + kappa^2). `grid` must have r = 2.
struct UnscaledSolution {
  Statistics statistics = Statistics::Fermi;
  double kappa = 0.0;
  GridSpec grid;
  std::vector<double> values;
  double moment0 = 0.0;  // int_{-1}^{1} f_F
  double moment2 = 0.0;  // int_{-1}^{1} x^2 f_F

  double interpolate(double x) const;
};

UnscaledSolution solve_unscaled(Statistics statistics, double kappa, const GridSpec& grid);

}  // namespace nystrom
}  // namespace gaudin
