#include "gaudin/nystrom.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "gaudin/constants.hpp"
#include "gaudin/errors.hpp"
#include "gaudin/quadrature.hpp"

namespace gaudin {

std::string_view to_string(Statistics s) {
  return s == Statistics::Fermi ? "fermi" : "bose";
}

Statistics parse_statistics(std::string_view name) {
  if (name == "fermi") return Statistics::Fermi;
  if (name == "bose") return Statistics::Bose;
  throw UsageError("unknown statistics '" + std::string(name) + "'");
}

namespace nystrom {

namespace {

constexpr double kResidualTolerance = 1e-8;
constexpr double kConvergenceTolerance = 1e-8;
constexpr std::size_t kResidualPoints = 100;

double sign_of(Statistics s) { return s == Statistics::Fermi ? 1.0 : -1.0; }

// Solves  diag * u(x) + coupling * sum_j w_j k(x - x_j) u_j = 1  on a grid
// symmetric about 0 with an even kernel k. The even solution is found from
// the half system on x >= 0, symmetrised with sqrt(weights) so that it is
// SPD for both signs of the coupling.
template <typename Kernel>
std::vector<double> solve_even(const GridSpec& grid, double diag, double coupling,
                               Kernel kernel) {
  const std::size_t n = grid.nodes.size();
  const std::size_t first = n / 2;
  const std::size_t m = n - first;

  Eigen::VectorXd x(m);
  Eigen::VectorXd sw(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t g = first + i;
    x[i] = grid.nodes[g];
    const double w = grid.nodes[g] == 0.0 ? grid.weights[g] : 2.0 * grid.weights[g];
    sw[i] = std::sqrt(w);
  }

  Eigen::MatrixXd a(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = j; i < m; ++i) {
      const double k = 0.5 * (kernel(x[i] - x[j]) + kernel(x[i] + x[j]));
      a(i, j) = coupling * sw[i] * sw[j] * k;
    }
    a(j, j) += diag;
  }

  Eigen::LLT<Eigen::MatrixXd, Eigen::Lower> llt(a);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("nystrom: Cholesky factorisation failed");
  }
  const Eigen::VectorXd v = llt.solve(sw);

  std::vector<double> values(n);
  for (std::size_t i = 0; i < m; ++i) {
    const double u = v[i] / sw[i];
    values[first + i] = u;
    values[n - 1 - (first + i)] = u;
  }
  return values;
}

double lorentz(double d) { return 1.0 / (d * d + 1.0); }

double interpolate_rescaled(Statistics s, const GridSpec& grid,
                            const std::vector<double>& values, double x) {
  double sum = 0.0;
  for (std::size_t j = 0; j < grid.nodes.size(); ++j) {
    sum += grid.weights[j] * values[j] * lorentz(x - grid.nodes[j]);
  }
  return 2.0 - sign_of(s) * sum / kPi;
}

// Max over equispaced off-node points of |f(x)/2 +- (1/2pi) int f K - 1|,
// with the integral taken on the refined grid using the interpolant.
double off_node_residual(Statistics s, const GridSpec& grid,
                         const std::vector<double>& values, const GridSpec& fine) {
  std::vector<double> f_fine(fine.nodes.size());
  for (std::size_t j = 0; j < fine.nodes.size(); ++j) {
    f_fine[j] = interpolate_rescaled(s, grid, values, fine.nodes[j]);
  }
  const double half = 0.5 * grid.r;
  double worst = 0.0;
  for (std::size_t k = 0; k < kResidualPoints; ++k) {
    const double x = -half + grid.r * (static_cast<double>(k) + 0.37) /
                                 static_cast<double>(kResidualPoints);
    double integral = 0.0;
    for (std::size_t j = 0; j < fine.nodes.size(); ++j) {
      integral += fine.weights[j] * f_fine[j] * lorentz(x - fine.nodes[j]);
    }
    const double f = interpolate_rescaled(s, grid, values, x);
    const double res = 0.5 * f + sign_of(s) * integral / (2.0 * kPi) - 1.0;
    worst = std::max(worst, std::abs(res));
  }
  return worst;
}

}  // namespace

namespace {

void fill_nodes(GridSpec& grid) {
  const std::size_t count = grid.panels.size() - 1;
  const std::size_t per = grid.nodes_per_panel;
  const quad::Rule& rule = quad::gauss_legendre(per);
  const std::size_t n = count * per;
  grid.nodes.resize(n);
  grid.weights.resize(n);
  for (std::size_t p = 0; p < count; ++p) {
    const double mid = 0.5 * (grid.panels[p] + grid.panels[p + 1]);
    const double half = 0.5 * (grid.panels[p + 1] - grid.panels[p]);
    for (std::size_t k = 0; k < per; ++k) {
      grid.nodes[p * per + k] = mid + half * rule.nodes[k];
      grid.weights[p * per + k] = half * rule.weights[k];
    }
  }
  for (std::size_t i = 0; i < n / 2; ++i) {
    grid.nodes[n - 1 - i] = -grid.nodes[i];
    grid.weights[n - 1 - i] = grid.weights[i];
  }
  if (n % 2 == 1) grid.nodes[n / 2] = 0.0;
}

}  // namespace

GridSpec build_grid(double r, std::size_t nodes_per_panel, double panel_width) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("build_grid: r must be positive");
  if (nodes_per_panel < 4) throw DomainError("build_grid: need >= 4 nodes per panel");
  if (!(panel_width > 0.0) || panel_width > 1.0) {
    throw DomainError("build_grid: panel width must lie in (0, 1]");
  }
  const auto count = static_cast<std::size_t>(
      std::max(1.0, std::ceil(r / panel_width * (1.0 - 1e-12))));

  GridSpec grid;
  grid.r = r;
  grid.nodes_per_panel = nodes_per_panel;
  grid.panels = quad::uniform_breaks(-0.5 * r, 0.5 * r, count);
  for (std::size_t p = 0; p < (count + 1) / 2; ++p) {
    grid.panels[count - p] = -grid.panels[p];
  }
  if (count % 2 == 0) grid.panels[count / 2] = 0.0;
  fill_nodes(grid);
  return grid;
}

GridSpec refine(const GridSpec& grid) {
  GridSpec fine;
  fine.r = grid.r;
  fine.nodes_per_panel = 2 * grid.nodes_per_panel;
  fine.panels = grid.panels;
  fill_nodes(fine);
  return fine;
}

double Solution::interpolate(double x) const {
  return interpolate_rescaled(statistics, grid, values, x);
}

std::vector<double> solve_values(Statistics statistics, const GridSpec& grid) {
  return solve_even(grid, 0.5, sign_of(statistics) / (2.0 * kPi), lorentz);
}

std::pair<double, double> moments(const GridSpec& grid, const std::vector<double>& values) {
  double m0 = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    const double wf = grid.weights[i] * values[i];
    m0 += wf;
    m2 += wf * grid.nodes[i] * grid.nodes[i];
  }
  return {m0, m2};
}

std::pair<double, double> moments(const Solution& sol) {
  return moments(sol.grid, sol.values);
}

void check_invariants(const Solution& sol) {
  const auto fail = [](const std::string& what) {
    throw ConsistencyError("nystrom solution invariant violated: " + what);
  };
  const std::size_t n = sol.values.size();
  if (n != sol.grid.nodes.size()) fail("value count does not match grid");
  for (std::size_t i = 0; i < n; ++i) {
    // Invariants are stated for the unit-interval density f_F = f/2.
    const double unit = 0.5 * sol.values[i];
    if (sol.statistics == Statistics::Fermi) {
      if (!(unit > 0.0 && unit < 1.0)) fail("Fermi density outside (0, 1)");
    } else if (!(unit >= 1.0)) {
      fail("Bose density below 1");
    }
    if (std::abs(sol.values[i] - sol.values[n - 1 - i]) > 1e-10) fail("asymmetric density");
  }
  if (!(sol.moment0 > 0.0) || !(sol.moment2 > 0.0)) fail("nonpositive moment");
  if (sol.statistics == Statistics::Fermi && !(sol.moment0 < 2.0 * sol.r)) {
    fail("Fermi moment0 >= 2r");
  }
  if (sol.statistics == Statistics::Bose && !(sol.moment0 > 2.0 * sol.r)) {
    fail("Bose moment0 <= 2r");
  }
}

Solution solve(Statistics statistics, double r, const GridSpec& grid) {
  if (!(r > 0.0)) throw DomainError("solve: r must be positive");
  if (std::abs(grid.r - r) > 1e-12 * r) throw DomainError("solve: grid does not match r");

  Solution sol;
  sol.statistics = statistics;
  sol.r = r;
  sol.kappa = 2.0 / r;
  sol.grid = grid;
  sol.values = solve_values(statistics, grid);
  std::tie(sol.moment0, sol.moment2) = moments(sol);

  const GridSpec fine = refine(grid);
  const auto fine_values = solve_values(statistics, fine);
  sol.err_estimate = std::abs(moments(fine, fine_values).first - sol.moment0);
  sol.residual = off_node_residual(statistics, grid, sol.values, fine);

  check_invariants(sol);
  if (sol.residual > kResidualTolerance) {
    throw AccuracyError("solve: off-node residual " + std::to_string(sol.residual) +
                        " exceeds 1e-8; refine the grid");
  }
  return sol;
}

ErrorEstimate estimate_error(Statistics statistics, double r, const GridSpec& grid) {
  if (std::abs(grid.r - r) > 1e-12 * r) throw DomainError("estimate_error: grid does not match r");
  GridSpec current = grid;
  double m0 = moments(current, solve_values(statistics, current)).first;
  for (int level = 0; level < 2; ++level) {
    GridSpec next = refine(current);
    const double m0_next = moments(next, solve_values(statistics, next)).first;
    const double delta = std::abs(m0_next - m0);
    if (delta <= kConvergenceTolerance * std::abs(m0_next)) {
      return {delta, delta / std::abs(m0_next), next.nodes_per_panel};
    }
    current = std::move(next);
    m0 = m0_next;
  }
  throw AccuracyError("estimate_error: moment0 not converged after two doublings");
}

double UnscaledSolution::interpolate(double x) const {
  double sum = 0.0;
  for (std::size_t j = 0; j < grid.nodes.size(); ++j) {
    const double d = x - grid.nodes[j];
    sum += grid.weights[j] * values[j] / (d * d + kappa * kappa);
  }
  return 1.0 - sign_of(statistics) * kappa * sum / kPi;
}

UnscaledSolution solve_unscaled(Statistics statistics, double kappa, const GridSpec& grid) {
  if (!(kappa > 0.0)) throw DomainError("solve_unscaled: kappa must be positive");
  if (std::abs(grid.r - 2.0) > 1e-12) throw DomainError("solve_unscaled: grid must span (-1, 1)");
  UnscaledSolution sol;
  sol.statistics = statistics;
  sol.kappa = kappa;
  sol.grid = grid;
  const double k2 = kappa * kappa;
  sol.values = solve_even(grid, 1.0, sign_of(statistics) * kappa / kPi,
                          [k2](double d) { return 1.0 / (d * d + k2); });
  std::tie(sol.moment0, sol.moment2) = moments(grid, sol.values);
  return sol;
}

}  // namespace nystrom
}  // namespace gaudin
