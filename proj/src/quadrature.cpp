#include "gaudin/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "gaudin/errors.hpp"

namespace gaudin::quad {

namespace {

Rule make_rule(std::size_t n) {
  Rule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    // Tricomi initial guess for the i-th largest root, then Newton.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute derivative at the converged root.
    double p0 = 1.0;
    double p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double kk = static_cast<double>(k);
      const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
      p0 = p1;
      p1 = p2;
    }
    dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[n - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

const Rule& gauss_legendre(std::size_t n) {
  if (n < 2) throw UsageError("gauss_legendre: need at least 2 nodes");
  static std::mutex mutex;
  static std::map<std::size_t, Rule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
  return it->second;
}

std::vector<double> graded_breaks(double b, double ratio, double smallest) {
  std::vector<double> breaks{b};
  double x = b;
  while (x > smallest) {
    x *= ratio;
    breaks.push_back(x);
  }
  breaks.push_back(0.0);
  return {breaks.rbegin(), breaks.rend()};
}

std::vector<double> uniform_breaks(double a, double b, std::size_t count) {
  std::vector<double> breaks(count + 1);
  for (std::size_t i = 0; i <= count; ++i) {
    breaks[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(count);
  }
  breaks.back() = b;
  return breaks;
}

}  // namespace gaudin::quad
