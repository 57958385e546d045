#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gaudin::quad {

/// Gauss-Legendre rule on [-1, 1]. Nodes ascending, exactly antisymmetric.
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Rules are cached per node count; the returned reference stays valid for
/// the lifetime of the program.
const Rule& gauss_legendre(std::size_t n);

/// Sum of n-point Gauss-Legendre rules over consecutive panels given by
/// ascending breakpoints.
template <typename T, typename F>
T integrate_panels(F&& f, std::span<const double> breaks, std::size_t n) {
  const Rule& rule = gauss_legendre(n);
  T sum{};
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double a = breaks[p];
    const double b = breaks[p + 1];
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    T panel{};
    for (std::size_t k = 0; k < n; ++k) {
      panel += rule.weights[k] * f(mid + half * rule.nodes[k]);
    }
    sum += half * panel;
  }
  return sum;
}

/// Breakpoints 0, b q^K, ..., b q, b: geometric refinement toward the left
/// endpoint, used for integrands with logarithmic behaviour at 0.
std::vector<double> graded_breaks(double b, double ratio, double smallest);

/// Uniform breakpoints on [a, b] with `count` panels.
std::vector<double> uniform_breaks(double a, double b, std::size_t count);

}  // namespace gaudin::quad
