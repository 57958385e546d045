#include "gaudin/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <nlohmann/json.hpp>

#include "gaudin/constants.hpp"
#include "gaudin/errors.hpp"
#include "gaudin/nystrom.hpp"
#include "gaudin/observables.hpp"
#include "gaudin/specfun.hpp"
#include "gaudin/wiener_hopf.hpp"

namespace gaudin::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Check make_check(std::string name, double measured, Relation rel, double threshold) {
  Check c{std::move(name), measured, threshold, rel, false};
  switch (rel) {
    case Relation::LessEqual: c.passed = measured <= threshold; break;
    case Relation::GreaterEqual: c.passed = measured >= threshold; break;
    case Relation::Less: c.passed = measured < threshold; break;
  }
  return c;
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) {
    v[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
  }
  v.back() = hi;
  return v;
}

// Structural invariants collected over every solve of a run.
struct InvariantLog {
  int solves = 0;
  int violations = 0;
  double worst_symmetry = 0.0;
  double worst_gamma_q = 0.0;
  double worst_round_trip = 0.0;

  obs::ObservablePoint observe(Statistics s, double kappa) {
    const auto grid = nystrom::build_grid(2.0 / kappa, 10, 0.5);
    ++solves;
    nystrom::Solution sol;
    try {
      sol = nystrom::solve(s, grid.r, grid);
    } catch (const ConsistencyError&) {
      ++violations;
      throw;
    }
    const std::size_t n = sol.values.size();
    for (std::size_t i = 0; i < n; ++i) {
      worst_symmetry = std::max(worst_symmetry, std::abs(sol.values[i] - sol.values[n - 1 - i]));
    }
    const auto p = obs::from_solution(sol);
    if (s == Statistics::Fermi) {
      worst_gamma_q = std::max(worst_gamma_q, std::abs(p.gamma * p.Q - 0.5 * p.kappa));
    }
    return p;
  }
};

CriterionResult finish(int id, std::string name, std::vector<Check> checks,
                       std::vector<asym::ResidualFit> fits, Clock::time_point start,
                       double time_limit) {
  CriterionResult c;
  c.id = id;
  c.name = std::move(name);
  c.seconds = seconds_since(start);
  checks.push_back(make_check("runtime [s]", c.seconds, Relation::Less, time_limit));
  c.checks = std::move(checks);
  c.fits = std::move(fits);
  c.passed = std::all_of(c.checks.begin(), c.checks.end(), [](const Check& k) { return k.passed; });
  return c;
}

CriterionResult criterion_factorization() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double xi = -50.0 + 0.25 * i;
    const auto prod = wh::sigma_plus({xi, 0.0}) * wh::sigma_minus({xi, 0.0});
    worst = std::max(worst, std::abs(prod - wh::sigma(xi)));
  }
  const double at_zero = std::max(std::abs(wh::sigma_plus(0.0) - 1.0),
                                  std::abs(wh::sigma_minus(0.0) - 1.0));
  return finish(1, "Wiener-Hopf factorization",
                {make_check("max |s+ s- - s|", worst, Relation::LessEqual, 1e-10),
                 make_check("|s+-(0) - 1|", at_zero, Relation::LessEqual, 1e-12)},
                {}, start, 1.0);
}

CriterionResult criterion_ei_identity() {
  const auto start = Clock::now();
  boost::math::quadrature::exp_sinh<double> integrator;
  double worst = 0.0;
  for (const auto& [a, z] : {std::pair{1.0, 1.0}, std::pair{2.0, 0.5}, std::pair{2.5, 3.0}}) {
    const double lhs = integrator.integrate(
        [a = a, z = z](double x) { return std::exp(-x) * std::pow(x, a - 1.0) / (x + z); });
    const double rhs = std::exp(specfun::log_gamma(a).real() + z) *
                       specfun::exp_integral_E(a, z).real();
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
  }
  return finish(2, "Exponential-integral identity",
                {make_check("max relative deviation", worst, Relation::LessEqual, 1e-8)}, {},
                start, 1.0);
}

CriterionResult criterion_constant_c() {
  const auto start = Clock::now();
  const double diff = std::abs(asym::constant_C().value - asym::constant_C_closed());
  return finish(3, "Constant C = pi^2/4 + gE^2/2",
                {make_check("|C_quad - C_closed|", diff, Relation::LessEqual, 1e-8)}, {}, start,
                1.0);
}

CriterionResult criterion_i_of_x() {
  const auto start = Clock::now();
  std::vector<std::pair<double, double>> i_res;
  std::vector<std::pair<double, double>> e_res;
  for (const double x : log_spaced(1e-3, 1e-1, 6)) {
    i_res.emplace_back(x, asym::I_of_X(x, asym::IMode::Quadrature) -
                              asym::I_of_X(x, asym::IMode::Series));
    const auto e = asym::e1_block(x);
    e_res.emplace_back(x, e.quadrature - e.series);
  }
  auto fi = asym::fit_order(i_res);
  auto fe = asym::fit_order(e_res);
  return finish(4, "I(X) and E1 block expansions",
                {make_check("I(X) residual slope", fi.slope, Relation::GreaterEqual, 1.7),
                 make_check("E1 block residual slope", fe.slope, Relation::GreaterEqual, 2.5)},
                {fi, fe}, start, 5.0);
}

CriterionResult criterion_psi() {
  const auto start = Clock::now();
  std::vector<std::pair<double, double>> res;
  for (const double x : {1e-2, 1e-3, 1e-4, 1e-5}) {
    const double two_term =
        x / (2.0 * kPi) - x * x / (4.0 * kPi * kPi) *
                              (std::log(1.0 / x) + std::log(kPi / 2.0) - kEulerGamma + 1.0);
    res.emplace_back(x, wh::psi(x) - two_term);
  }
  auto fit = asym::fit_order(res);
  return finish(5, "psi two-term expansion",
                {make_check("residual slope", fit.slope, Relation::GreaterEqual, 2.5)}, {fit},
                start, 1.0);
}

CriterionResult criterion_self_convergence(InvariantLog& log) {
  const auto start = Clock::now();
  const double r = 100.0;
  const auto grid = nystrom::build_grid(r, 10, 0.5);
  const auto fine = nystrom::refine(grid);
  const double m0 = nystrom::moments(grid, nystrom::solve_values(Statistics::Fermi, grid)).first;
  const double m0_fine =
      nystrom::moments(fine, nystrom::solve_values(Statistics::Fermi, fine)).first;
  ++log.solves;
  nystrom::Solution sol = nystrom::solve(Statistics::Fermi, r, grid);
  return finish(6, "Solver self-convergence at r = 100",
                {make_check("|dm0|/m0 under doubling", std::abs(m0_fine - m0) / m0_fine,
                            Relation::LessEqual, 1e-8),
                 make_check("off-node residual", sol.residual, Relation::LessEqual, 1e-8)},
                {}, start, 30.0);
}

std::vector<CriterionResult> criteria_charge(InvariantLog& log) {
  const auto start = Clock::now();
  std::vector<std::pair<double, double>> first;
  std::vector<std::pair<double, double>> second;
  for (const double kappa : log_spaced(0.02, 0.2, 8)) {
    const double q = log.observe(Statistics::Fermi, kappa).Q;
    first.emplace_back(kappa, q - asym::q_series(kappa, 1));
    second.emplace_back(kappa, q - asym::q_series(kappa, 2));
  }
  auto f1 = asym::fit_order(first);
  auto f2 = asym::fit_order(second);
  // One timing budget covers both criteria.
  auto c7 = finish(7, "Q first order", {make_check("residual slope", f1.slope,
                                                   Relation::GreaterEqual, 1.7)},
                   {f1}, start, 120.0);
  auto c8 = finish(8, "Q second order",
                   {make_check("residual slope", f2.slope, Relation::GreaterEqual, 2.5),
                    make_check("|res(0.02)| - |res(0.2)|",
                               std::abs(second.front().second) - std::abs(second.back().second),
                               Relation::Less, 0.0)},
                   {f2}, start, 120.0);
  return {c7, c8};
}

CriterionResult criterion_energy(InvariantLog& log) {
  const auto start = Clock::now();
  std::vector<std::pair<double, double>> res;
  for (const double gamma : log_spaced(0.05, 0.5, 8)) {
    const double kappa = obs::kappa_of_gamma(gamma, Statistics::Fermi);
    const auto p = log.observe(Statistics::Fermi, kappa);
    log.worst_round_trip = std::max(log.worst_round_trip, std::abs(p.gamma - gamma) / gamma);
    res.emplace_back(gamma, p.energy - asym::energy_series(gamma, 2));
  }
  auto fit = asym::fit_order(res);
  return finish(9, "Energy second order",
                {make_check("residual slope", fit.slope, Relation::GreaterEqual, 2.5)}, {fit},
                start, 120.0);
}

CriterionResult criterion_moments(InvariantLog& log) {
  const auto start = Clock::now();
  std::vector<std::pair<double, double>> m0_res;
  std::vector<std::pair<double, double>> m2_res;
  for (const double r : {50.0, 100.0, 200.0, 400.0}) {
    const auto p = log.observe(Statistics::Fermi, 2.0 / r);
    const auto s = asym::large_r_series(r);
    m0_res.emplace_back(r, p.moment0 - s.m0);
    m2_res.emplace_back(r, std::abs(p.moment2 - s.m2) / r);
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < m2_res.size(); ++i) {
    decreasing = decreasing && m2_res[i].second < m2_res[i - 1].second;
  }
  auto f0 = asym::fit_order(m0_res);
  auto f2 = asym::fit_order(m2_res);
  return finish(10, "Large-r moment expansions",
                {make_check("m0 residual slope", f0.slope, Relation::LessEqual, -1.7),
                 make_check("m2 residual/r slope", f2.slope, Relation::LessEqual, 0.5),
                 make_check("m2 residual/r decreasing", decreasing ? 1.0 : 0.0,
                            Relation::GreaterEqual, 1.0)},
                {f0, f2}, start, 180.0);
}

CriterionResult criterion_limits(InvariantLog& log) {
  const auto start = Clock::now();
  const auto fermi = log.observe(Statistics::Fermi, 1e3);
  const auto bose = log.observe(Statistics::Bose, 1e3);
  return finish(11, "Strong-coupling limits",
                {make_check("|Q - 2/pi|", std::abs(fermi.Q - 2.0 / kPi), Relation::LessEqual, 1e-3),
                 make_check("|e_F - pi^2/48|", std::abs(fermi.energy - kPi * kPi / 48.0),
                            Relation::LessEqual, 1e-2),
                 make_check("|e_B - pi^2/3|", std::abs(bose.energy - kPi * kPi / 3.0),
                            Relation::LessEqual, 1e-2)},
                {}, start, 5.0);
}

CriterionResult criterion_invariants(InvariantLog& log) {
  const auto start = Clock::now();
  const double kappa = 0.1;
  const double back = obs::kappa_of_gamma(obs::gamma_of_kappa(kappa), Statistics::Fermi);
  log.worst_round_trip = std::max(log.worst_round_trip, std::abs(back - kappa) / kappa);
  return finish(12, "Structural invariants",
                {make_check("solves checked", log.solves, Relation::GreaterEqual, 1.0),
                 make_check("invariant violations", log.violations, Relation::LessEqual, 0.0),
                 make_check("max |f(x) - f(-x)|", log.worst_symmetry, Relation::LessEqual, 1e-10),
                 make_check("max |gamma Q - kappa/2|", log.worst_gamma_q, Relation::LessEqual, 1e-10),
                 make_check("max round-trip relative error", log.worst_round_trip,
                            Relation::LessEqual, 1e-9)},
                {}, start, 60.0);
}

using SuiteFn = std::function<std::vector<CriterionResult>(InvariantLog&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"wienerhopf", [](InvariantLog&) {
         return std::vector{criterion_factorization(), criterion_psi()};
       }},
      {"specfun", [](InvariantLog&) { return std::vector{criterion_ei_identity()}; }},
      {"constants", [](InvariantLog&) {
         return std::vector{criterion_constant_c(), criterion_i_of_x()};
       }},
      {"q2", [](InvariantLog& log) { return criteria_charge(log); }},
      {"energy", [](InvariantLog& log) { return std::vector{criterion_energy(log)}; }},
      {"section5", [](InvariantLog& log) {
         return std::vector{criterion_self_convergence(log), criterion_moments(log)};
       }},
      {"limits", [](InvariantLog& log) { return std::vector{criterion_limits(log)}; }},
  };
  return table;
}

SuiteResult run_suite(const std::string& name, const SuiteFn& fn, InvariantLog& log) {
  const auto start = Clock::now();
  SuiteResult suite;
  suite.name = name;
  try {
    suite.criteria = fn(log);
  } catch (const std::exception& e) {
    CriterionResult failed;
    failed.name = std::string("exception: ") + e.what();
    suite.criteria.push_back(failed);
  }
  suite.seconds = seconds_since(start);
  suite.passed = std::all_of(suite.criteria.begin(), suite.criteria.end(),
                             [](const CriterionResult& c) { return c.passed; });
  return suite;
}

const char* relation_text(Relation r) {
  switch (r) {
    case Relation::LessEqual: return "<=";
    case Relation::GreaterEqual: return ">=";
    case Relation::Less: return "<";
  }
  return "?";
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"all"};
    for (const auto& [name, fn] : suites()) v.push_back(name);
    return v;
  }();
  return names;
}

VerificationReport run(std::string_view selector) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), selector) == names.end()) {
    throw UsageError("unknown suite '" + std::string(selector) + "'");
  }
  VerificationReport report;
  InvariantLog log;
  for (const auto& [name, fn] : suites()) {
    if (selector == "all" || selector == name) report.suites.push_back(run_suite(name, fn, log));
  }
  if (selector == "all") {
    report.suites.push_back(run_suite(
        "invariants",
        [](InvariantLog& l) { return std::vector{criterion_invariants(l)}; }, log));
  }
  report.overall = std::all_of(report.suites.begin(), report.suites.end(),
                               [](const SuiteResult& s) { return s.passed; });
  return report;
}

std::string to_json(const VerificationReport& report) {
  using nlohmann::json;
  json suites_json = json::array();
  for (const auto& suite : report.suites) {
    json criteria = json::array();
    for (const auto& c : suite.criteria) {
      json checks = json::array();
      for (const auto& k : c.checks) {
        checks.push_back({{"name", k.name},
                          {"measured", k.measured},
                          {"relation", relation_text(k.relation)},
                          {"threshold", k.threshold},
                          {"passed", k.passed}});
      }
      json fits = json::array();
      for (const auto& f : c.fits) {
        json samples = json::array();
        for (const auto& [s, rho] : f.samples) samples.push_back({s, rho});
        fits.push_back({{"slope", f.slope},
                        {"intercept", f.intercept},
                        {"r_squared", f.r_squared},
                        {"samples", samples}});
      }
      criteria.push_back({{"id", c.id},
                          {"name", c.name},
                          {"passed", c.passed},
                          {"checks", checks},
                          {"slope_fits", fits},
                          {"seconds", c.seconds}});
    }
    suites_json.push_back({{"name", suite.name},
                           {"passed", suite.passed},
                           {"seconds", suite.seconds},
                           {"criteria", criteria}});
  }
  json out = {{"suites", suites_json}, {"overall", report.overall}};
  return out.dump(2);
}

}  // namespace gaudin::verify
