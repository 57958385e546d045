#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gaudin/nystrom.hpp"
#include "gaudin/observables.hpp"

namespace gaudin::cli {

/// Exit-code contract of the command-line tool.
enum ExitCode : int { kOk = 0, kNumericalFailure = 1, kUsage = 2 };

enum class ScaleKind { Kappa, Gamma, R };

struct SweepRequest {
  Statistics statistics = Statistics::Fermi;
  ScaleKind scale_kind = ScaleKind::Kappa;
  double min = 0.0;
  double max = 0.0;
  int points = 2;
  bool log_spaced = false;
  std::string output_path;  // empty: standard output
  bool json = false;
  obs::SolverConfig solver;
};

struct SweepRow {
  obs::ObservablePoint point;
  std::optional<double> q_asym1;
  std::optional<double> q_asym2;
  std::optional<double> energy_asym2;
};

inline constexpr const char* kCsvHeader =
    "kappa,r,gamma,Q,energy,m0,m2,err_est,Q_asym1,Q_asym2,energy_asym2";

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

/// UsageError unless min < max, points >= 2 and the bounds are positive.
void validate(const SweepRequest& req);

/// Scale values, ascending.
std::vector<double> sweep_scales(const SweepRequest& req);

/// One row per scale, in ascending scale order. Points are evaluated
/// concurrently when more than one hardware thread is available.
std::vector<SweepRow> compute_sweep(const SweepRequest& req);

SweepRow make_row(const obs::ObservablePoint& p);

std::string to_csv(const std::vector<SweepRow>& rows);
std::string to_json(const std::vector<SweepRow>& rows);
std::string to_json(const obs::ObservablePoint& p);

/// Exactly one of kappa / gamma / r must be set and positive.
struct SolveRequest {
  Statistics statistics = Statistics::Fermi;
  std::optional<double> kappa;
  std::optional<double> gamma;
  std::optional<double> r;
  obs::SolverConfig solver;
};

/// Command bodies; diagnostics go to `err`. Each returns an ExitCode.
int run_solve(const SolveRequest& req, std::ostream& out, std::ostream& err);
int run_sweep(const SweepRequest& req, std::ostream& out, std::ostream& err);
int run_verify(const std::string& suite, const std::string& output_path, std::ostream& out,
               std::ostream& err);

}  // namespace gaudin::cli
