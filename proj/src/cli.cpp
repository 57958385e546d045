#include "gaudin/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "gaudin/asymptotics.hpp"
#include "gaudin/errors.hpp"
#include "gaudin/verify.hpp"

namespace gaudin::cli {

namespace {

nlohmann::ordered_json point_json(const obs::ObservablePoint& p) {
  return {{"statistics", std::string(to_string(p.statistics))},
          {"kappa", p.kappa},
          {"r", p.r},
          {"gamma", p.gamma},
          {"Q", p.Q},
          {"energy", p.energy},
          {"err_estimate", p.err_estimate}};
}

nlohmann::ordered_json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

// Writes to the file, or to `out` when the path is empty.
bool emit(const std::string& text, const std::string& path, std::ostream& out,
          std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text) || !file.flush()) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

double kappa_for(ScaleKind kind, double scale, const SweepRequest& req) {
  switch (kind) {
    case ScaleKind::Kappa: return scale;
    case ScaleKind::R: return 2.0 / scale;
    case ScaleKind::Gamma: return obs::kappa_of_gamma(scale, req.statistics, req.solver);
  }
  return scale;
}

int numerical_failure(std::ostream& err, const std::exception& e) {
  err << "error: " << e.what() << "\n";
  return kNumericalFailure;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

void validate(const SweepRequest& req) {
  if (!(req.min > 0.0) || !(req.max > 0.0)) throw UsageError("sweep bounds must be positive");
  if (!(req.min < req.max)) throw UsageError("sweep requires min < max");
  if (req.points < 2) throw UsageError("sweep requires at least 2 points");
}

std::vector<double> sweep_scales(const SweepRequest& req) {
  validate(req);
  std::vector<double> scales(static_cast<std::size_t>(req.points));
  for (int i = 0; i < req.points; ++i) {
    const double t = static_cast<double>(i) / (req.points - 1);
    scales[i] = req.log_spaced ? req.min * std::pow(req.max / req.min, t)
                               : req.min + (req.max - req.min) * t;
  }
  scales.front() = req.min;
  scales.back() = req.max;
  return scales;
}

SweepRow make_row(const obs::ObservablePoint& p) {
  SweepRow row{p, {}, {}, {}};
  if (p.statistics == Statistics::Fermi) {
    if (p.kappa < 1.0) {
      row.q_asym1 = asym::q_series(p.kappa, 1);
      row.q_asym2 = asym::q_series(p.kappa, 2);
    }
    if (p.gamma < 1.0) row.energy_asym2 = asym::energy_series(p.gamma, 2);
  }
  return row;
}

std::vector<SweepRow> compute_sweep(const SweepRequest& req) {
  const auto scales = sweep_scales(req);
  std::vector<SweepRow> rows(scales.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < scales.size(); i = next++) {
      try {
        const double kappa = kappa_for(req.scale_kind, scales[i], req);
        rows[i] = make_row(obs::observe(req.statistics, kappa, req.solver));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads =
      std::clamp<unsigned>(std::thread::hardware_concurrency(), 1u,
                           static_cast<unsigned>(scales.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << kCsvHeader << "\n";
  const auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : ""; };
  for (const auto& row : rows) {
    const auto& p = row.point;
    os << format_double(p.kappa) << ',' << format_double(p.r) << ',' << format_double(p.gamma)
       << ',' << format_double(p.Q) << ',' << format_double(p.energy) << ','
       << format_double(p.moment0) << ',' << format_double(p.moment2) << ','
       << format_double(p.err_estimate) << ',' << opt(row.q_asym1) << ',' << opt(row.q_asym2)
       << ',' << opt(row.energy_asym2) << "\n";
  }
  return os.str();
}

std::string to_json(const std::vector<SweepRow>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    auto obj = point_json(row.point);
    obj["m0"] = row.point.moment0;
    obj["m2"] = row.point.moment2;
    obj["Q_asym1"] = optional_json(row.q_asym1);
    obj["Q_asym2"] = optional_json(row.q_asym2);
    obj["energy_asym2"] = optional_json(row.energy_asym2);
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::string to_json(const obs::ObservablePoint& p) { return point_json(p).dump(2) + "\n"; }

int run_solve(const SolveRequest& req, std::ostream& out, std::ostream& err) {
  const int given = static_cast<int>(req.kappa.has_value()) +
                    static_cast<int>(req.gamma.has_value()) + static_cast<int>(req.r.has_value());
  if (given != 1) {
    err << "error: solve needs exactly one of --kappa, --gamma, --r\n";
    return kUsage;
  }
  const double value = req.kappa ? *req.kappa : req.gamma ? *req.gamma : *req.r;
  if (!(value > 0.0) || !std::isfinite(value)) {
    err << "error: coupling must be positive\n";
    return kUsage;
  }
  try {
    double kappa = value;
    if (req.gamma) kappa = obs::kappa_of_gamma(value, req.statistics, req.solver);
    if (req.r) kappa = 2.0 / value;
    out << to_json(obs::observe(req.statistics, kappa, req.solver));
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    return numerical_failure(err, e);
  }
}

int run_sweep(const SweepRequest& req, std::ostream& out, std::ostream& err) {
  try {
    validate(req);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  try {
    const auto rows = compute_sweep(req);
    const std::string text = req.json ? to_json(rows) : to_csv(rows);
    return emit(text, req.output_path, out, err) ? kOk : kNumericalFailure;
  } catch (const std::exception& e) {
    return numerical_failure(err, e);
  }
}

int run_verify(const std::string& suite, const std::string& output_path, std::ostream& out,
               std::ostream& err) {
  const auto& names = verify::suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    err << "error: unknown suite '" << suite << "'\n";
    return kUsage;
  }
  const auto report = verify::run(suite);
  if (!emit(verify::to_json(report) + "\n", output_path, out, err)) return kNumericalFailure;
  return report.overall ? kOk : kNumericalFailure;
}

}  // namespace gaudin::cli
