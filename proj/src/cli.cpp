#include "coolsim/cli.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "coolsim/trace_io.hpp"
#include "coolsim/validate.hpp"

namespace coolsim {

LogLevel log_level_from_env() {
  const char* value = std::getenv("COOLSIM_LOG");
  if (value == nullptr) return LogLevel::Error;
  const std::string level(value);
  if (level == "debug") return LogLevel::Debug;
  if (level == "info") return LogLevel::Info;
  return LogLevel::Error;
}

void log_message(LogLevel level, const std::string& text) {
  if (static_cast<int>(level) <= static_cast<int>(log_level_from_env()))
    std::cerr << "coolsim: " << text << '\n';
}

namespace {

int write_output(const std::string& path, std::ostream& fallback,
                 const std::function<void(std::ostream&)>& writer) {
  if (path.empty()) {
    writer(fallback);
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "coolsim: cannot open output file: " << path << '\n';
    return kExitRuntime;
  }
  writer(file);
  if (!file.good()) {
    std::cerr << "coolsim: write failure: " << path << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

double theory_for(ProtocolKind kind, int n, double eps_b) {
  switch (kind) {
    case ProtocolKind::Noe:
      return predict_noe_asymptote(eps_b);
    case ProtocolKind::GeneralizedNoe:
      return predict_generalized_noe(n, eps_b);
    case ProtocolKind::SrGamma2:
    case ProtocolKind::SrGamma3:
    case ProtocolKind::SrGammaN:
      return predict_sr_asymptote(n, eps_b);
    case ProtocolKind::Ppa:
      return predict_ppa_asymptote(n, eps_b);
    case ProtocolKind::NoeHbac:
      break;
  }
  throw std::invalid_argument("no closed-form predictor for protocol");
}

}  // namespace

int cmd_run(const RunConfig& config, std::ostream& out) {
  const BathModel bath(config.eps_b);
  config.spec.validate();
  log_message(LogLevel::Info, std::string("run ") + protocol_name(config.spec.kind) +
                                  " n=" + std::to_string(config.spec.n) +
                                  " rounds=" + std::to_string(config.spec.rounds));
  const CoolingTrace trace = run_protocol(config.spec, bath);
  return write_output(config.out_path, out, [&](std::ostream& sink) {
    if (config.format == OutputFormat::Csv)
      write_trace_csv(sink, trace);
    else
      write_trace_json(sink, trace);
  });
}

int cmd_sweep(const SweepConfig& config, std::ostream& out) {
  if (config.protocols.empty() || config.qubit_counts.empty())
    throw std::invalid_argument("sweep requires nonempty protocol and n lists");
  if (config.grid_count < 1) throw std::invalid_argument("grid count must be >= 1");

  struct Cell {
    ProtocolKind kind;
    int n;
    double eps_b;
  };
  std::vector<Cell> cells;
  for (ProtocolKind kind : config.protocols)
    for (int n : config.qubit_counts) {
      // Validate the (protocol, n) pair up front so a bad combination is a
      // config error, not a silently empty sweep.
      ProtocolSpec spec;
      spec.kind = kind;
      spec.n = n;
      spec.inner = config.inner;
      spec.validate();
      theory_for(kind, n, config.grid_start);
      for (int j = 0; j < config.grid_count; ++j) {
        const double eps_b =
            config.grid_count == 1
                ? config.grid_start
                : config.grid_start + (config.grid_stop - config.grid_start) * j /
                                          (config.grid_count - 1);
        cells.push_back({kind, n, eps_b});
      }
    }

  std::vector<SweepRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      const Cell& cell = cells[i];
      ProtocolSpec spec;
      spec.kind = cell.kind;
      spec.n = cell.n;
      spec.inner = config.inner;
      const BathModel bath(cell.eps_b);
      const FixedPointResult fp = fixed_point(spec, bath, config.tol, config.max_rounds);
      SweepRow row;
      row.protocol = protocol_name(cell.kind);
      row.n = cell.n;
      row.eps_b = cell.eps_b;
      row.eps_max_sim = fp.eps_inf;
      row.eps_max_theory = theory_for(cell.kind, cell.n, cell.eps_b);
      row.abs_err = std::abs(row.eps_max_sim - row.eps_max_theory);
      row.rounds_used = fp.rounds_used;
      row.flag = fp.converged ? "ok" : "max_rounds";
      rows[i] = std::move(row);
      log_message(LogLevel::Debug, "cell " + row.protocol + " n=" + std::to_string(row.n) +
                                       " eps_b=" + format_double(row.eps_b) + " -> " +
                                       format_double(row.eps_max_sim));
    }
  };

  unsigned thread_count = config.threads > 0
                              ? static_cast<unsigned>(config.threads)
                              : std::max(1u, std::thread::hardware_concurrency());
  thread_count = std::min<unsigned>(thread_count, static_cast<unsigned>(cells.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < thread_count; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  log_message(LogLevel::Info, "sweep finished: " + std::to_string(rows.size()) + " cells");
  return write_output(config.out_path, out, [&](std::ostream& sink) {
    if (config.format == OutputFormat::Csv)
      write_sweep_csv(sink, rows);
    else
      write_sweep_json(sink, rows);
  });
}

int cmd_predict(const PredictConfig& config, std::ostream& out) {
  double value = 0.0;
  if (config.formula == "ppa") {
    value = predict_ppa_asymptote(config.n, config.eps_b);
  } else if (config.formula == "sr") {
    value = predict_sr_asymptote(config.n, config.eps_b);
  } else if (config.formula == "noe") {
    value = predict_noe_asymptote(config.eps_b);
  } else if (config.formula == "gnoe") {
    value = predict_generalized_noe(config.n, config.eps_b);
  } else if (config.formula == "sr2") {
    if (!config.k) throw std::invalid_argument("formula sr2 requires --k");
    value = predict_sr2_trajectory(*config.k, config.eps_b, config.mode);
  } else if (config.formula == "sr3") {
    if (!config.k) throw std::invalid_argument("formula sr3 requires --k");
    value = predict_sr3_trajectory(*config.k, config.eps_b, config.mode);
  } else {
    throw std::invalid_argument("unknown formula: " + config.formula);
  }
  std::ostringstream ss;
  ss << std::setprecision(12) << value;
  out << ss.str() << '\n';
  return kExitOk;
}

int cmd_validate(const ValidateConfig& config, std::ostream& out) {
  const ValidationReport report = run_validation(config.seed, config.corrupt_kraus);
  for (const auto& check : report.checks)
    out << (check.passed ? "PASS " : "FAIL ") << check.name << " (" << check.detail
        << ")\n";
  const bool ok = report.all_passed();
  out << (ok ? "all checks passed" : "validation failed") << '\n';
  return ok ? kExitOk : kExitValidationFailure;
}

}  // namespace coolsim
