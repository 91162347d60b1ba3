#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coolsim/analytics.hpp"
#include "coolsim/protocols.hpp"

namespace coolsim {

enum class OutputFormat { Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitRuntime = 2;
inline constexpr int kExitValidationFailure = 3;

/// Diagnostics level, controlled by COOLSIM_LOG in {error, info, debug}.
/// Messages go to standard error only.
enum class LogLevel { Error = 0, Info = 1, Debug = 2 };
LogLevel log_level_from_env();
void log_message(LogLevel level, const std::string& text);

struct RunConfig {
  ProtocolSpec spec;
  double eps_b = 0.1;
  std::string out_path;  // empty writes to `out`
  OutputFormat format = OutputFormat::Csv;
};

struct SweepConfig {
  std::vector<ProtocolKind> protocols;
  std::vector<int> qubit_counts;
  double grid_start = 0.01;
  double grid_stop = 0.5;
  int grid_count = 10;
  double tol = 1e-10;
  int max_rounds = 200000;
  InnerPolicy inner{};
  std::string out_path;
  OutputFormat format = OutputFormat::Csv;
  int threads = 0;  // 0 = hardware concurrency
};

struct PredictConfig {
  std::string formula;  // ppa | sr | sr2 | sr3 | noe | gnoe
  int n = 2;
  double eps_b = 0.1;
  std::optional<int> k;
  TrajectoryMode mode = TrajectoryMode::Exact;
};

struct ValidateConfig {
  std::uint64_t seed = 12345;
  bool corrupt_kraus = false;  // test hook: breaks the Kraus set on purpose
};

/// Runs the protocol and writes the trace (CSV or JSON). Deterministic bytes
/// for a fixed config.
int cmd_run(const RunConfig& config, std::ostream& out);

/// Runs fixed-point cells over (protocol, n, eps_b grid) and writes one row
/// per cell, ordered by (protocol, n, eps_b) regardless of worker completion
/// order. Non-converged cells are flagged in-row, never fatal.
int cmd_sweep(const SweepConfig& config, std::ostream& out);

/// Prints the predictor value with 12 significant digits.
int cmd_predict(const PredictConfig& config, std::ostream& out);

/// Runs the oracle suite and prints one pass/fail line per check.
int cmd_validate(const ValidateConfig& config, std::ostream& out);

}  // namespace coolsim
