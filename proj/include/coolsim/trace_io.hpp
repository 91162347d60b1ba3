#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coolsim/state.hpp"

namespace coolsim {

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

/// Trace CSV: header `round,qubit,polarization`, one row per qubit per round.
void write_trace_csv(std::ostream& out, const CoolingTrace& trace);
std::vector<RoundRecord> read_trace_csv(std::istream& in);

/// JSON mirror: array of objects with the same field names.
void write_trace_json(std::ostream& out, const CoolingTrace& trace);
std::vector<RoundRecord> read_trace_json(std::istream& in);

struct SweepRow {
  std::string protocol;
  int n = 0;
  double eps_b = 0.0;
  double eps_max_sim = 0.0;
  double eps_max_theory = 0.0;
  double abs_err = 0.0;
  int rounds_used = 0;
  std::string flag;  // "ok" or "max_rounds"
};

/// Sweep CSV: header `protocol,n,eps_b,eps_max_sim,eps_max_theory,abs_err,rounds_used,flag`.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_sweep_json(std::ostream& out, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_sweep_csv(std::istream& in);

}  // namespace coolsim
