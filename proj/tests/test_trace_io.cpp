#include <doctest.h>

#include <sstream>

#include "coolsim/protocols.hpp"
#include "coolsim/trace_io.hpp"

using namespace coolsim;

TEST_CASE("format_double round-trips exactly") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 2.5e17, 0.0, -0.1980198019801980198}) {
    const std::string text = format_double(v);
    CHECK(std::stod(text) == v);
  }
}

TEST_CASE("trace CSV round-trips bit-exactly") {
  const auto trace = run_sr_gamma2(BathModel(0.1), 7);
  std::ostringstream out;
  write_trace_csv(out, trace);
  std::istringstream in(out.str());
  const auto records = read_trace_csv(in);
  REQUIRE(records.size() == trace.rounds.size());
  for (std::size_t k = 0; k < records.size(); ++k) {
    CHECK(records[k].round == trace.rounds[k].round);
    CHECK(records[k].polarizations == trace.rounds[k].polarizations);
  }
}

TEST_CASE("trace JSON round-trips bit-exactly") {
  const auto trace = run_noe(BathModel(0.2), 5);
  std::ostringstream out;
  write_trace_json(out, trace);
  std::istringstream in(out.str());
  const auto records = read_trace_json(in);
  REQUIRE(records.size() == trace.rounds.size());
  for (std::size_t k = 0; k < records.size(); ++k)
    CHECK(records[k].polarizations == trace.rounds[k].polarizations);
}

TEST_CASE("trace CSV header and shape") {
  const auto trace = run_ppa(3, BathModel(0.1), 2);
  std::ostringstream out;
  write_trace_csv(out, trace);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "round,qubit,polarization");
  int lines = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++lines;
  CHECK(lines == 3 * 3);  // (rounds+1) records x 3 qubits
}

TEST_CASE("sweep CSV round-trips") {
  std::vector<SweepRow> rows;
  rows.push_back({"srg2", 2, 0.1, 0.2922330097087379, 0.2922330097087379, 0.0, 42, "ok"});
  rows.push_back({"ppa", 3, 0.25, 0.47, 0.4705882352941177, 5.9e-4, 100, "max_rounds"});
  std::ostringstream out;
  write_sweep_csv(out, rows);
  std::istringstream in(out.str());
  const auto back = read_sweep_csv(in);
  REQUIRE(back.size() == 2);
  CHECK(back[0].protocol == "srg2");
  CHECK(back[0].eps_max_sim == rows[0].eps_max_sim);
  CHECK(back[1].flag == "max_rounds");
  CHECK(back[1].rounds_used == 100);
  CHECK(back[1].eps_max_theory == rows[1].eps_max_theory);
}

TEST_CASE("malformed input is rejected") {
  std::istringstream bad_header("wrong\n1,1,0.5\n");
  CHECK_THROWS(read_trace_csv(bad_header));
  std::istringstream bad_row("round,qubit,polarization\n1,1\n");
  CHECK_THROWS(read_trace_csv(bad_row));
}
