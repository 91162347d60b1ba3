#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <sstream>

#include "coolsim/cli.hpp"
#include "coolsim/trace_io.hpp"
#include "coolsim/validate.hpp"

using namespace coolsim;

TEST_CASE("cmd_run emits a deterministic trace reaching the SR2 limit") {
  RunConfig config;
  config.spec.kind = ProtocolKind::SrGamma2;
  config.spec.n = 2;
  config.spec.rounds = 50;
  config.eps_b = 0.1;

  std::ostringstream first, second;
  CHECK(cmd_run(config, first) == kExitOk);
  CHECK(cmd_run(config, second) == kExitOk);
  CHECK(first.str() == second.str());

  std::istringstream in(first.str());
  const auto records = read_trace_csv(in);
  REQUIRE(records.size() == 51);
  CHECK(std::abs(records.back().polarizations[0] - 0.2922330097087379) <= 1e-6);
}

TEST_CASE("cmd_run with zero rounds writes only the thermal row") {
  RunConfig config;
  config.spec.kind = ProtocolKind::Ppa;
  config.spec.n = 2;
  config.spec.rounds = 0;
  config.eps_b = 0.3;
  std::ostringstream out;
  CHECK(cmd_run(config, out) == kExitOk);
  std::istringstream in(out.str());
  const auto records = read_trace_csv(in);
  REQUIRE(records.size() == 1);
  CHECK(records[0].polarizations[0] == doctest::Approx(0.3).epsilon(1e-14));
}

TEST_CASE("cmd_run rejects invalid configs") {
  RunConfig config;
  config.spec.kind = ProtocolKind::SrGamma2;
  config.spec.n = 3;
  std::ostringstream out;
  CHECK_THROWS_AS(cmd_run(config, out), std::invalid_argument);
  config.spec.n = 2;
  config.eps_b = 1.0;
  CHECK_THROWS_AS(cmd_run(config, out), std::invalid_argument);
}

TEST_CASE("cmd_predict prints twelve significant digits") {
  PredictConfig config;
  config.formula = "sr";
  config.n = 3;
  config.eps_b = 0.1;
  std::ostringstream out;
  CHECK(cmd_predict(config, out) == kExitOk);
  CHECK(out.str() == "0.605855672856\n");

  PredictConfig ppa;
  ppa.formula = "ppa";
  ppa.n = 2;
  ppa.eps_b = 0.42;
  std::ostringstream out2;
  CHECK(cmd_predict(ppa, out2) == kExitOk);
  CHECK(out2.str() == "0.42\n");

  PredictConfig gnoe;
  gnoe.formula = "gnoe";
  gnoe.n = 4;
  gnoe.eps_b = 1e-4;
  std::ostringstream out3;
  CHECK(cmd_predict(gnoe, out3) == kExitOk);
  CHECK(out3.str() == "0.0004\n");

  PredictConfig bad;
  bad.formula = "nope";
  std::ostringstream out4;
  CHECK_THROWS_AS(cmd_predict(bad, out4), std::invalid_argument);

  PredictConfig traj;
  traj.formula = "sr2";
  std::ostringstream out5;
  CHECK_THROWS_AS(cmd_predict(traj, out5), std::invalid_argument);  // --k missing
  traj.k = 1;
  traj.eps_b = 0.3;
  std::ostringstream out6;
  CHECK(cmd_predict(traj, out6) == kExitOk);
  CHECK(std::stod(out6.str()) == doctest::Approx(std::tanh(2 * std::atanh(0.3))));
}

TEST_CASE("cmd_sweep orders rows and matches theory for srg2") {
  SweepConfig config;
  config.protocols = {ProtocolKind::SrGamma2, ProtocolKind::Noe, ProtocolKind::Ppa};
  config.qubit_counts = {2};
  config.grid_start = 0.05;
  config.grid_stop = 0.4;
  config.grid_count = 5;
  config.tol = 1e-12;
  config.max_rounds = 5000;
  std::ostringstream out;
  CHECK(cmd_sweep(config, out) == kExitOk);

  std::istringstream in(out.str());
  const auto rows = read_sweep_csv(in);
  REQUIRE(rows.size() == 15);
  // deterministic (protocol, n, eps_b) order mirrors the request order
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(rows[i].protocol == "srg2");
    CHECK(rows[i + 5].protocol == "noe");
    CHECK(rows[i + 10].protocol == "ppa");
    CHECK(rows[i].flag == "ok");
    CHECK(rows[i].abs_err <= 1e-6);
    // row-wise dominance: srg2 >= noe >= ppa
    CHECK(rows[i].eps_max_sim >= rows[i + 5].eps_max_sim);
    CHECK(rows[i + 5].eps_max_sim >= rows[i + 10].eps_max_sim);
  }

  // identical config, identical bytes
  std::ostringstream again;
  CHECK(cmd_sweep(config, again) == kExitOk);
  CHECK(out.str() == again.str());
}

TEST_CASE("cmd_sweep flags non-converged cells and keeps going") {
  SweepConfig config;
  config.protocols = {ProtocolKind::Ppa};
  config.qubit_counts = {4};
  config.grid_start = 0.1;
  config.grid_stop = 0.1;
  config.grid_count = 1;
  config.tol = 1e-13;
  config.max_rounds = 4;  // far too few
  std::ostringstream out;
  CHECK(cmd_sweep(config, out) == kExitOk);
  std::istringstream in(out.str());
  const auto rows = read_sweep_csv(in);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].flag == "max_rounds");
}

TEST_CASE("cmd_sweep rejects protocols without a predictor") {
  SweepConfig config;
  config.protocols = {ProtocolKind::NoeHbac};
  config.qubit_counts = {3};
  std::ostringstream out;
  CHECK_THROWS_AS(cmd_sweep(config, out), std::invalid_argument);
}

TEST_CASE("cmd_validate passes on the default seed and is deterministic") {
  ValidateConfig config;
  std::ostringstream out;
  CHECK(cmd_validate(config, out) == kExitOk);
  std::ostringstream out2;
  CHECK(cmd_validate(config, out2) == kExitOk);
  CHECK(out.str() == out2.str());
  CHECK(out.str().find("FAIL") == std::string::npos);
}

TEST_CASE("cmd_validate fails under the corrupted-Kraus hook") {
  ValidateConfig config;
  config.corrupt_kraus = true;
  std::ostringstream out;
  CHECK(cmd_validate(config, out) == kExitValidationFailure);
  CHECK(out.str().find("FAIL kraus_completeness") != std::string::npos);
}
