#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "coolsim/analytics.hpp"

using namespace coolsim;

namespace {

// Independent oracle for the PPA limit: the raw ratio-of-powers form.
double ppa_limit_raw(int n, double eps_b) {
  const double m = std::ldexp(1.0, n - 2);
  const double up = std::pow(1.0 + eps_b, m);
  const double down = std::pow(1.0 - eps_b, m);
  return (up - down) / (up + down);
}

}  // namespace

TEST_CASE("PPA asymptote equals the ratio-of-powers form") {
  CHECK(predict_ppa_asymptote(2, 0.42) == doctest::Approx(0.42).epsilon(1e-15));
  CHECK(predict_ppa_asymptote(3, 0.1) ==
        doctest::Approx(0.19801980198019802).epsilon(1e-14));
  CHECK(predict_ppa_asymptote(4, 0.0) == 0.0);

  for (int n = 2; n <= 8; ++n)
    for (double eps = 0.02; eps < 0.9; eps += 0.07)
      CHECK(predict_ppa_asymptote(n, eps) ==
            doctest::Approx(ppa_limit_raw(n, eps)).epsilon(1e-12));

  CHECK_THROWS_AS(predict_ppa_asymptote(1, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(predict_ppa_asymptote(3, 1.0), std::invalid_argument);
}

TEST_CASE("SR asymptote frozen values") {
  CHECK(predict_sr_asymptote(1, 0.37) == doctest::Approx(0.37).epsilon(1e-15));
  CHECK(predict_sr_asymptote(2, 0.1) ==
        doctest::Approx(0.2922330097087379).epsilon(1e-14));
  CHECK(predict_sr_asymptote(3, 0.1) ==
        doctest::Approx(0.6058556728556160).epsilon(1e-14));
  CHECK(predict_sr_asymptote(4, 0.1) ==
        doctest::Approx(0.9060531194964737).epsilon(1e-14));
  // low polarization: value / eps_b -> 2^n - 1
  for (int n = 2; n <= 6; ++n)
    CHECK(predict_sr_asymptote(n, 1e-7) / 1e-7 ==
          doctest::Approx(std::ldexp(1.0, n) - 1.0).epsilon(1e-9));
}

TEST_CASE("SR2 trajectory") {
  CHECK(predict_sr2_trajectory(0, 0.3, TrajectoryMode::Exact) == 0.3);
  CHECK(predict_sr2_trajectory(0, 0.3, TrajectoryMode::LowPol) == doctest::Approx(0.3));
  // first exact round reaches tanh(2 xi_b)
  CHECK(predict_sr2_trajectory(1, 0.3, TrajectoryMode::Exact) ==
        doctest::Approx(std::tanh(2.0 * std::atanh(0.3))).epsilon(1e-14));
  // long-run limit
  CHECK(predict_sr2_trajectory(200, 0.3, TrajectoryMode::Exact) ==
        doctest::Approx(std::tanh(3.0 * std::atanh(0.3))).epsilon(1e-12));
  // low-pol form: (3 - 2^{1-k}) eps_b
  CHECK(predict_sr2_trajectory(3, 1e-4, TrajectoryMode::LowPol) ==
        doctest::Approx(2.75e-4).epsilon(1e-12));

  // exact and low-pol agree within 1% relative at eps_b = 1e-4 for k <= 20
  for (int k = 0; k <= 20; ++k) {
    const double exact = predict_sr2_trajectory(k, 1e-4, TrajectoryMode::Exact);
    const double low = predict_sr2_trajectory(k, 1e-4, TrajectoryMode::LowPol);
    CHECK(std::abs(exact - low) <= 0.01 * std::abs(exact));
  }

  // non-decreasing in k for both modes
  for (auto mode : {TrajectoryMode::Exact, TrajectoryMode::LowPol}) {
    double prev = 0.0;
    for (int k = 0; k <= 30; ++k) {
      const double v = predict_sr2_trajectory(k, 0.2, mode);
      CHECK(v >= prev - 1e-15);
      prev = v;
    }
  }
  CHECK_THROWS_AS(predict_sr2_trajectory(-1, 0.1, TrajectoryMode::Exact),
                  std::invalid_argument);
}

TEST_CASE("SR3 trajectory") {
  CHECK(predict_sr3_trajectory(0, 0.1, TrajectoryMode::LowPol) ==
        doctest::Approx(0.1).epsilon(1e-14));
  CHECK(predict_sr3_trajectory(500, 0.1, TrajectoryMode::Exact) ==
        doctest::Approx(std::tanh(7.0 * std::atanh(0.1))).epsilon(1e-12));
  CHECK(predict_sr3_trajectory(4000, 1e-5, TrajectoryMode::LowPol) ==
        doctest::Approx(7e-5).epsilon(1e-10));
  // frozen first exact steps at eps_b = 0.1
  CHECK(predict_sr3_trajectory(1, 0.1, TrajectoryMode::Exact) ==
        doctest::Approx(0.24465533980582524).epsilon(1e-13));
  CHECK(predict_sr3_trajectory(2, 0.1, TrajectoryMode::Exact) ==
        doctest::Approx(0.34794479511694138).epsilon(1e-13));
}

TEST_CASE("NOE and generalized NOE predictors") {
  CHECK(predict_noe_asymptote(0.1) == doctest::Approx(0.19801980198019802).epsilon(1e-14));
  CHECK(predict_noe_asymptote(0.0) == 0.0);
  CHECK(predict_noe_asymptote(0.1) ==
        doctest::Approx(2 * 0.1 / (1 + 0.01)).epsilon(1e-14));

  CHECK(predict_generalized_noe(2, 1e-4) == doctest::Approx(2e-4).epsilon(1e-15));
  CHECK(predict_generalized_noe(5, 1e-4) == doctest::Approx(5e-4).epsilon(1e-15));
  CHECK(predict_generalized_noe(3, 0.0) == 0.0);
  CHECK_THROWS_AS(predict_generalized_noe(1, 0.1), std::invalid_argument);
}

TEST_CASE("SR dominates PPA on a dense grid") {
  for (int n = 2; n <= 6; ++n)
    for (double eps = 0.01; eps < 0.99; eps += 0.01) {
      const double sr = predict_sr_asymptote(n, eps);
      const double ppa = predict_ppa_asymptote(n, eps);
      CHECK(sr >= ppa);
      if (ppa < 1.0)  // both saturate to 1.0 in doubles at large n eps_b
        CHECK(sr > ppa);
    }
}

TEST_CASE("all predictors are monotone increasing in eps_b") {
  // strictly increasing until tanh saturates to 1.0 in double precision
  for (int n = 2; n <= 5; ++n) {
    double prev_sr = 0.0, prev_ppa = 0.0, prev_noe = 0.0;
    for (double eps = 0.01; eps < 0.95; eps += 0.01) {
      const double sr = predict_sr_asymptote(n, eps);
      const double ppa = predict_ppa_asymptote(n, eps);
      const double noe = predict_noe_asymptote(eps);
      CHECK(sr >= prev_sr);
      CHECK(ppa >= prev_ppa);
      CHECK(noe > prev_noe);
      if (sr < 1.0) CHECK(sr > prev_sr);
      if (ppa < 1.0) CHECK(ppa > prev_ppa);
      prev_sr = sr;
      prev_ppa = ppa;
      prev_noe = noe;
    }
  }
}
