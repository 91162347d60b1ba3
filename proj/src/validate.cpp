#include "coolsim/validate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "coolsim/analytics.hpp"
#include "coolsim/channels.hpp"
#include "coolsim/oracles.hpp"
#include "coolsim/protocols.hpp"
#include "coolsim/state.hpp"

namespace coolsim {

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

namespace {

std::string err_string(double err) {
  std::ostringstream ss;
  ss.precision(3);
  ss << std::scientific << "max err " << err;
  return ss.str();
}

DiagonalState random_state(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<double> pops(std::size_t{1} << n);
  double sum = 0.0;
  for (double& p : pops) {
    p = uni(rng);
    sum += p;
  }
  for (double& p : pops) p /= sum;
  return DiagonalState(n, std::move(pops));
}

StateResetSpec random_spec(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> size_dist(1, n);
  const int m = size_dist(rng);
  std::vector<int> qubits(static_cast<std::size_t>(n));
  for (int q = 1; q <= n; ++q) qubits[static_cast<std::size_t>(q - 1)] = q;
  std::shuffle(qubits.begin(), qubits.end(), rng);
  qubits.resize(static_cast<std::size_t>(m));

  const std::uint64_t labels = std::uint64_t{1} << m;
  std::uniform_int_distribution<std::uint64_t> label_dist(0, labels - 1);
  const std::uint64_t s1 = label_dist(rng);
  std::uint64_t s2 = label_dist(rng);
  while (s2 == s1) s2 = label_dist(rng);

  std::uniform_real_distribution<double> p_dist(0.05, 0.95);
  StateResetSpec spec;
  spec.qubit_subset = std::move(qubits);
  spec.s1 = s1;
  spec.s2 = s2;
  spec.p = p_dist(rng);
  return spec;
}

CheckResult check_kraus_vs_diagonal(std::mt19937_64& rng, bool corrupt) {
  double worst = 0.0;
  try {
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 4);
      const DiagonalState state = random_state(rng, n);
      const StateResetSpec spec = random_spec(rng, n);
      const DenseMatrix rho = DenseMatrix::diagonal(state.populations());
      const DenseMatrix out = apply_kraus_dense(rho, spec, corrupt);
      const DiagonalState fast = state_reset(state, spec);
      const auto diag = out.real_diagonal();
      for (std::size_t i = 0; i < diag.size(); ++i)
        worst = std::max(worst, std::abs(diag[i] - fast.populations()[i]));
    }
  } catch (const std::exception& e) {
    return {"kraus_vs_diagonal", false, e.what()};
  }
  return {"kraus_vs_diagonal", worst <= 1e-12, err_string(worst)};
}

CheckResult check_kraus_completeness(std::mt19937_64& rng, bool corrupt) {
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const StateResetSpec spec = random_spec(rng, n);
    worst = std::max(worst, kraus_completeness_defect(kraus_set(spec, n, corrupt)));
  }
  return {"kraus_completeness", worst <= 1e-12, err_string(worst)};
}

CheckResult check_rate_matrix_limit(std::mt19937_64& rng) {
  double worst = 0.0;
  std::uniform_real_distribution<double> eps_dist(0.0, 0.8);
  for (int trial = 0; trial < 20; ++trial) {
    const BathModel bath(eps_dist(rng));
    const DiagonalState state = random_state(rng, 2);
    RateSet rates;
    rates.g2 = 1.0;
    const std::array<double, 4> start{state.populations()[0], state.populations()[1],
                                      state.populations()[2], state.populations()[3]};
    const auto evolved = rate_matrix_evolve(start, rates, bath, 50.0);
    const DiagonalState reset = gamma_n(state, {1, 2}, bath);
    for (int i = 0; i < 4; ++i)
      worst = std::max(worst, std::abs(evolved[static_cast<std::size_t>(i)] -
                                       reset.populations()[static_cast<std::size_t>(i)]));
  }
  return {"rate_matrix_gamma2_limit", worst <= 1e-6, err_string(worst)};
}

CheckResult check_coherence_preserved() {
  // A density matrix with support on |01><10|: that coherence must pass
  // through Gamma2 untouched.
  DenseMatrix rho(4, 4);
  rho.at(1, 1) = 0.5;
  rho.at(2, 2) = 0.5;
  rho.at(1, 2) = std::complex<double>(0.25, 0.1);
  rho.at(2, 1) = std::conj(rho.at(1, 2));
  StateResetSpec spec;
  spec.qubit_subset = {1, 2};
  spec.s1 = 0;
  spec.s2 = 3;
  spec.p = 0.7;
  const DenseMatrix out = apply_kraus_dense(rho, spec);
  const double err = std::abs(out.at(1, 2) - rho.at(1, 2));
  return {"coherence_on_untouched_subspace", err <= 1e-15, err_string(err)};
}

CheckResult check_product_after_sr_round(std::mt19937_64& rng) {
  // The two-qubit SR round ends in a qubit reset, so the register must be an
  // exact product of its marginals afterwards.
  double worst = 0.0;
  std::uniform_real_distribution<double> eps_dist(0.0, 0.9);
  for (int trial = 0; trial < 20; ++trial) {
    const BathModel bath(eps_dist(rng));
    ProtocolSpec spec;
    spec.kind = ProtocolKind::SrGamma2;
    spec.n = 2;
    DiagonalState state = protocol_initial_state(spec, bath);
    for (int k = 0; k < 5; ++k) {
      protocol_round(state, spec, bath);
      worst = std::max(worst, product_state_deviation(state));
    }
  }
  return {"product_state_after_sr_round", worst <= 1e-12, err_string(worst)};
}

CheckResult check_transfer_matrix_agreement(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const DiagonalState state = random_state(rng, n);
    const StateResetSpec spec = random_spec(rng, n);
    const auto t = transfer_matrix(spec, n);
    const DiagonalState fast = state_reset(state, spec);
    const std::size_t dim = state.dim();
    for (std::size_t i = 0; i < dim; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < dim; ++j)
        acc += t[i * dim + j] * state.populations()[j];
      worst = std::max(worst, std::abs(acc - fast.populations()[i]));
    }
  }
  return {"transfer_matrix_agreement", worst <= 1e-14, err_string(worst)};
}

}  // namespace

ValidationReport run_validation(std::uint64_t seed, bool corrupt_kraus) {
  ValidationReport report;
  std::mt19937_64 rng(seed);
  report.checks.push_back(check_kraus_completeness(rng, corrupt_kraus));
  report.checks.push_back(check_kraus_vs_diagonal(rng, corrupt_kraus));
  report.checks.push_back(check_rate_matrix_limit(rng));
  report.checks.push_back(check_coherence_preserved());
  report.checks.push_back(check_product_after_sr_round(rng));
  report.checks.push_back(check_transfer_matrix_agreement(rng));
  return report;
}

}  // namespace coolsim
