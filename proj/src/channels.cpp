#include "coolsim/channels.hpp"

#include <stdexcept>

#include "coolsim/detail/kernels.hpp"

namespace coolsim {

void StateResetSpec::validate(int n) const {
  if (n < 1) throw std::invalid_argument("state_reset: register must have n >= 1");
  if (qubit_subset.empty()) throw std::invalid_argument("state_reset: empty qubit subset");
  for (std::size_t i = 0; i < qubit_subset.size(); ++i) {
    if (qubit_subset[i] < 1 || qubit_subset[i] > n)
      throw std::invalid_argument("state_reset: subset index out of range");
    for (std::size_t j = i + 1; j < qubit_subset.size(); ++j)
      if (qubit_subset[i] == qubit_subset[j])
        throw std::invalid_argument("state_reset: duplicate subset index");
  }
  const std::uint64_t labels = std::uint64_t{1} << qubit_subset.size();
  if (s1 >= labels || s2 >= labels)
    throw std::invalid_argument("state_reset: basis label wider than the subset");
  if (s1 == s2) throw std::invalid_argument("state_reset: s1 and s2 must differ");
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("state_reset: p must lie in (0, 1)");
}

void RateSet::validate() const {
  if (g1 < 0.0 || g1p < 0.0 || g2 < 0.0 || g2p < 0.0)
    throw std::invalid_argument("rates must be nonnegative");
}

DiagonalState qubit_reset(const DiagonalState& state, int qubit, const BathModel& bath) {
  state.bit_of(qubit);  // range check
  std::vector<double> pops = state.populations();
  kernel::qubit_reset(pops, state.num_qubits(), qubit, bath.eps());
  return detail::trusted_state(state.num_qubits(), std::move(pops));
}

DiagonalState cms(const DiagonalState& state, int qubit) {
  state.bit_of(qubit);
  std::vector<double> pops = state.populations();
  kernel::qubit_reset(pops, state.num_qubits(), qubit, 0.0);
  return detail::trusted_state(state.num_qubits(), std::move(pops));
}

DiagonalState state_reset(const DiagonalState& state, const StateResetSpec& spec) {
  spec.validate(state.num_qubits());
  kernel::SubsetIndexer ix(state.num_qubits(), spec.qubit_subset);
  std::vector<double> pops = state.populations();
  kernel::pair_reset(pops, ix, spec.s1, spec.s2, spec.p);
  return detail::trusted_state(state.num_qubits(), std::move(pops));
}

DiagonalState gamma_n(const DiagonalState& state, const std::vector<int>& qubit_subset,
                      const BathModel& bath) {
  StateResetSpec spec;
  spec.qubit_subset = qubit_subset;
  spec.s1 = 0;
  spec.s2 = (std::uint64_t{1} << qubit_subset.size()) - 1;
  spec.p = bath.reset_probability(static_cast<int>(qubit_subset.size()));
  return state_reset(state, spec);
}

namespace {

constexpr int kMaxDenseQubits = 10;

std::size_t dense_dim(int n) {
  if (n < 1 || n > kMaxDenseQubits)
    throw std::invalid_argument("dense transfer matrices are capped at n <= 10");
  return std::size_t{1} << n;
}

}  // namespace

std::vector<double> transfer_matrix(const StateResetSpec& spec, int n) {
  spec.validate(n);
  const std::size_t dim = dense_dim(n);
  std::vector<double> t(dim * dim, 0.0);
  for (std::size_t j = 0; j < dim; ++j) t[j * dim + j] = 1.0;
  kernel::SubsetIndexer ix(n, spec.qubit_subset);
  for (std::uint64_t c = 0; c < ix.spectator_configs(); ++c) {
    const std::uint64_t base = ix.spectator_base(c);
    const std::uint64_t i1 = ix.with_label(base, spec.s1);
    const std::uint64_t i2 = ix.with_label(base, spec.s2);
    t[i1 * dim + i1] = spec.p;
    t[i1 * dim + i2] = spec.p;
    t[i2 * dim + i1] = 1.0 - spec.p;
    t[i2 * dim + i2] = 1.0 - spec.p;
  }
  return t;
}

std::vector<double> qubit_reset_transfer_matrix(int n, int qubit, const BathModel& bath) {
  const std::size_t dim = dense_dim(n);
  if (qubit < 1 || qubit > n) throw std::invalid_argument("qubit index out of range");
  const int bit = n - qubit;
  const double p0 = 0.5 * (1.0 + bath.eps());
  const double p1 = 0.5 * (1.0 - bath.eps());
  std::vector<double> t(dim * dim, 0.0);
  for (std::size_t j = 0; j < dim; ++j) {
    const std::size_t j0 = j & ~(std::size_t{1} << bit);
    t[j0 * dim + j] = p0;
    t[(j0 | (std::size_t{1} << bit)) * dim + j] = p1;
  }
  return t;
}

double solomon_steady_state(const RateSet& rates, double z1_eq, double z2_eq) {
  rates.validate();
  const double r1 = rates.r1();
  if (r1 <= 0.0) throw std::invalid_argument("solomon_steady_state requires R1 > 0");
  return z1_eq + (rates.r12() / r1) * z2_eq;
}

}  // namespace coolsim
