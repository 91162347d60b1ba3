#pragma once

#include <cstdint>
#include <vector>

#include "coolsim/state.hpp"

namespace coolsim {

/// A pair-of-states reset on an m-qubit subset of an n-qubit register.
/// The populations of basis labels s1 and s2 (bit strings over the subset,
/// first subset qubit = most significant label bit) are pooled and split in
/// the ratio p : 1-p within every configuration of the spectator qubits.
struct StateResetSpec {
  std::vector<int> qubit_subset;  // 1-based, distinct, ordered
  std::uint64_t s1 = 0;
  std::uint64_t s2 = 0;
  double p = 0.5;

  void validate(int n) const;  // throws std::invalid_argument
};

/// The four transition rates of a two-qubit relaxation diagram and the
/// derived Solomon coefficients. g1 / g1p flip one qubit, g2 connects
/// |00> and |11|, g2p connects |01> and |10>.
struct RateSet {
  double g1 = 0.0;
  double g1p = 0.0;
  double g2 = 0.0;
  double g2p = 0.0;

  double r1() const { return g2p + 2.0 * g1 + g2; }
  double r12() const { return g2 - g2p; }
  void validate() const;
};

/// Re-thermalizes one qubit with the bath: trace it out, tensor the
/// single-qubit Gibbs state back in at the same position.
DiagonalState qubit_reset(const DiagonalState& state, int qubit, const BathModel& bath);

/// Saturation: reset to the completely mixed state (1/2, 1/2).
DiagonalState cms(const DiagonalState& state, int qubit);

/// Applies the pair reset described by `spec`.
DiagonalState state_reset(const DiagonalState& state, const StateResetSpec& spec);

/// State-reset between |0...0> and |1...1> on `qubit_subset` with
/// p = p_m(bath, subset size).
DiagonalState gamma_n(const DiagonalState& state, const std::vector<int>& qubit_subset,
                      const BathModel& bath);

/// Dense column-stochastic transfer matrix (row-major, dim 2^n x 2^n) of the
/// same channel; agrees with the direct transform within 1e-14. n <= 10.
std::vector<double> transfer_matrix(const StateResetSpec& spec, int n);
std::vector<double> qubit_reset_transfer_matrix(int n, int qubit, const BathModel& bath);

/// Steady-state polarization of qubit 1 while qubit 2 is held saturated:
/// z1_eq + (R12/R1) z2_eq. Requires R1 > 0.
double solomon_steady_state(const RateSet& rates, double z1_eq, double z2_eq);

}  // namespace coolsim
