#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace coolsim {

/// Heat-bath description: polarization eps_b in [0,1) and xi_b = arctanh(eps_b).
/// All reset probabilities derive from it.
class BathModel {
 public:
  explicit BathModel(double eps_b);

  double eps() const { return eps_b_; }
  double xi() const { return xi_b_; }

  /// Probability p_m = e^{m xi_b} / (2 cosh(m xi_b)) that an m-qubit
  /// state-reset relaxes into the all-zeros state. m >= 1.
  double reset_probability(int m) const;

 private:
  double eps_b_;
  double xi_b_;
};

/// p_m convenience wrapper; identical to bath.reset_probability(m).
double p_m(const BathModel& bath, int m);

class DiagonalState;

namespace detail {
// Construction path for channel/unitary outputs: skips the renormalization
// applied to user-supplied vectors so permutations stay bit-exact.
DiagonalState trusted_state(int n, std::vector<double>&& populations);
}  // namespace detail

/// Diagonal density matrix of an n-qubit register, stored as the vector of
/// 2^n populations. Index i is read as the bit string of i with qubit 1 as
/// the most significant bit (|q1 q2 ... qn>).
///
/// Construction validates: length 2^n, entries >= -1e-15 (smaller negatives
/// are an error, larger ones are clamped to 0), sum within 1e-12 of 1. The
/// vector is then renormalized to sum exactly 1.
class DiagonalState {
 public:
  DiagonalState(int n, std::vector<double> populations);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return pops_.size(); }
  const std::vector<double>& populations() const { return pops_; }
  double population(std::size_t index) const { return pops_.at(index); }

  /// Bit position (from the LSB) of 1-based qubit index q; throws on a bad q.
  int bit_of(int qubit) const;

 private:
  struct TrustedTag {};
  DiagonalState(TrustedTag, int n, std::vector<double>&& populations);
  friend DiagonalState detail::trusted_state(int n, std::vector<double>&&);

  int n_;
  std::vector<double> pops_;
};

/// n-fold tensor power of the single-qubit Gibbs state ((1+eps_b)/2, (1-eps_b)/2).
DiagonalState thermal_state(int n, const BathModel& bath);

/// eps_q = sum over populations with qubit q in |0> minus those with q in |1>.
/// Uses grouped pairwise summation so small polarizations survive cancellation.
double polarization(const DiagonalState& state, int qubit);

/// Purity (1 + eps^2)/2 of a single qubit with polarization eps in [-1, 1].
double purity_from_polarization(double eps);

/// Outer product in big-endian order: a occupies the high bits.
DiagonalState tensor(const DiagonalState& a, const DiagonalState& b);

/// Partial trace over one qubit; requires n >= 2.
DiagonalState trace_out(const DiagonalState& state, int qubit);

/// Per-qubit polarizations divided by eps_b -- the units-of-eps_b notation
/// like {2, 1}. Requires eps_b > 0 and a state that is a product of its
/// single-qubit marginals within product_tol (per entry).
std::vector<double> shifted_scaled_diagonal(const DiagonalState& state,
                                            const BathModel& bath,
                                            double product_tol = 1e-9);

/// Largest |populations[i] - prod_q marginal_q(bit_q(i))| over all i;
/// zero iff the state is an exact product of its marginals.
double product_state_deviation(const DiagonalState& state);

/// Pairwise (recursive halving) sum; deterministic and cancellation-friendly.
double pairwise_sum(const double* data, std::size_t count);
double pairwise_sum(const std::vector<double>& data);

struct RoundRecord {
  int round = 0;
  std::vector<double> polarizations;  // one entry per qubit, qubit 1 first
};

/// Per-round record of a protocol run. Round 0 is the initial state.
struct CoolingTrace {
  std::string protocol;
  std::vector<RoundRecord> rounds;
  DiagonalState terminal_state;
};

}  // namespace coolsim
