#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "coolsim/channels.hpp"
#include "coolsim/state.hpp"

namespace coolsim {

/// Minimal dense complex matrix for the validation oracles (n <= 10).
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols);
  static DenseMatrix identity(std::size_t dim);
  static DenseMatrix diagonal(const std::vector<double>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::complex<double>& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const std::complex<double>& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  DenseMatrix adjoint() const;
  DenseMatrix operator*(const DenseMatrix& other) const;
  DenseMatrix& operator+=(const DenseMatrix& other);
  double max_abs_diff(const DenseMatrix& other) const;
  std::vector<double> real_diagonal() const;

 private:
  std::size_t rows_, cols_;
  std::vector<std::complex<double>> data_;
};

/// Explicit Kraus operators of the pair reset, embedded by identity on the
/// spectator qubits: sqrt(p)|s1><s1|, sqrt(p)|s1><s2|, sqrt(1-p)|s2><s2|,
/// sqrt(1-p)|s2><s1|, plus the projector onto the untouched subspace. With
/// `corrupt` set the last operator is dropped (test hook: breaks completeness).
std::vector<DenseMatrix> kraus_set(const StateResetSpec& spec, int n, bool corrupt = false);

/// Largest entry of |sum_i A_i^dag A_i - I|.
double kraus_completeness_defect(const std::vector<DenseMatrix>& kraus);

/// Validation oracle: returns sum_i A_i rho A_i^dag. Checks that rho is
/// Hermitian with unit trace and a nonnegative diagonal, and asserts Kraus
/// completeness within 1e-12.
DenseMatrix apply_kraus_dense(const DenseMatrix& rho, const StateResetSpec& spec,
                              bool corrupt = false);

/// Validation oracle: integrates the classical master equation on
/// {N00, N01, N10, N11} for time t. Each transition pair of the relaxation
/// diagram satisfies detailed balance against the bath: single-quantum edges
/// (g1: qubit-2 flips, g1p: qubit-1 flips) equilibrate to e^{2 xi_b}, the g2
/// edge (00 <-> 11) to e^{4 xi_b}, and the g2p edge (01 <-> 10) to 1.
std::array<double, 4> rate_matrix_evolve(const std::array<double, 4>& pops,
                                         const RateSet& rates, const BathModel& bath,
                                         double t);

}  // namespace coolsim
