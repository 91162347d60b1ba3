#include "coolsim/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coolsim {

namespace {

constexpr double kNegativeFloor = -1e-15;
constexpr double kSumTolerance = 1e-12;

std::size_t checked_dim(int n) {
  if (n < 1) throw std::invalid_argument("qubit count must be >= 1");
  if (n > 30) throw std::invalid_argument("qubit count too large for a dense population vector");
  return std::size_t{1} << n;
}

}  // namespace

BathModel::BathModel(double eps_b) : eps_b_(eps_b) {
  if (!(eps_b >= 0.0 && eps_b < 1.0))
    throw std::invalid_argument("bath polarization must lie in [0, 1)");
  xi_b_ = std::atanh(eps_b);
}

double BathModel::reset_probability(int m) const {
  if (m < 1) throw std::invalid_argument("reset_probability: m must be >= 1");
  return 0.5 * (1.0 + std::tanh(static_cast<double>(m) * xi_b_));
}

double p_m(const BathModel& bath, int m) { return bath.reset_probability(m); }

double pairwise_sum(const double* data, std::size_t count) {
  if (count <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < count; ++i) s += data[i];
    return s;
  }
  const std::size_t half = count / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, count - half);
}

double pairwise_sum(const std::vector<double>& data) {
  return pairwise_sum(data.data(), data.size());
}

DiagonalState::DiagonalState(int n, std::vector<double> populations) : n_(n) {
  const std::size_t dim = checked_dim(n);
  if (populations.size() != dim)
    throw std::invalid_argument("population vector length must be 2^n");
  for (double& p : populations) {
    if (p < kNegativeFloor)
      throw std::invalid_argument("population entry below -1e-15");
    if (p < 0.0) p = 0.0;
  }
  const double sum = pairwise_sum(populations);
  if (std::abs(sum - 1.0) > kSumTolerance)
    throw std::invalid_argument("populations must sum to 1 within 1e-12");
  if (sum != 1.0)
    for (double& p : populations) p /= sum;
  pops_ = std::move(populations);
}

DiagonalState::DiagonalState(TrustedTag, int n, std::vector<double>&& populations)
    : n_(n), pops_(std::move(populations)) {}

namespace detail {
DiagonalState trusted_state(int n, std::vector<double>&& populations) {
  return DiagonalState(DiagonalState::TrustedTag{}, n, std::move(populations));
}
}  // namespace detail

int DiagonalState::bit_of(int qubit) const {
  if (qubit < 1 || qubit > n_)
    throw std::invalid_argument("qubit index out of range");
  return n_ - qubit;
}

DiagonalState thermal_state(int n, const BathModel& bath) {
  const std::size_t dim = checked_dim(n);
  const double p0 = 0.5 * (1.0 + bath.eps());
  const double p1 = 0.5 * (1.0 - bath.eps());
  std::vector<double> pops(dim, 1.0);
  for (std::size_t i = 0; i < dim; ++i) {
    double v = 1.0;
    for (int b = 0; b < n; ++b) v *= ((i >> b) & 1u) ? p1 : p0;
    pops[i] = v;
  }
  return detail::trusted_state(n, std::move(pops));
}

double polarization(const DiagonalState& state, int qubit) {
  const int bit = state.bit_of(qubit);
  const auto& pops = state.populations();
  const std::size_t dim = pops.size();
  std::vector<double> zeros, ones;
  zeros.reserve(dim / 2);
  ones.reserve(dim / 2);
  for (std::size_t i = 0; i < dim; ++i)
    (((i >> bit) & 1u) ? ones : zeros).push_back(pops[i]);
  return pairwise_sum(zeros) - pairwise_sum(ones);
}

double purity_from_polarization(double eps) {
  if (!(eps >= -1.0 && eps <= 1.0))
    throw std::invalid_argument("polarization must lie in [-1, 1]");
  return 0.5 * (1.0 + eps * eps);
}

DiagonalState tensor(const DiagonalState& a, const DiagonalState& b) {
  const int n = a.num_qubits() + b.num_qubits();
  checked_dim(n);
  const auto& pa = a.populations();
  const auto& pb = b.populations();
  std::vector<double> pops(pa.size() * pb.size());
  for (std::size_t i = 0; i < pa.size(); ++i)
    for (std::size_t j = 0; j < pb.size(); ++j)
      pops[i * pb.size() + j] = pa[i] * pb[j];
  return detail::trusted_state(n, std::move(pops));
}

DiagonalState trace_out(const DiagonalState& state, int qubit) {
  if (state.num_qubits() < 2)
    throw std::invalid_argument("trace_out requires at least 2 qubits");
  const int bit = state.bit_of(qubit);
  const auto& pops = state.populations();
  const std::size_t mask_low = (std::size_t{1} << bit) - 1;
  std::vector<double> out(pops.size() / 2);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const std::size_t i = ((k & ~mask_low) << 1) | (k & mask_low);
    out[k] = pops[i] + pops[i | (std::size_t{1} << bit)];
  }
  return detail::trusted_state(state.num_qubits() - 1, std::move(out));
}

double product_state_deviation(const DiagonalState& state) {
  const int n = state.num_qubits();
  std::vector<double> marg0(static_cast<std::size_t>(n));
  for (int q = 1; q <= n; ++q)
    marg0[static_cast<std::size_t>(q - 1)] = 0.5 * (1.0 + polarization(state, q));
  const auto& pops = state.populations();
  double worst = 0.0;
  for (std::size_t i = 0; i < pops.size(); ++i) {
    double prod = 1.0;
    for (int q = 1; q <= n; ++q) {
      const double m0 = marg0[static_cast<std::size_t>(q - 1)];
      prod *= ((i >> (n - q)) & 1u) ? (1.0 - m0) : m0;
    }
    worst = std::max(worst, std::abs(pops[i] - prod));
  }
  return worst;
}

std::vector<double> shifted_scaled_diagonal(const DiagonalState& state,
                                            const BathModel& bath,
                                            double product_tol) {
  if (bath.eps() <= 0.0)
    throw std::invalid_argument("shifted_scaled_diagonal requires eps_b > 0");
  const double deviation = product_state_deviation(state);
  if (deviation > product_tol)
    throw std::invalid_argument("state is not a product of its marginals within tolerance");
  std::vector<double> coeffs(static_cast<std::size_t>(state.num_qubits()));
  for (int q = 1; q <= state.num_qubits(); ++q)
    coeffs[static_cast<std::size_t>(q - 1)] = polarization(state, q) / bath.eps();
  return coeffs;
}

}  // namespace coolsim
