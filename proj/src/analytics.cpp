#include "coolsim/analytics.hpp"

#include <cmath>
#include <stdexcept>

namespace coolsim {

namespace {

double checked_xi(double eps_b) {
  if (!(eps_b >= 0.0 && eps_b < 1.0))
    throw std::invalid_argument("bath polarization must lie in [0, 1)");
  return std::atanh(eps_b);
}

}  // namespace

double predict_ppa_asymptote(int n, double eps_b) {
  if (n < 2) throw std::invalid_argument("PPA asymptote requires n >= 2");
  const double xi = checked_xi(eps_b);
  return std::tanh(std::ldexp(1.0, n - 2) * xi);
}

double predict_sr_asymptote(int n, double eps_b) {
  if (n < 1) throw std::invalid_argument("SR asymptote requires n >= 1");
  const double xi = checked_xi(eps_b);
  return std::tanh((std::ldexp(1.0, n) - 1.0) * xi);
}

double sr2_exact_step(double eps_k, double xi_b) {
  return 0.5 / std::cosh(2.0 * xi_b) *
         (std::sinh(3.0 * xi_b) / std::cosh(xi_b) + eps_k);
}

double sr3_exact_step(double eps_k, double xi_b) {
  const double c = 2.0 * std::cosh(xi_b) + std::cosh(5.0 * xi_b);
  return (eps_k * c + std::sinh(7.0 * xi_b)) / (c + std::cosh(7.0 * xi_b));
}

double predict_sr2_trajectory(int k, double eps_b, TrajectoryMode mode) {
  if (k < 0) throw std::invalid_argument("round index must be >= 0");
  if (mode == TrajectoryMode::LowPol) {
    checked_xi(eps_b);
    return k == 0 ? eps_b : (3.0 - std::ldexp(1.0, 1 - k)) * eps_b;
  }
  const double xi = checked_xi(eps_b);
  double eps = eps_b;
  for (int i = 0; i < k; ++i) eps = sr2_exact_step(eps, xi);
  return eps;
}

double predict_sr3_trajectory(int k, double eps_b, TrajectoryMode mode) {
  if (k < 0) throw std::invalid_argument("round index must be >= 0");
  if (mode == TrajectoryMode::LowPol) {
    checked_xi(eps_b);
    return (7.0 - 6.0 * std::pow(0.75, k)) * eps_b;
  }
  const double xi = checked_xi(eps_b);
  double eps = eps_b;
  for (int i = 0; i < k; ++i) eps = sr3_exact_step(eps, xi);
  return eps;
}

double predict_noe_asymptote(double eps_b) {
  const double xi = checked_xi(eps_b);
  return std::tanh(2.0 * xi);
}

double predict_generalized_noe(int n, double eps_b) {
  if (n < 2) throw std::invalid_argument("generalized NOE requires n >= 2");
  checked_xi(eps_b);
  return static_cast<double>(n) * eps_b;
}

}  // namespace coolsim
