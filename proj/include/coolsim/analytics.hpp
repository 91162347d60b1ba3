#pragma once

namespace coolsim {

enum class TrajectoryMode { LowPol, Exact };

/// PPA cooling limit with one reset qubit: tanh(2^{n-2} arctanh(eps_b)),
/// algebraically equal to the ratio-of-powers form but safe from overflow.
double predict_ppa_asymptote(int n, double eps_b);

/// SR-HBAC cooling limit: tanh((2^n - 1) arctanh(eps_b)); n = 1 gives eps_b.
double predict_sr_asymptote(int n, double eps_b);

/// Target-qubit polarization after k rounds of the two-qubit SR protocol.
/// LowPol evaluates (3 - 2^{1-k}) eps_b; Exact iterates the round recursion
/// from eps_0 = eps_b.
double predict_sr2_trajectory(int k, double eps_b, TrajectoryMode mode);

/// Same for the three-qubit protocol: LowPol is [7 - 6 (3/4)^k] eps_b.
double predict_sr3_trajectory(int k, double eps_b, TrajectoryMode mode);

/// NOE cooling limit: tanh(2 arctanh(eps_b)) = 2 eps_b / (1 + eps_b^2).
double predict_noe_asymptote(double eps_b);

/// Generalized NOE low-polarization limit n * eps_b. Valid only for small
/// eps_b; the exact limit of the circuit is tanh(n arctanh(eps_b)).
double predict_generalized_noe(int n, double eps_b);

/// One step of the exact two-qubit round recursion:
/// eps' = sech(2 xi_b) [sinh(3 xi_b) sech(xi_b) + eps] / 2.
double sr2_exact_step(double eps_k, double xi_b);

/// One step of the exact three-qubit outer-round recursion:
/// eps' = [eps (2 cosh xi_b + cosh 5 xi_b) + sinh 7 xi_b] /
///        (2 cosh xi_b + cosh 5 xi_b + cosh 7 xi_b).
double sr3_exact_step(double eps_k, double xi_b);

}  // namespace coolsim
