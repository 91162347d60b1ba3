#pragma once

#include <string>
#include <vector>

#include "coolsim/channels.hpp"
#include "coolsim/state.hpp"
#include "coolsim/unitaries.hpp"

namespace coolsim {

/// Stopping rule for nested preparation subroutines: run until the prepared
/// qubit is within delta_inner (relative) of its closed-form target, with a
/// hard cap of max_inner rounds per loop.
struct InnerPolicy {
  double delta_inner = 1e-8;
  int max_inner = 200;

  void validate() const;
};

enum class CompressionMode { SubsetThreeBitSort, FullSort };

/// Order of the two steps inside a NOE round. The paper's circuit drawing and
/// its fixed-point argument use opposite orders; both share the same
/// asymptote, so the alternative is kept available for comparison.
enum class NoeOrder { CmsThenGamma, GammaThenCms };

enum class ProtocolKind { Noe, GeneralizedNoe, SrGamma2, SrGamma3, SrGammaN, Ppa, NoeHbac };

const char* protocol_name(ProtocolKind kind);
ProtocolKind protocol_from_name(const std::string& name);  // throws on unknown

struct ProtocolSpec {
  ProtocolKind kind = ProtocolKind::SrGamma2;
  int n = 2;
  int rounds = 0;
  InnerPolicy inner{};
  CompressionMode compression = CompressionMode::SubsetThreeBitSort;
  NoeOrder noe_order = NoeOrder::CmsThenGamma;

  void validate() const;  // throws std::invalid_argument
};

/// One outer round of the protocol, applied in place.
void protocol_round(DiagonalState& state, const ProtocolSpec& spec, const BathModel& bath);

/// Thermal start for every protocol.
DiagonalState protocol_initial_state(const ProtocolSpec& spec, const BathModel& bath);

/// Post-run refresh: protocols whose rounds leave the non-target qubits
/// mid-cycle (NOE-based HBAC) restore them here; a no-op for the others.
void protocol_finalize(DiagonalState& state, const ProtocolSpec& spec, const BathModel& bath);

/// Runs `spec.rounds` outer rounds from thermal and records per-qubit
/// polarizations at every round boundary (round 0 = initial state).
CoolingTrace run_protocol(const ProtocolSpec& spec, const BathModel& bath);

CoolingTrace run_noe(const BathModel& bath, int rounds,
                     NoeOrder order = NoeOrder::CmsThenGamma);
CoolingTrace run_generalized_noe(int n, const BathModel& bath, int rounds);
CoolingTrace run_sr_gamma2(const BathModel& bath, int rounds);
CoolingTrace run_sr_gamma3(const BathModel& bath, int rounds, const InnerPolicy& inner = {});
CoolingTrace run_sr_gamma_n(int n, const BathModel& bath, int rounds,
                            const InnerPolicy& inner = {});
CoolingTrace run_ppa(int n, const BathModel& bath, int rounds);
CoolingTrace run_noe_based_hbac(int n, const BathModel& bath, int rounds,
                                CompressionMode mode = CompressionMode::SubsetThreeBitSort,
                                const InnerPolicy& inner = {});

struct FixedPointResult {
  double eps_inf = 0.0;
  int rounds_used = 0;
  bool converged = false;
};

/// Iterates outer rounds until the target polarization changes by less than
/// tol over `stable_window` consecutive rounds (some protocols progress in
/// multi-round cycles) or until max_rounds. Non-convergence is reported via
/// the `converged` flag, never silently truncated.
FixedPointResult fixed_point(const ProtocolSpec& spec, const BathModel& bath, double tol,
                             int max_rounds, int stable_window = 8);

}  // namespace coolsim
