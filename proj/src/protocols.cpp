#include "coolsim/protocols.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "coolsim/detail/kernels.hpp"

namespace coolsim {

namespace {

// Below this absolute polarization gap a preparation loop stops regardless of
// the relative criterion (the relative test degenerates at eps_b = 0).
constexpr double kGapFloor = 1e-15;

constexpr int kMaxProtocolQubits = 16;

struct Engine {
  Engine(const DiagonalState& state, const BathModel& bath, const ProtocolSpec& spec)
      : n(state.num_qubits()),
        eps(bath.eps()),
        xi(bath.xi()),
        inner(spec.inner),
        mode(spec.compression),
        order(spec.noe_order),
        pops(state.populations()) {}

  int n;
  double eps;
  double xi;
  InnerPolicy inner;
  CompressionMode mode;
  NoeOrder order;
  std::vector<double> pops;

  std::unordered_map<int, kernel::SubsetIndexer> indexers;
  std::vector<double> scratch0, scratch1;

  const kernel::SubsetIndexer& indexer(int lo, int hi) {
    const int key = lo * (kMaxProtocolQubits + 1) + hi;
    auto it = indexers.find(key);
    if (it == indexers.end()) {
      std::vector<int> subset;
      for (int q = lo; q <= hi; ++q) subset.push_back(q);
      it = indexers.emplace(key, kernel::SubsetIndexer(n, subset)).first;
    }
    return it->second;
  }

  double pol(int qubit) {
    const int bit = n - qubit;
    scratch0.clear();
    scratch1.clear();
    for (std::size_t i = 0; i < pops.size(); ++i)
      (((i >> bit) & 1u) ? scratch1 : scratch0).push_back(pops[i]);
    return pairwise_sum(scratch0) - pairwise_sum(scratch1);
  }

  double target(int m) const { return std::tanh((std::pow(2.0, m) - 1.0) * xi); }

  void gamma_window(int lo, int hi) {
    const int m = hi - lo + 1;
    const double p = 0.5 * (1.0 + std::tanh(static_cast<double>(m) * xi));
    kernel::pair_reset(pops, indexer(lo, hi), 0, (std::uint64_t{1} << m) - 1, p);
  }

  void flip_range(int lo, int hi) {
    std::uint64_t mask = 0;
    for (int q = lo; q <= hi; ++q) mask |= std::uint64_t{1} << (n - q);
    kernel::flip_mask(pops, mask);
  }

  void qreset(int qubit, double e) { kernel::qubit_reset(pops, n, qubit, e); }

  bool reached(double value, double goal) const {
    const double gap = std::abs(value - goal);
    return gap <= inner.delta_inner * std::abs(goal) || gap <= kGapFloor;
  }

  // Nested preparations apply hundreds of channels per outer round; each one
  // drifts the total by an ulp. Renormalizing at round boundaries keeps the
  // per-round sum invariant tight without touching intra-round dynamics.
  void renormalize() {
    const double sum = pairwise_sum(pops);
    if (sum == 1.0) return;
    const double inv = 1.0 / sum;
    for (double& p : pops) p *= inv;
  }
};

// ---------------------------------------------------------------- NOE

void noe_round(Engine& e, int a, int b) {
  if (e.order == NoeOrder::CmsThenGamma) {
    e.qreset(b, 0.0);
    e.gamma_window(a, b);
  } else {
    e.gamma_window(a, b);
    e.qreset(b, 0.0);
  }
}

// Iterates NOE rounds on the pair (a, b) until qubit a reaches tanh(2 xi_b).
void noe_prepare(Engine& e, int a, int b) {
  const double goal = std::tanh(2.0 * e.xi);
  for (int it = 0; it < e.inner.max_inner; ++it) {
    if (e.reached(e.pol(a), goal)) break;
    noe_round(e, a, b);
  }
}

void generalized_noe_round(Engine& e) {
  for (int q = 2; q <= e.n; ++q) e.qreset(q, 0.0);
  e.gamma_window(1, e.n);
}

// ---------------------------------------------------------------- SR Gamma n

void sr_prepare(Engine& e, int lo);

// One round on the window lo..n: prepare the window's tail, invert it, then
// state-reset across the whole window. The two-qubit base case is the
// X / Gamma2 / Gamma1 cycle.
void sr_round(Engine& e, int lo) {
  if (lo == e.n - 1) {
    e.flip_range(e.n, e.n);
    e.gamma_window(lo, e.n);
    e.qreset(e.n, e.eps);
    return;
  }
  sr_prepare(e, lo + 1);
  e.flip_range(lo + 1, e.n);
  e.gamma_window(lo, e.n);
}

// Preparation subroutine: converge qubit lo to tanh((2^m - 1) xi_b), then
// restore the lower qubits to their own fixed values so the whole window
// ends in the product state the parent's inversion step expects.
void sr_prepare(Engine& e, int lo) {
  if (lo == e.n) {
    e.qreset(e.n, e.eps);
    return;
  }
  const double goal = e.target(e.n - lo + 1);
  for (int it = 0; it < e.inner.max_inner; ++it) {
    if (e.reached(e.pol(lo), goal)) break;
    sr_round(e, lo);
  }
  sr_prepare(e, lo + 1);
}

// ---------------------------------------------------------------- PPA

void ppa_round(Engine& e) {
  kernel::sort_descending(e.pops);
  e.qreset(e.n, e.eps);
}

// ---------------------------------------------------------------- NOE-based HBAC

// 2-NOE-based HBAC on the pair (a, b): NOE to convergence, then a qubit
// reset returns the saturated qubit to equilibrium.
void two_noe(Engine& e, int a, int b) {
  noe_prepare(e, a, b);
  e.qreset(b, e.eps);
}

void compress_at(Engine& e, int i) {
  const int hi = e.mode == CompressionMode::SubsetThreeBitSort ? i + 2 : e.n;
  kernel::subset_sort(e.pops, e.indexer(i, hi));
}

// Converges qubits i..n bottom-up: refresh the tail, compress at i, repeat
// until qubit i stops moving.
void cool_suffix(Engine& e, int i) {
  if (i == e.n - 1) {
    two_noe(e, e.n - 1, e.n);
    return;
  }
  double prev = e.pol(i);
  for (int it = 0; it < e.inner.max_inner; ++it) {
    cool_suffix(e, i + 1);
    compress_at(e, i);
    const double cur = e.pol(i);
    const double diff = std::abs(cur - prev);
    if (diff <= e.inner.delta_inner * std::abs(cur) || diff <= kGapFloor) break;
    prev = cur;
  }
}

void noe_hbac_round(Engine& e) {
  if (e.n == 2) {
    two_noe(e, 1, 2);
    return;
  }
  cool_suffix(e, 2);
  compress_at(e, 1);
}

void noe_hbac_finalize(Engine& e) {
  if (e.n >= 3) cool_suffix(e, 2);
}

// ---------------------------------------------------------------- dispatch

void engine_round(Engine& e, const ProtocolSpec& spec) {
  switch (spec.kind) {
    case ProtocolKind::Noe:
      noe_round(e, 1, 2);
      break;
    case ProtocolKind::GeneralizedNoe:
      generalized_noe_round(e);
      break;
    case ProtocolKind::SrGamma2:
    case ProtocolKind::SrGamma3:
    case ProtocolKind::SrGammaN:
      sr_round(e, 1);
      break;
    case ProtocolKind::Ppa:
      ppa_round(e);
      break;
    case ProtocolKind::NoeHbac:
      noe_hbac_round(e);
      break;
  }
  e.renormalize();
}

void engine_finalize(Engine& e, const ProtocolSpec& spec) {
  if (spec.kind == ProtocolKind::NoeHbac) {
    noe_hbac_finalize(e);
    e.renormalize();
  }
}

std::vector<double> record_polarizations(Engine& e) {
  std::vector<double> pol(static_cast<std::size_t>(e.n));
  for (int q = 1; q <= e.n; ++q) pol[static_cast<std::size_t>(q - 1)] = e.pol(q);
  return pol;
}

}  // namespace

void InnerPolicy::validate() const {
  if (!(delta_inner > 0.0))
    throw std::invalid_argument("delta_inner must be positive");
  if (max_inner < 1) throw std::invalid_argument("max_inner must be >= 1");
}

const char* protocol_name(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::Noe: return "noe";
    case ProtocolKind::GeneralizedNoe: return "gnoe";
    case ProtocolKind::SrGamma2: return "srg2";
    case ProtocolKind::SrGamma3: return "srg3";
    case ProtocolKind::SrGammaN: return "srgn";
    case ProtocolKind::Ppa: return "ppa";
    case ProtocolKind::NoeHbac: return "noe_hbac";
  }
  throw std::invalid_argument("unknown protocol kind");
}

ProtocolKind protocol_from_name(const std::string& name) {
  if (name == "noe") return ProtocolKind::Noe;
  if (name == "gnoe") return ProtocolKind::GeneralizedNoe;
  if (name == "srg2") return ProtocolKind::SrGamma2;
  if (name == "srg3") return ProtocolKind::SrGamma3;
  if (name == "srgn") return ProtocolKind::SrGammaN;
  if (name == "ppa") return ProtocolKind::Ppa;
  if (name == "noe_hbac") return ProtocolKind::NoeHbac;
  throw std::invalid_argument("unknown protocol: " + name);
}

void ProtocolSpec::validate() const {
  inner.validate();
  if (rounds < 0) throw std::invalid_argument("rounds must be >= 0");
  if (n > kMaxProtocolQubits)
    throw std::invalid_argument("protocol runs are capped at n <= 16");
  switch (kind) {
    case ProtocolKind::Noe:
    case ProtocolKind::SrGamma2:
      if (n != 2) throw std::invalid_argument("protocol requires n = 2");
      break;
    case ProtocolKind::SrGamma3:
      if (n != 3) throw std::invalid_argument("protocol requires n = 3");
      break;
    case ProtocolKind::GeneralizedNoe:
    case ProtocolKind::SrGammaN:
    case ProtocolKind::Ppa:
    case ProtocolKind::NoeHbac:
      if (n < 2) throw std::invalid_argument("protocol requires n >= 2");
      break;
  }
}

DiagonalState protocol_initial_state(const ProtocolSpec& spec, const BathModel& bath) {
  spec.validate();
  return thermal_state(spec.n, bath);
}

void protocol_round(DiagonalState& state, const ProtocolSpec& spec, const BathModel& bath) {
  spec.validate();
  if (state.num_qubits() != spec.n)
    throw std::invalid_argument("state size does not match the protocol spec");
  Engine e(state, bath, spec);
  engine_round(e, spec);
  state = detail::trusted_state(e.n, std::move(e.pops));
}

void protocol_finalize(DiagonalState& state, const ProtocolSpec& spec, const BathModel& bath) {
  spec.validate();
  Engine e(state, bath, spec);
  engine_finalize(e, spec);
  state = detail::trusted_state(e.n, std::move(e.pops));
}

CoolingTrace run_protocol(const ProtocolSpec& spec, const BathModel& bath) {
  spec.validate();
  DiagonalState initial = protocol_initial_state(spec, bath);
  Engine e(initial, bath, spec);
  CoolingTrace trace{protocol_name(spec.kind), {}, initial};
  trace.rounds.push_back({0, record_polarizations(e)});
  for (int k = 1; k <= spec.rounds; ++k) {
    engine_round(e, spec);
    trace.rounds.push_back({k, record_polarizations(e)});
  }
  engine_finalize(e, spec);
  trace.terminal_state = detail::trusted_state(e.n, std::move(e.pops));
  return trace;
}

CoolingTrace run_noe(const BathModel& bath, int rounds, NoeOrder order) {
  ProtocolSpec spec;
  spec.kind = ProtocolKind::Noe;
  spec.n = 2;
  spec.rounds = rounds;
  spec.noe_order = order;
  return run_protocol(spec, bath);
}

CoolingTrace run_generalized_noe(int n, const BathModel& bath, int rounds) {
  ProtocolSpec spec;
  spec.kind = ProtocolKind::GeneralizedNoe;
  spec.n = n;
  spec.rounds = rounds;
  return run_protocol(spec, bath);
}

CoolingTrace run_sr_gamma2(const BathModel& bath, int rounds) {
  ProtocolSpec spec;
  spec.kind = ProtocolKind::SrGamma2;
  spec.n = 2;
  spec.rounds = rounds;
  return run_protocol(spec, bath);
}

CoolingTrace run_sr_gamma3(const BathModel& bath, int rounds, const InnerPolicy& inner) {
  ProtocolSpec spec;
  spec.kind = ProtocolKind::SrGamma3;
  spec.n = 3;
  spec.rounds = rounds;
  spec.inner = inner;
  return run_protocol(spec, bath);
}

CoolingTrace run_sr_gamma_n(int n, const BathModel& bath, int rounds,
                            const InnerPolicy& inner) {
  ProtocolSpec spec;
  spec.kind = ProtocolKind::SrGammaN;
  spec.n = n;
  spec.rounds = rounds;
  spec.inner = inner;
  return run_protocol(spec, bath);
}

CoolingTrace run_ppa(int n, const BathModel& bath, int rounds) {
  ProtocolSpec spec;
  spec.kind = ProtocolKind::Ppa;
  spec.n = n;
  spec.rounds = rounds;
  return run_protocol(spec, bath);
}

CoolingTrace run_noe_based_hbac(int n, const BathModel& bath, int rounds,
                                CompressionMode mode, const InnerPolicy& inner) {
  ProtocolSpec spec;
  spec.kind = ProtocolKind::NoeHbac;
  spec.n = n;
  spec.rounds = rounds;
  spec.compression = mode;
  spec.inner = inner;
  return run_protocol(spec, bath);
}

FixedPointResult fixed_point(const ProtocolSpec& spec, const BathModel& bath, double tol,
                             int max_rounds, int stable_window) {
  spec.validate();
  if (!(tol > 0.0)) throw std::invalid_argument("fixed_point tolerance must be positive");
  if (max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
  if (stable_window < 1) throw std::invalid_argument("stable_window must be >= 1");

  DiagonalState initial = protocol_initial_state(spec, bath);
  Engine e(initial, bath, spec);
  double prev = e.pol(1);
  int stable = 0;
  for (int k = 1; k <= max_rounds; ++k) {
    engine_round(e, spec);
    const double cur = e.pol(1);
    stable = std::abs(cur - prev) < tol ? stable + 1 : 0;
    prev = cur;
    if (stable >= stable_window) return {cur, k, true};
  }
  return {prev, max_rounds, false};
}

}  // namespace coolsim
