#include "coolsim/unitaries.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "coolsim/detail/kernels.hpp"

namespace coolsim {

namespace {

std::uint64_t flip_mask_for(const DiagonalState& state, const std::vector<int>& qubits) {
  std::uint64_t mask = 0;
  for (int q : qubits) mask |= std::uint64_t{1} << state.bit_of(q);
  return mask;
}

void check_subset(const DiagonalState& state, const std::vector<int>& qubits) {
  if (qubits.empty()) throw std::invalid_argument("qubit subset must be nonempty");
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    state.bit_of(qubits[i]);  // range check
    for (std::size_t j = i + 1; j < qubits.size(); ++j)
      if (qubits[i] == qubits[j])
        throw std::invalid_argument("qubit subset contains duplicates");
  }
}

}  // namespace

PermutationSpec::PermutationSpec(std::vector<std::uint64_t> mapping)
    : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (std::uint64_t j : mapping_) {
    if (j >= mapping_.size() || seen[j])
      throw std::invalid_argument("permutation mapping is not a bijection");
    seen[j] = true;
  }
}

DiagonalState PermutationSpec::apply(const DiagonalState& state) const {
  const auto& pops = state.populations();
  if (pops.size() != mapping_.size())
    throw std::invalid_argument("permutation dimension mismatch");
  std::vector<double> out(pops.size());
  for (std::size_t i = 0; i < pops.size(); ++i) out[mapping_[i]] = pops[i];
  return detail::trusted_state(state.num_qubits(), std::move(out));
}

DiagonalState flip_qubits(const DiagonalState& state, const std::vector<int>& qubits) {
  const std::uint64_t mask = flip_mask_for(state, qubits);
  std::vector<double> pops = state.populations();
  kernel::flip_mask(pops, mask);
  return detail::trusted_state(state.num_qubits(), std::move(pops));
}

DiagonalState sort_compression(const DiagonalState& state) {
  std::vector<double> pops = state.populations();
  kernel::sort_descending(pops);
  return detail::trusted_state(state.num_qubits(), std::move(pops));
}

DiagonalState subset_sort(const DiagonalState& state, const std::vector<int>& qubits) {
  check_subset(state, qubits);
  kernel::SubsetIndexer ix(state.num_qubits(), qubits);
  std::vector<double> pops = state.populations();
  kernel::subset_sort(pops, ix);
  return detail::trusted_state(state.num_qubits(), std::move(pops));
}

PermutationSpec flip_permutation(int n, const std::vector<int>& qubits) {
  if (n < 1 || n > 30) throw std::invalid_argument("bad qubit count");
  std::uint64_t mask = 0;
  for (int q : qubits) {
    if (q < 1 || q > n) throw std::invalid_argument("qubit index out of range");
    mask |= std::uint64_t{1} << (n - q);
  }
  std::vector<std::uint64_t> mapping(std::size_t{1} << n);
  for (std::uint64_t i = 0; i < mapping.size(); ++i) mapping[i] = i ^ mask;
  return PermutationSpec(std::move(mapping));
}

namespace {

// Stable descending order of `values`; order[k] = source position of rank k.
std::vector<std::uint64_t> stable_desc_order(const std::vector<double>& values) {
  std::vector<std::uint64_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint64_t a, std::uint64_t b) { return values[a] > values[b]; });
  return order;
}

}  // namespace

PermutationSpec sort_permutation(const DiagonalState& state) {
  const auto order = stable_desc_order(state.populations());
  std::vector<std::uint64_t> mapping(order.size());
  for (std::uint64_t rank = 0; rank < order.size(); ++rank) mapping[order[rank]] = rank;
  return PermutationSpec(std::move(mapping));
}

PermutationSpec subset_sort_permutation(const DiagonalState& state,
                                        const std::vector<int>& qubits) {
  check_subset(state, qubits);
  kernel::SubsetIndexer ix(state.num_qubits(), qubits);
  const auto& pops = state.populations();
  std::vector<std::uint64_t> mapping(pops.size());
  const std::uint64_t labels = std::uint64_t{1} << ix.subset_bits.size();
  std::vector<double> block(labels);
  std::vector<std::uint64_t> idx(labels);
  for (std::uint64_t c = 0; c < ix.spectator_configs(); ++c) {
    const std::uint64_t base = ix.spectator_base(c);
    for (std::uint64_t lab = 0; lab < labels; ++lab) {
      idx[lab] = ix.with_label(base, lab);
      block[lab] = pops[idx[lab]];
    }
    const auto order = stable_desc_order(block);
    for (std::uint64_t rank = 0; rank < labels; ++rank)
      mapping[idx[order[rank]]] = idx[rank];
  }
  return PermutationSpec(std::move(mapping));
}

}  // namespace coolsim
