#pragma once

#include <cstdint>
#include <vector>

#include "coolsim/state.hpp"

namespace coolsim {

/// Diagonal action of a permutation unitary: a bijection on basis indices.
/// mapping[i] = j means the population at index i moves to index j.
class PermutationSpec {
 public:
  explicit PermutationSpec(std::vector<std::uint64_t> mapping);

  const std::vector<std::uint64_t>& mapping() const { return mapping_; }
  DiagonalState apply(const DiagonalState& state) const;

 private:
  std::vector<std::uint64_t> mapping_;
};

/// XOR the selected qubits' bits; polarizations of flipped qubits negate.
DiagonalState flip_qubits(const DiagonalState& state, const std::vector<int>& qubits);

/// Entropy compression: populations sorted in non-increasing order.
/// Ties keep their original relative order (stable), so the induced
/// permutation is deterministic.
DiagonalState sort_compression(const DiagonalState& state);

/// For each configuration of the qubits outside `qubits`, sorts that block's
/// populations in non-increasing order over the subset's basis labels
/// (first listed qubit = most significant label bit). With the full register
/// as the subset this is sort_compression.
DiagonalState subset_sort(const DiagonalState& state, const std::vector<int>& qubits);

PermutationSpec flip_permutation(int n, const std::vector<int>& qubits);
PermutationSpec sort_permutation(const DiagonalState& state);
PermutationSpec subset_sort_permutation(const DiagonalState& state,
                                        const std::vector<int>& qubits);

}  // namespace coolsim
