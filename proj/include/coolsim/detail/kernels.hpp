#pragma once

// In-place population-vector kernels shared by the channel, unitary and
// protocol modules. Qubit indices are 1-based with qubit 1 as the most
// significant bit; all kernels assume arguments were validated by the caller.

#include <cstdint>
#include <vector>

namespace coolsim::kernel {

// Bit positions (from the LSB) for subset qubits and the spectators' scatter
// tables, precomputed once per channel application.
struct SubsetIndexer {
  SubsetIndexer(int n, const std::vector<int>& subset_qubits);

  std::uint64_t spectator_configs() const { return std::uint64_t{1} << spectator_bits.size(); }
  // Index with the spectator bits set according to config c (label order).
  std::uint64_t spectator_base(std::uint64_t c) const;
  // Adds subset-label bits (first subset qubit = most significant label bit).
  std::uint64_t with_label(std::uint64_t base, std::uint64_t label) const;

  std::vector<int> subset_bits;     // bit position per subset qubit, label order
  std::vector<int> spectator_bits;  // bit positions of the remaining qubits
};

void flip_mask(std::vector<double>& pops, std::uint64_t mask);

void qubit_reset(std::vector<double>& pops, int n, int qubit, double eps_b);

// Re-equilibrates the populations of the two subset labels s1, s2 to the
// ratio p : 1-p within every spectator block.
void pair_reset(std::vector<double>& pops, const SubsetIndexer& ix,
                std::uint64_t s1, std::uint64_t s2, double p);

void sort_descending(std::vector<double>& pops);

void subset_sort(std::vector<double>& pops, const SubsetIndexer& ix);

}  // namespace coolsim::kernel
