#include "coolsim/detail/kernels.hpp"

#include <algorithm>
#include <functional>

namespace coolsim::kernel {

SubsetIndexer::SubsetIndexer(int n, const std::vector<int>& subset_qubits) {
  subset_bits.reserve(subset_qubits.size());
  for (int q : subset_qubits) subset_bits.push_back(n - q);
  for (int b = n - 1; b >= 0; --b)
    if (std::find(subset_bits.begin(), subset_bits.end(), b) == subset_bits.end())
      spectator_bits.push_back(b);
}

std::uint64_t SubsetIndexer::spectator_base(std::uint64_t c) const {
  std::uint64_t base = 0;
  for (std::size_t j = 0; j < spectator_bits.size(); ++j)
    if ((c >> (spectator_bits.size() - 1 - j)) & 1u)
      base |= std::uint64_t{1} << spectator_bits[j];
  return base;
}

std::uint64_t SubsetIndexer::with_label(std::uint64_t base, std::uint64_t label) const {
  for (std::size_t j = 0; j < subset_bits.size(); ++j)
    if ((label >> (subset_bits.size() - 1 - j)) & 1u)
      base |= std::uint64_t{1} << subset_bits[j];
  return base;
}

void flip_mask(std::vector<double>& pops, std::uint64_t mask) {
  if (mask == 0) return;
  for (std::uint64_t i = 0; i < pops.size(); ++i) {
    const std::uint64_t j = i ^ mask;
    if (i < j) std::swap(pops[i], pops[j]);
  }
}

void qubit_reset(std::vector<double>& pops, int n, int qubit, double eps_b) {
  const int bit = n - qubit;
  const std::uint64_t step = std::uint64_t{1} << bit;
  const double p0 = 0.5 * (1.0 + eps_b);
  const double p1 = 0.5 * (1.0 - eps_b);
  const std::uint64_t mask_low = step - 1;
  for (std::uint64_t k = 0; k < pops.size() / 2; ++k) {
    const std::uint64_t i = ((k & ~mask_low) << 1) | (k & mask_low);
    const double tot = pops[i] + pops[i | step];
    pops[i] = tot * p0;
    pops[i | step] = tot * p1;
  }
}

void pair_reset(std::vector<double>& pops, const SubsetIndexer& ix,
                std::uint64_t s1, std::uint64_t s2, double p) {
  const std::uint64_t configs = ix.spectator_configs();
  for (std::uint64_t c = 0; c < configs; ++c) {
    const std::uint64_t base = ix.spectator_base(c);
    const std::uint64_t i1 = ix.with_label(base, s1);
    const std::uint64_t i2 = ix.with_label(base, s2);
    const double tot = pops[i1] + pops[i2];
    pops[i1] = tot * p;
    pops[i2] = tot * (1.0 - p);
  }
}

void sort_descending(std::vector<double>& pops) {
  std::stable_sort(pops.begin(), pops.end(), std::greater<double>());
}

void subset_sort(std::vector<double>& pops, const SubsetIndexer& ix) {
  const std::uint64_t labels = std::uint64_t{1} << ix.subset_bits.size();
  const std::uint64_t configs = ix.spectator_configs();
  std::vector<double> block(labels);
  for (std::uint64_t c = 0; c < configs; ++c) {
    const std::uint64_t base = ix.spectator_base(c);
    for (std::uint64_t lab = 0; lab < labels; ++lab)
      block[lab] = pops[ix.with_label(base, lab)];
    std::stable_sort(block.begin(), block.end(), std::greater<double>());
    for (std::uint64_t lab = 0; lab < labels; ++lab)
      pops[ix.with_label(base, lab)] = block[lab];
  }
}

}  // namespace coolsim::kernel
