#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <random>

#include "coolsim/state.hpp"
#include "coolsim/unitaries.hpp"

using namespace coolsim;

namespace {

DiagonalState random_state(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<double> pops(std::size_t{1} << n);
  double sum = 0.0;
  for (double& p : pops) {
    p = uni(rng);
    sum += p;
  }
  for (double& p : pops) p /= sum;
  return DiagonalState(n, std::move(pops));
}

bool same_multiset(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Product state with the given per-qubit polarizations.
DiagonalState product_state(const std::vector<double>& pols) {
  DiagonalState out(1, {0.5 * (1.0 + pols[0]), 0.5 * (1.0 - pols[0])});
  for (std::size_t q = 1; q < pols.size(); ++q)
    out = tensor(out, DiagonalState(1, {0.5 * (1.0 + pols[q]), 0.5 * (1.0 - pols[q])}));
  return out;
}

}  // namespace

TEST_CASE("flip_qubits permutes by XOR and negates polarizations") {
  const double xi = std::atanh(0.25);
  const double z = 4.0 * std::cosh(xi) * std::cosh(xi);
  const DiagonalState state(
      2, {std::exp(2.0 * xi) / z, 1.0 / z, 1.0 / z, std::exp(-2.0 * xi) / z});
  const auto flipped = flip_qubits(state, {2});
  CHECK(flipped.populations()[0] == state.populations()[1]);
  CHECK(flipped.populations()[1] == state.populations()[0]);
  CHECK(flipped.populations()[2] == state.populations()[3]);
  CHECK(flipped.populations()[3] == state.populations()[2]);
  CHECK(polarization(flipped, 2) == doctest::Approx(-polarization(state, 2)).epsilon(1e-15));
  CHECK(polarization(flipped, 1) == doctest::Approx(polarization(state, 1)).epsilon(1e-15));

  // involution, bit-exact
  const auto twice = flip_qubits(flipped, {2});
  CHECK(twice.populations() == state.populations());

  const BathModel bath(0.4);
  const auto all = flip_qubits(thermal_state(3, bath), {1, 2, 3});
  for (int q = 1; q <= 3; ++q)
    CHECK(polarization(all, q) == doctest::Approx(-0.4).epsilon(1e-14));

  CHECK_THROWS_AS(flip_qubits(state, {5}), std::invalid_argument);
}

TEST_CASE("sort_compression sorts descending and keeps the multiset") {
  const DiagonalState state(2, {0.1, 0.4, 0.3, 0.2});
  const auto sorted = sort_compression(state);
  CHECK(sorted.populations() == std::vector<double>{0.4, 0.3, 0.2, 0.1});
  CHECK(sort_compression(sorted).populations() == sorted.populations());

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_state(rng, 4);
    const auto out = sort_compression(s);
    CHECK(same_multiset(s.populations(), out.populations()));
    CHECK(std::is_sorted(out.populations().rbegin(), out.populations().rend()));
    CHECK(polarization(out, 1) >= polarization(s, 1) - 1e-15);
  }
}

TEST_CASE("one sort strictly cools qubit 1 of a thermal state") {
  const BathModel bath(0.2);
  const auto state = thermal_state(3, bath);
  // brute-force oracle: descending sort of the 8 thermal populations
  std::vector<double> expected = state.populations();
  std::sort(expected.rbegin(), expected.rend());
  const auto sorted = sort_compression(state);
  CHECK(sorted.populations() == expected);
  CHECK(polarization(sorted, 1) > polarization(state, 1));
}

TEST_CASE("subset_sort blocks by spectator configuration") {
  // full register == sort_compression
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_state(rng, 3);
    CHECK(subset_sort(s, {1, 2, 3}).populations() ==
          sort_compression(s).populations());
  }

  const auto one = subset_sort(DiagonalState(1, {0.3, 0.7}), {1});
  CHECK(one.populations() == std::vector<double>{0.7, 0.3});

  // Appendix-style low-polarization step: {1,2,1} -> {2,1,1}
  const double eps = 1e-5;
  const BathModel bath(eps);
  const auto in = product_state({eps, 2.0 * eps, eps});
  const auto out = subset_sort(in, {1, 2, 3});
  const auto coeffs = shifted_scaled_diagonal(out, bath, 1e-9);
  CHECK(coeffs[0] == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(coeffs[1] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(coeffs[2] == doctest::Approx(1.0).epsilon(1e-8));

  CHECK_THROWS_AS(subset_sort(one, {2}), std::invalid_argument);
  CHECK_THROWS_AS(subset_sort(one, {}), std::invalid_argument);
}

TEST_CASE("subset_sort on a subset preserves spectator marginals") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = random_state(rng, 4);
    const auto out = subset_sort(s, {2, 3});
    CHECK(same_multiset(s.populations(), out.populations()));
    CHECK(polarization(out, 1) == doctest::Approx(polarization(s, 1)).epsilon(1e-12));
    CHECK(polarization(out, 4) == doctest::Approx(polarization(s, 4)).epsilon(1e-12));
  }
}

TEST_CASE("permutation specs are validated and invert ops") {
  CHECK_THROWS_AS(PermutationSpec({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(PermutationSpec({0, 2}), std::invalid_argument);

  std::mt19937_64 rng(3);
  const auto s = random_state(rng, 3);
  const auto via_perm = sort_permutation(s).apply(s);
  CHECK(via_perm.populations() == sort_compression(s).populations());

  const auto flip_spec = flip_permutation(3, {1, 3});
  CHECK(flip_spec.apply(s).populations() == flip_qubits(s, {1, 3}).populations());

  const auto sub_perm = subset_sort_permutation(s, {2, 3});
  CHECK(sub_perm.apply(s).populations() == subset_sort(s, {2, 3}).populations());
}

TEST_CASE("sort ties are broken by original index") {
  // equal entries keep their relative order: the induced permutation is the
  // identity on the tied block
  const DiagonalState state(2, {0.25, 0.25, 0.3, 0.2});
  const auto perm = sort_permutation(state).mapping();
  CHECK(perm[2] == 0);  // 0.3 first
  CHECK(perm[0] == 1);  // first 0.25 precedes the second
  CHECK(perm[1] == 2);
  CHECK(perm[3] == 3);
}
