#ifndef DEGEN_ORACLES_HPP
#define DEGEN_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "degen/rational.hpp"

namespace degen {

/// Number of permutations of {1..n} with each value of a statistic.
struct PermStatDistribution {
  int n = 0;
  std::vector<std::uint64_t> counts;  // counts[k], k = 0..n-1

  friend bool operator==(const PermStatDistribution&, const PermStatDistribution&) = default;
};

inline constexpr int kMaxEnumeratedN = 9;

/// Brute-force enumeration of all n! permutations, 1 <= n <= 9; outside that
/// range throws std::out_of_range.
PermStatDistribution descent_distribution(int n);    // sigma(i) > sigma(i+1)
PermStatDistribution excedance_distribution(int n);  // sigma(i) > i
PermStatDistribution ascent_distribution(int n);     // sigma(i) < sigma(i+1)

/// Classical (lambda = 0) reference triangles built by their textbook
/// recursions, independent of the degenerate machinery.
struct ClassicalTables {
  std::vector<std::vector<std::int64_t>> eulerian;   // A(n,k), 0 <= k <= n
  std::vector<std::vector<std::int64_t>> stirling1;  // signed S_1(n,k)
  std::vector<std::vector<std::int64_t>> stirling2;  // S_2(n,k)
  std::vector<Rational> bernoulli;                   // B_n with B_1 = -1/2
};

inline constexpr int kMaxClassicalN = 20;

/// Tables for 0 <= n <= n_max <= 20; throws std::out_of_range otherwise.
ClassicalTables classical_triangles(int n_max);

}  // namespace degen

#endif  // DEGEN_ORACLES_HPP
