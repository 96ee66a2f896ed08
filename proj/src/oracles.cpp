#include "degen/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace degen {

namespace {

template <class Statistic>
PermStatDistribution enumerate(int n, Statistic statistic) {
  if (n < 1 || n > kMaxEnumeratedN) {
    throw std::out_of_range("permutation enumeration supports 1 <= n <= " +
                            std::to_string(kMaxEnumeratedN) + ", got n=" + std::to_string(n));
  }
  PermStatDistribution out{n, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0)};
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    ++out.counts.at(static_cast<std::size_t>(statistic(sigma)));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace

PermStatDistribution descent_distribution(int n) {
  return enumerate(n, [](const std::vector<int>& s) {
    int d = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) d += s[i] > s[i + 1] ? 1 : 0;
    return d;
  });
}

PermStatDistribution excedance_distribution(int n) {
  return enumerate(n, [](const std::vector<int>& s) {
    int e = 0;
    // positions are 1-based: sigma(i) > i for i in [n-1]
    for (std::size_t i = 0; i + 1 < s.size(); ++i) e += s[i] > static_cast<int>(i + 1) ? 1 : 0;
    return e;
  });
}

PermStatDistribution ascent_distribution(int n) {
  return enumerate(n, [](const std::vector<int>& s) {
    int a = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) a += s[i] < s[i + 1] ? 1 : 0;
    return a;
  });
}

ClassicalTables classical_triangles(int n_max) {
  if (n_max < 0 || n_max > kMaxClassicalN) {
    throw std::out_of_range("classical_triangles supports 0 <= n_max <= " +
                            std::to_string(kMaxClassicalN));
  }
  ClassicalTables t;
  const auto size = static_cast<std::size_t>(n_max + 1);
  auto triangle = [&] {
    std::vector<std::vector<std::int64_t>> rows(size);
    for (std::size_t n = 0; n < size; ++n) rows[n].assign(n + 1, 0);
    rows[0][0] = 1;
    return rows;
  };
  t.eulerian = triangle();
  t.stirling1 = triangle();
  t.stirling2 = triangle();

  for (std::int64_t n = 1; n <= n_max; ++n) {
    const auto& ep = t.eulerian[static_cast<std::size_t>(n - 1)];
    const auto& s1p = t.stirling1[static_cast<std::size_t>(n - 1)];
    const auto& s2p = t.stirling2[static_cast<std::size_t>(n - 1)];
    auto prev = [n](const std::vector<std::int64_t>& row, std::int64_t k) -> std::int64_t {
      return (k < 0 || k > n - 1) ? 0 : row[static_cast<std::size_t>(k)];
    };
    for (std::int64_t k = 0; k <= n; ++k) {
      const auto idx = static_cast<std::size_t>(k);
      t.eulerian[static_cast<std::size_t>(n)][idx] =
          (n - k) * prev(ep, k - 1) + (k + 1) * prev(ep, k);
      t.stirling1[static_cast<std::size_t>(n)][idx] = prev(s1p, k - 1) - (n - 1) * prev(s1p, k);
      t.stirling2[static_cast<std::size_t>(n)][idx] = prev(s2p, k - 1) + k * prev(s2p, k);
    }
  }

  // sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1
  t.bernoulli.push_back(Rational(1));
  for (int n = 1; n <= n_max; ++n) {
    Rational acc;
    for (int k = 0; k < n; ++k) acc += binomial(n + 1, k) * t.bernoulli[static_cast<std::size_t>(k)];
    t.bernoulli.push_back(-acc / Rational(n + 1));
  }
  return t;
}

}  // namespace degen
