#include <stdexcept>

#include "degen/algebra.hpp"
#include "degen/sequences.hpp"

namespace degen {

LambdaPoly bernoulli_number(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_number: n must be nonnegative");
  return bernoulli_taps(static_cast<std::size_t>(n)).back();
}

XLPoly bernoulli_polynomial(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_polynomial: n must be nonnegative");
  const auto beta = bernoulli_taps(static_cast<std::size_t>(n));
  const XLPoly x = x_var();
  XLPoly acc;
  for (int k = 0; k <= n; ++k) {
    acc += falling_factorial_degenerate(x, static_cast<unsigned>(n - k)) *
           beta[static_cast<std::size_t>(k)].scaled(binomial(n, k));
  }
  return acc;
}

}  // namespace degen
