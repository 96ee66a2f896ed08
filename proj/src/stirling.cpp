#include <stdexcept>
#include <string>

#include "degen/algebra.hpp"
#include "degen/sequences.hpp"

namespace degen {

namespace {

void require_triangle(int n, int k, const char* what) {
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument(std::string(what) + ": need 0 <= k <= n, got n=" +
                                std::to_string(n) + ", k=" + std::to_string(k));
  }
}

}  // namespace

LambdaPoly stirling2_degenerate(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("stirling2_degenerate: negative index");
  LambdaPoly acc;
  for (int j = 0; j <= k; ++j) {
    const LambdaPoly term =
        falling_factorial_degenerate(Rational(j), static_cast<unsigned>(n)).scaled(binomial(k, j));
    if ((k + j) % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return divide_integral(acc, factorial(k));
}

LambdaPoly stirling2_from_eulerian(int n, int k) {
  require_triangle(n, k, "stirling2_from_eulerian");
  LambdaPoly acc;
  for (int j = n - k; j <= n; ++j) {
    acc += eulerian_negated(n, j).scaled(binomial(j, n - k));
  }
  return divide_integral(acc, factorial(k));
}

std::vector<LambdaPoly> stirling1_row(int n) {
  if (n < 0) throw std::invalid_argument("stirling1_row: n must be nonnegative");
  const XLPoly x = x_var();
  XLPoly remainder = falling_factorial_classical(static_cast<unsigned>(n));
  std::vector<LambdaPoly> row(static_cast<std::size_t>(n + 1));
  // (x)_{k,lambda} is monic of x-degree k, so peeling the leading x-term
  // from the top down is exact.
  for (int k = n; k >= 0; --k) {
    const LambdaPoly lead = remainder.coeff(static_cast<std::size_t>(k));
    row[static_cast<std::size_t>(k)] = lead;
    if (!lead.is_zero()) remainder -= falling_factorial_degenerate(x, static_cast<unsigned>(k)) * lead;
  }
  if (!remainder.is_zero()) throw std::logic_error("stirling1_row: basis conversion left a remainder");
  return row;
}

LambdaPoly stirling1_degenerate(int n, int k) {
  require_triangle(n, k, "stirling1_degenerate");
  return stirling1_row(n)[static_cast<std::size_t>(k)];
}

LambdaPoly eulerian_from_stirling2(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw std::invalid_argument("eulerian_from_stirling2: need 1 <= k <= n, got n=" +
                                std::to_string(n) + ", k=" + std::to_string(k));
  }
  LambdaPoly acc;
  for (int j = 0; j <= k; ++j) {
    const LambdaPoly term = stirling2_degenerate(n, j).scaled(binomial(n - j, n - k) * factorial(j));
    if ((k + j) % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

}  // namespace degen
