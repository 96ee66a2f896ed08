#include <stdexcept>
#include <string>

#include "degen/algebra.hpp"
#include "degen/sequences.hpp"

namespace degen {

std::string_view to_string(PowerSumRoute route) {
  switch (route) {
    case PowerSumRoute::direct:
      return "direct";
    case PowerSumRoute::eulerian:
      return "eulerian";
    case PowerSumRoute::bernoulli:
      return "bernoulli";
  }
  return "unknown";
}

std::optional<PowerSumRoute> parse_power_sum_route(std::string_view text) {
  if (text == "direct") return PowerSumRoute::direct;
  if (text == "eulerian") return PowerSumRoute::eulerian;
  if (text == "bernoulli") return PowerSumRoute::bernoulli;
  return std::nullopt;
}

LambdaPoly power_sum(int m, int n, PowerSumRoute route) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("power_sum: need m, n >= 1, got m=" + std::to_string(m) +
                                ", n=" + std::to_string(n));
  }
  LambdaPoly acc;
  switch (route) {
    case PowerSumRoute::direct:
      for (int k = 1; k <= m; ++k) {
        acc += falling_factorial_degenerate(Rational(k), static_cast<unsigned>(n));
      }
      return acc;
    case PowerSumRoute::eulerian:
      for (int j = 0; j <= n; ++j) {
        acc += eulerian_negated(n, j).scaled(binomial(m + j + 1, n + 1));
      }
      return acc;
    case PowerSumRoute::bernoulli: {
      const LambdaPoly at_end = eval_x(bernoulli_polynomial(n + 1), Rational(m + 1));
      return divide_integral(at_end - bernoulli_number(n + 1), Rational(n + 1));
    }
  }
  throw std::logic_error("power_sum: unknown route");
}

XLPoly worpitzky_lhs(int n) {
  if (n < 0) throw std::invalid_argument("worpitzky_lhs: n must be nonnegative");
  XLPoly acc;
  for (int k = 0; k <= n; ++k) {
    acc += binomial_poly(k, static_cast<unsigned>(n)) * eulerian_negated(n, k);
  }
  return acc;
}

}  // namespace degen
