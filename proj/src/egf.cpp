#include "degen/egf.hpp"

namespace degen {

std::vector<LambdaPoly> bernoulli_taps(std::size_t order) {
  // (e_lambda(t) - 1)/t has tap_m = (1)_{m+1,lambda} / (m+1) and tap_0 = 1, so
  // each beta_n follows from the vanishing of tap_n of the product.
  std::vector<LambdaPoly> quotient_taps;
  quotient_taps.reserve(order + 1);
  for (std::size_t m = 0; m <= order; ++m) {
    quotient_taps.push_back(
        falling_factorial_degenerate(Rational(1), static_cast<unsigned>(m + 1))
            .scaled(Rational(1, static_cast<std::int64_t>(m + 1))));
  }

  std::vector<LambdaPoly> beta;
  beta.reserve(order + 1);
  beta.emplace_back(Rational(1));
  for (std::size_t n = 1; n <= order; ++n) {
    LambdaPoly acc;
    for (std::size_t k = 0; k < n; ++k) {
      acc += (beta[k] * quotient_taps[n - k])
                 .scaled(binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)));
    }
    beta.push_back(-acc);
  }
  return beta;
}

Egf<XLPoly> gf_residual(std::span<const XLPoly> eulerian_taps) {
  if (eulerian_taps.empty()) throw std::invalid_argument("gf_residual needs at least one tap");
  const std::size_t order = eulerian_taps.size() - 1;
  const XLPoly x = x_var();
  const XLPoly one(LambdaPoly(Rational(1)));

  const Egf<XLPoly> series(std::vector<XLPoly>(eulerian_taps.begin(), eulerian_taps.end()));

  std::vector<XLPoly> x_taps(order + 1);
  x_taps[0] = x;
  const Egf<XLPoly> denominator =
      Egf<XLPoly>(std::move(x_taps)) - degenerate_exp(x - one, LambdaSign::minus, order);

  std::vector<XLPoly> numerator_taps(order + 1);
  numerator_taps[0] = x - one;
  return series * denominator - Egf<XLPoly>(std::move(numerator_taps));
}

}  // namespace degen
