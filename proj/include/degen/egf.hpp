#ifndef DEGEN_EGF_HPP
#define DEGEN_EGF_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degen/algebra.hpp"
#include "degen/poly.hpp"
#include "degen/rational.hpp"

namespace degen {

/// Truncated exponential generating function f(t) = sum_{n<=N} a_n t^n / n!.
///
/// The taps a_0..a_N are stored directly and the truncation order N is part
/// of the value. Combining series of different orders is a contract
/// violation (std::invalid_argument), never a silent re-truncation.
template <class Ring>
class Egf {
 public:
  explicit Egf(std::size_t order) : taps_(order + 1) {}
  explicit Egf(std::vector<Ring> taps) : taps_(std::move(taps)) {
    if (taps_.empty()) throw std::invalid_argument("Egf needs at least one tap");
  }

  std::size_t order() const { return taps_.size() - 1; }
  const Ring& tap(std::size_t n) const { return taps_.at(n); }
  std::span<const Ring> taps() const { return taps_; }

  bool is_zero() const {
    for (const auto& a : taps_) {
      if (!a.is_zero()) return false;
    }
    return true;
  }

  Egf& operator+=(const Egf& rhs) {
    require_same_order(rhs);
    for (std::size_t n = 0; n < taps_.size(); ++n) taps_[n] += rhs.taps_[n];
    return *this;
  }

  Egf& operator-=(const Egf& rhs) {
    require_same_order(rhs);
    for (std::size_t n = 0; n < taps_.size(); ++n) taps_[n] -= rhs.taps_[n];
    return *this;
  }

  friend Egf operator+(Egf lhs, const Egf& rhs) { return lhs += rhs; }
  friend Egf operator-(Egf lhs, const Egf& rhs) { return lhs -= rhs; }

  /// Binomial convolution: tap_n = sum_k C(n,k) a_k b_{n-k}.
  friend Egf operator*(const Egf& lhs, const Egf& rhs) {
    lhs.require_same_order(rhs);
    Egf out(lhs.order());
    for (std::size_t n = 0; n <= lhs.order(); ++n) {
      Ring acc{};
      for (std::size_t k = 0; k <= n; ++k) {
        if (lhs.taps_[k].is_zero() || rhs.taps_[n - k].is_zero()) continue;
        acc += (lhs.taps_[k] * rhs.taps_[n - k]) *
               binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
      }
      out.taps_[n] = std::move(acc);
    }
    return out;
  }

  /// Multiplies every tap by a ring element (a series constant in t).
  Egf scaled(const Ring& factor) const {
    Egf out = *this;
    for (auto& a : out.taps_) a = a * factor;
    return out;
  }

  friend bool operator==(const Egf& lhs, const Egf& rhs) = default;

 private:
  void require_same_order(const Egf& rhs) const {
    if (rhs.order() != order()) {
      throw std::invalid_argument("Egf order mismatch: " + std::to_string(order()) + " vs " +
                                  std::to_string(rhs.order()));
    }
  }

  std::vector<Ring> taps_;
};

/// e_{+-lambda}(u t): tap_n = (1)_{n,+-lambda} u^n.
template <class P>
Egf<P> degenerate_exp(const P& u, LambdaSign sign, std::size_t order) {
  std::vector<P> taps;
  taps.reserve(order + 1);
  P power(typename P::coeff_type(Rational(1)));
  for (std::size_t n = 0; n <= order; ++n) {
    const LambdaPoly unit = falling_factorial_degenerate(Rational(1), static_cast<unsigned>(n), sign);
    taps.push_back(power * P(unit));
    power *= u;
  }
  return Egf<P>(std::move(taps));
}

/// e_{+-lambda}^{base}(t): tap_n = (base)_{n,+-lambda}.
template <class P>
Egf<P> degenerate_exp_power(const P& base, LambdaSign sign, std::size_t order) {
  std::vector<P> taps;
  taps.reserve(order + 1);
  P current(typename P::coeff_type(Rational(1)));
  const P step(lambda_var(sign));
  for (std::size_t n = 0; n <= order; ++n) {
    taps.push_back(current);
    current *= base - step.scaled(Rational(static_cast<std::int64_t>(n)));
  }
  return Egf<P>(std::move(taps));
}

/// Degenerate Bernoulli numbers beta_{0,lambda} .. beta_{order,lambda}, solved
/// one tap at a time from B(t) (e_lambda(t) - 1)/t = 1.
std::vector<LambdaPoly> bernoulli_taps(std::size_t order);

/// Residual S(t) (x - e_{-lambda}((x-1)t)) - (x - 1) where S has the given
/// taps. All taps vanish exactly when S is the Eulerian generating function.
Egf<XLPoly> gf_residual(std::span<const XLPoly> eulerian_taps);

}  // namespace degen

#endif  // DEGEN_EGF_HPP
