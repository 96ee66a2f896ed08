#ifndef DEGEN_POLY_HPP
#define DEGEN_POLY_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "degen/rational.hpp"

namespace degen {

/// Dense univariate polynomial over a commutative coefficient ring.
///
/// Coefficient i multiplies the i-th power of the variable. Trailing zero
/// coefficients are always trimmed, so the zero polynomial is the empty list
/// and equality is a plain coefficient-list comparison.
template <class Coeff>
class Poly {
 public:
  using coeff_type = Coeff;

  Poly() = default;
  Poly(Coeff constant) {  // NOLINT(google-explicit-constructor)
    coeffs_.push_back(std::move(constant));
    trim();
  }
  explicit Poly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly monomial(Coeff c, std::size_t power) {
    std::vector<Coeff> coeffs(power + 1);
    coeffs[power] = std::move(c);
    return Poly(std::move(coeffs));
  }

  std::span<const Coeff> coeffs() const { return coeffs_; }

  /// Coefficient of the given power; zero beyond the degree.
  Coeff coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Coeff{};
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Horner evaluation.
  Coeff eval(const Coeff& value) const {
    Coeff acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * value + *it;
    }
    return acc;
  }

  Poly& operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

  Poly& operator*=(const Coeff& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
  }

  /// Multiplies every coefficient by a rational. For nested polynomials this
  /// recurses down to the base field.
  Poly scaled(const Rational& factor) const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c *= factor;
    out.trim();
    return out;
  }

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator-(const Poly& p) {
    Poly out = p;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Poly{};
    std::vector<Coeff> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (lhs.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
      }
    }
    return Poly(std::move(out));
  }

  friend Poly operator*(Poly lhs, const Coeff& scalar) { return lhs *= scalar; }
  friend Poly operator*(const Coeff& scalar, Poly rhs) { return rhs *= scalar; }

  friend bool operator==(const Poly& lhs, const Poly& rhs) = default;

  friend bool is_zero(const Poly& p) { return p.is_zero(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

/// Polynomial in the formal variable lambda with rational coefficients.
using LambdaPoly = Poly<Rational>;

/// Polynomial in x whose coefficients are polynomials in lambda.
using XLPoly = Poly<LambdaPoly>;

template <class Coeff>
Poly<Coeff> pow(const Poly<Coeff>& base, unsigned exponent) {
  Poly<Coeff> result(Coeff(Rational(1)));
  Poly<Coeff> square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

}  // namespace degen

#endif  // DEGEN_POLY_HPP
