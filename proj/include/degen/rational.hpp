#ifndef DEGEN_RATIONAL_HPP
#define DEGEN_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace degen {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Values are kept in canonical form at all times: the fraction is fully
/// reduced, the denominator is positive and zero is stored as 0/1. Equality
/// is therefore structural.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(mpq_class value);

  /// Parses "p" or "p/q" with an optional leading '-'. Anything else,
  /// including decimal and exponent forms, throws std::invalid_argument.
  static Rational parse(std::string_view text);

  /// Canonical text: "-1/2", "5", "0".
  std::string to_string() const;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const;
  int sign() const { return sgn(value_); }

  Rational abs() const;
  Rational pow(unsigned exponent) const;

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& value);

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend bool operator<(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) < 0;
  }
  friend bool operator>(const Rational& lhs, const Rational& rhs) { return rhs < lhs; }
  friend bool operator<=(const Rational& lhs, const Rational& rhs) { return !(rhs < lhs); }
  friend bool operator>=(const Rational& lhs, const Rational& rhs) { return !(lhs < rhs); }

 private:
  mpq_class value_{0};
};

inline bool is_zero(const Rational& value) { return value.is_zero(); }

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// n! as an exact rational. Throws std::invalid_argument for n < 0.
Rational factorial(std::int64_t n);

/// Integer binomial coefficient C(n, k) for n >= 0; zero when k < 0 or k > n.
Rational binomial(std::int64_t n, std::int64_t k);

}  // namespace degen

#endif  // DEGEN_RATIONAL_HPP
