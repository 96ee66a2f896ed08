#include "degen/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace degen {

LambdaPoly lambda_var(LambdaSign sign) {
  return LambdaPoly::monomial(Rational(sign == LambdaSign::plus ? 1 : -1), 1);
}

XLPoly x_var() { return XLPoly::monomial(LambdaPoly(Rational(1)), 1); }

namespace {

template <class P>
P falling_product(const P& base, unsigned n, const LambdaPoly& step) {
  P result(typename P::coeff_type(Rational(1)));
  const P shift(step);
  for (unsigned i = 0; i < n; ++i) {
    result *= base - shift.scaled(Rational(static_cast<std::int64_t>(i)));
  }
  return result;
}

}  // namespace

LambdaPoly falling_factorial(const LambdaPoly& base, unsigned n, const LambdaPoly& step) {
  return falling_product(base, n, step);
}

XLPoly falling_factorial(const XLPoly& base, unsigned n, const LambdaPoly& step) {
  return falling_product(base, n, step);
}

LambdaPoly falling_factorial_degenerate(const Rational& base, unsigned n, LambdaSign sign) {
  return falling_product(LambdaPoly(base), n, lambda_var(sign));
}

XLPoly falling_factorial_degenerate(const XLPoly& base, unsigned n, LambdaSign sign) {
  return falling_product(base, n, lambda_var(sign));
}

XLPoly falling_factorial_classical(unsigned n) {
  return falling_product(x_var(), n, LambdaPoly(Rational(1)));
}

XLPoly binomial_poly(std::int64_t offset, unsigned n) {
  const XLPoly shifted = x_var() + XLPoly(LambdaPoly(Rational(offset)));
  return falling_product(shifted, n, LambdaPoly(Rational(1)))
      .scaled(Rational(1) / factorial(n));
}

LambdaPoly substitute_lambda(const LambdaPoly& p, const Rational& scale) {
  std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
  Rational power(1);
  for (auto& c : out) {
    c *= power;
    power *= scale;
  }
  return LambdaPoly(std::move(out));
}

XLPoly substitute_lambda(const XLPoly& p, const Rational& scale) {
  std::vector<LambdaPoly> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(substitute_lambda(c, scale));
  return XLPoly(std::move(out));
}

Rational eval_lambda(const LambdaPoly& p, const Rational& value) { return p.eval(value); }

XLPoly eval_lambda(const XLPoly& p, const Rational& value) {
  std::vector<LambdaPoly> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c.eval(value));
  return XLPoly(std::move(out));
}

LambdaPoly eval_x(const XLPoly& p, const Rational& value) { return p.eval(LambdaPoly(value)); }

int lambda_degree(const XLPoly& p) {
  int degree = -1;
  for (const auto& c : p.coeffs()) degree = std::max(degree, c.degree());
  return degree;
}

LambdaPoly divide_integral(const LambdaPoly& p, const Rational& divisor) {
  LambdaPoly quotient = p.scaled(Rational(1) / divisor);
  for (const auto& c : quotient.coeffs()) {
    if (!c.is_integer()) {
      throw std::logic_error("non-integral quotient: coefficient " + c.to_string() +
                             " after division by " + divisor.to_string());
    }
  }
  return quotient;
}

}  // namespace degen
