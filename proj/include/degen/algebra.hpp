#ifndef DEGEN_ALGEBRA_HPP
#define DEGEN_ALGEBRA_HPP

#include <cstdint>

#include "degen/poly.hpp"
#include "degen/rational.hpp"

namespace degen {

/// Which sign of lambda a degenerate construction uses.
enum class LambdaSign { plus, minus };

/// The polynomial lambda, or -lambda.
LambdaPoly lambda_var(LambdaSign sign = LambdaSign::plus);

/// The bivariate polynomial x.
XLPoly x_var();

/// (base)_{n,step} = base (base - step) (base - 2 step) ... (base - (n-1) step).
/// An empty product (n = 0) is 1.
LambdaPoly falling_factorial(const LambdaPoly& base, unsigned n, const LambdaPoly& step);
XLPoly falling_factorial(const XLPoly& base, unsigned n, const LambdaPoly& step);

/// (c)_{n,lambda} for a rational constant c, optionally with lambda negated.
LambdaPoly falling_factorial_degenerate(const Rational& base, unsigned n,
                                        LambdaSign sign = LambdaSign::plus);

/// (base)_{n,lambda} for a bivariate base; (x)_{n,lambda} when base is x.
XLPoly falling_factorial_degenerate(const XLPoly& base, unsigned n,
                                    LambdaSign sign = LambdaSign::plus);

/// Classical (x)_n = x (x - 1) ... (x - n + 1); lambda-free.
XLPoly falling_factorial_classical(unsigned n);

/// C(x + offset, n) as a polynomial in x with rational coefficients.
XLPoly binomial_poly(std::int64_t offset, unsigned n);

/// Replaces lambda by scale * lambda.
LambdaPoly substitute_lambda(const LambdaPoly& p, const Rational& scale);
XLPoly substitute_lambda(const XLPoly& p, const Rational& scale);

/// Evaluates at lambda = value. The bivariate form keeps x symbolic and
/// returns a polynomial whose coefficients are constants in lambda.
Rational eval_lambda(const LambdaPoly& p, const Rational& value);
XLPoly eval_lambda(const XLPoly& p, const Rational& value);

/// Evaluates at x = value, leaving lambda symbolic.
LambdaPoly eval_x(const XLPoly& p, const Rational& value);

/// Lambda-degree of a bivariate polynomial (max over x-coefficients; -1 if zero).
int lambda_degree(const XLPoly& p);

/// Divides by an integer and throws std::logic_error unless every resulting
/// coefficient is an integer. Used where the quotient is known to lie in Z[lambda].
LambdaPoly divide_integral(const LambdaPoly& p, const Rational& divisor);

}  // namespace degen

#endif  // DEGEN_ALGEBRA_HPP
