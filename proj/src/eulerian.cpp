#include <stdexcept>
#include <string>

#include "degen/algebra.hpp"
#include "degen/sequences.hpp"

namespace degen {

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": n must be nonnegative");
}

// (c)_{n,lambda} for c = 0..count-1, shared across one row of explicit sums.
std::vector<LambdaPoly> constant_falling_factorials(int n, int count) {
  std::vector<LambdaPoly> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) {
    out.push_back(falling_factorial_degenerate(Rational(c), static_cast<unsigned>(n)));
  }
  return out;
}

LambdaPoly explicit_sum(int n, int k, const std::vector<LambdaPoly>& falling) {
  LambdaPoly acc;
  for (int i = 0; i <= k; ++i) {
    const Rational c = binomial(n + 1, i);
    if (c.is_zero()) continue;
    const LambdaPoly term = falling[static_cast<std::size_t>(k - i + 1)].scaled(c);
    if (i % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

std::vector<std::vector<LambdaPoly>> explicit_rows(int max_n) {
  std::vector<std::vector<LambdaPoly>> rows;
  for (int n = 0; n <= max_n; ++n) {
    const auto falling = constant_falling_factorials(n, n + 2);
    std::vector<LambdaPoly> row;
    for (int k = 0; k <= n; ++k) row.push_back(explicit_sum(n, k, falling));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<LambdaPoly>> recursion_rows(int max_n) {
  std::vector<std::vector<LambdaPoly>> rows;
  rows.push_back({LambdaPoly(Rational(1))});
  const LambdaPoly lambda = lambda_var();
  for (int n = 1; n <= max_n; ++n) {
    const auto& prev = rows.back();
    auto prev_at = [&](int k) -> LambdaPoly {
      return (k < 0 || k > n - 1) ? LambdaPoly{} : prev[static_cast<std::size_t>(k)];
    };
    const LambdaPoly spread = lambda.scaled(Rational(n - 1));
    std::vector<LambdaPoly> row;
    row.reserve(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
      const LambdaPoly left = LambdaPoly(Rational(n - k)) + spread;
      const LambdaPoly right = LambdaPoly(Rational(k + 1)) - spread;
      row.push_back(left * prev_at(k - 1) + right * prev_at(k));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<LambdaPoly>> gf_rows(int max_n) {
  std::vector<std::vector<LambdaPoly>> rows;
  for (const auto& poly : eulerian_polys_gf(max_n)) {
    const int n = static_cast<int>(rows.size());
    std::vector<LambdaPoly> row;
    for (int k = 0; k <= n; ++k) row.push_back(poly.coeff(static_cast<std::size_t>(k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string_view to_string(EulerianRoute route) {
  switch (route) {
    case EulerianRoute::explicit_sum:
      return "explicit";
    case EulerianRoute::recursion:
      return "recursion";
    case EulerianRoute::gf_recursion:
      return "gf-recursion";
  }
  return "unknown";
}

std::optional<EulerianRoute> parse_eulerian_route(std::string_view text) {
  if (text == "explicit") return EulerianRoute::explicit_sum;
  if (text == "recursion") return EulerianRoute::recursion;
  if (text == "gf-recursion") return EulerianRoute::gf_recursion;
  return std::nullopt;
}

EulerianTable::EulerianTable(int max_n, EulerianRoute route) : max_n_(max_n), route_(route) {
  require_nonnegative(max_n, "EulerianTable");
  switch (route) {
    case EulerianRoute::explicit_sum:
      rows_ = explicit_rows(max_n);
      break;
    case EulerianRoute::recursion:
      rows_ = recursion_rows(max_n);
      break;
    case EulerianRoute::gf_recursion:
      rows_ = gf_rows(max_n);
      break;
  }
}

const LambdaPoly& EulerianTable::at(int n, int k) const {
  static const LambdaPoly zero;
  const auto& r = row(n);
  if (k < 0 || k > n) return zero;
  return r[static_cast<std::size_t>(k)];
}

const std::vector<LambdaPoly>& EulerianTable::row(int n) const {
  if (n < 0 || n > max_n_) {
    throw std::out_of_range("EulerianTable row " + std::to_string(n) + " outside [0, " +
                            std::to_string(max_n_) + "]");
  }
  return rows_[static_cast<std::size_t>(n)];
}

XLPoly EulerianTable::polynomial(int n) const { return XLPoly(row(n)); }

LambdaPoly eulerian_explicit(int n, int k) {
  require_nonnegative(n, "eulerian_explicit");
  if (k < 0) return {};
  return explicit_sum(n, k, constant_falling_factorials(n, k + 2));
}

LambdaPoly eulerian_recursive(int n, int k) {
  require_nonnegative(n, "eulerian_recursive");
  if (k < 0 || k > n) return {};
  return recursion_rows(n)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::vector<XLPoly> eulerian_polys_gf(int max_n) {
  require_nonnegative(max_n, "eulerian_polys_gf");
  const XLPoly x_minus_one = x_var() - XLPoly(LambdaPoly(Rational(1)));
  // (x-1)^j for j = 0..max_n-1
  std::vector<XLPoly> shifted_powers{XLPoly(LambdaPoly(Rational(1)))};
  for (int j = 1; j < max_n; ++j) shifted_powers.push_back(shifted_powers.back() * x_minus_one);

  std::vector<XLPoly> polys{XLPoly(LambdaPoly(Rational(1)))};
  for (int n = 1; n <= max_n; ++n) {
    XLPoly acc;
    for (int i = 0; i < n; ++i) {
      const LambdaPoly unit =
          falling_factorial_degenerate(Rational(1), static_cast<unsigned>(n - i), LambdaSign::minus)
              .scaled(binomial(n, i));
      acc += polys[static_cast<std::size_t>(i)] * shifted_powers[static_cast<std::size_t>(n - i - 1)] *
             unit;
    }
    polys.push_back(std::move(acc));
  }
  return polys;
}

XLPoly eulerian_poly(int n, EulerianRoute route) {
  require_nonnegative(n, "eulerian_poly");
  if (route == EulerianRoute::gf_recursion) return eulerian_polys_gf(n).back();
  return EulerianTable(n, route).polynomial(n);
}

LambdaPoly eulerian_negated(int n, int k) {
  return substitute_lambda(eulerian_explicit(n, k), Rational(-1));
}

LambdaPoly eulerian_at_minus_one(int n, MinusOneRoute route) {
  require_nonnegative(n, "eulerian_at_minus_one");
  if (route == MinusOneRoute::direct) {
    return eval_x(eulerian_poly(n, EulerianRoute::gf_recursion), Rational(-1));
  }
  if (n == 0) return LambdaPoly(Rational(1));
  const LambdaPoly beta = bernoulli_number(n + 1);
  const Rational two_pow = Rational(2).pow(static_cast<unsigned>(n + 1));
  const LambdaPoly inner = substitute_lambda(beta, Rational(1, 2)).scaled(two_pow) - beta;
  return divide_integral(inner.scaled(two_pow), Rational(n + 1));
}

Egf<XLPoly> gf_residual(int n_max, EulerianRoute route) {
  require_nonnegative(n_max, "gf_residual");
  std::vector<XLPoly> taps;
  if (route == EulerianRoute::gf_recursion) {
    taps = eulerian_polys_gf(n_max);
  } else {
    const EulerianTable table(n_max, route);
    for (int n = 0; n <= n_max; ++n) taps.push_back(table.polynomial(n));
  }
  return gf_residual(std::span<const XLPoly>(taps));
}

}  // namespace degen
