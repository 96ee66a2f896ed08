#ifndef DEGEN_SEQUENCES_HPP
#define DEGEN_SEQUENCES_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "degen/egf.hpp"
#include "degen/poly.hpp"

namespace degen {

// ---------------------------------------------------------------------------
// Eulerian triangle and polynomials
// ---------------------------------------------------------------------------

/// How an Eulerian table is computed.
///   explicit_sum  alternating sum of degenerate falling factorials
///   recursion     two-term recursion in (n, k)
///   gf_recursion  polynomial recursion derived from the generating function
enum class EulerianRoute { explicit_sum, recursion, gf_recursion };

std::string_view to_string(EulerianRoute route);
std::optional<EulerianRoute> parse_eulerian_route(std::string_view text);

/// Triangle of degenerate Eulerian numbers A_lambda(n, k), 0 <= k <= n <= max_n.
class EulerianTable {
 public:
  EulerianTable(int max_n, EulerianRoute route);

  int max_n() const { return max_n_; }
  EulerianRoute route() const { return route_; }

  /// Zero for k < 0 or k > n; throws std::out_of_range for n outside [0, max_n].
  const LambdaPoly& at(int n, int k) const;
  const std::vector<LambdaPoly>& row(int n) const;

  /// A_{n,lambda}(x) assembled from row n.
  XLPoly polynomial(int n) const;

 private:
  int max_n_;
  EulerianRoute route_;
  std::vector<std::vector<LambdaPoly>> rows_;
};

/// sum_{i=0}^{k} C(n+1, i) (-1)^i (k-i+1)_{n,lambda}. Returns A_lambda(n,k) for
/// k <= n; the sum itself vanishes for k > n. Negative k gives zero.
LambdaPoly eulerian_explicit(int n, int k);

/// Two-term recursion, memoized over the triangle below (n, k).
LambdaPoly eulerian_recursive(int n, int k);

/// A_{n,lambda}(x) via the chosen route.
XLPoly eulerian_poly(int n, EulerianRoute route);

/// A_{0..max_n,lambda}(x) by the generating-function polynomial recursion.
std::vector<XLPoly> eulerian_polys_gf(int max_n);

/// A_lambda(n,k) with lambda replaced by -lambda.
LambdaPoly eulerian_negated(int n, int k);

enum class MinusOneRoute { direct, bernoulli };

/// A_{n,lambda}(-1), either by evaluating the polynomial or from the
/// degenerate Bernoulli numbers at lambda and lambda/2.
LambdaPoly eulerian_at_minus_one(int n, MinusOneRoute route);

/// Generating-function series S(t) = sum A_{n,lambda}(x) t^n/n! checked
/// against its closed form; see gf_residual(span).
Egf<XLPoly> gf_residual(int n_max, EulerianRoute route = EulerianRoute::explicit_sum);

// ---------------------------------------------------------------------------
// Degenerate Bernoulli numbers and polynomials
// ---------------------------------------------------------------------------

LambdaPoly bernoulli_number(int n);

/// beta_{n,lambda}(x) = sum_k C(n,k) beta_{k,lambda} (x)_{n-k,lambda}.
XLPoly bernoulli_polynomial(int n);

// ---------------------------------------------------------------------------
// Degenerate Stirling numbers
// ---------------------------------------------------------------------------

/// Explicit alternating sum; zero for k > n.
LambdaPoly stirling2_degenerate(int n, int k);

/// Second-kind numbers recovered from the Eulerian triangle at -lambda.
LambdaPoly stirling2_from_eulerian(int n, int k);

/// Row n of the first-kind numbers: (x)_n = sum_k S_{1,lambda}(n,k) (x)_{k,lambda}.
std::vector<LambdaPoly> stirling1_row(int n);
LambdaPoly stirling1_degenerate(int n, int k);

/// A_lambda(n, k-1) from the second-kind numbers, 1 <= k <= n.
LambdaPoly eulerian_from_stirling2(int n, int k);

// ---------------------------------------------------------------------------
// Power sums and Worpitzky
// ---------------------------------------------------------------------------

enum class PowerSumRoute { direct, eulerian, bernoulli };

std::string_view to_string(PowerSumRoute route);
std::optional<PowerSumRoute> parse_power_sum_route(std::string_view text);

/// sum_{k=1}^{m} (k)_{n,lambda} for m, n >= 1.
LambdaPoly power_sum(int m, int n, PowerSumRoute route);

/// sum_{k=0}^{n} C(x+k, n) A_{-lambda}(n,k); equals (x)_{n,lambda}.
XLPoly worpitzky_lhs(int n);

}  // namespace degen

#endif  // DEGEN_SEQUENCES_HPP
