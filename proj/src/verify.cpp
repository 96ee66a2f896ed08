#include "degen/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

#include "degen/algebra.hpp"
#include "degen/egf.hpp"
#include "degen/format.hpp"
#include "degen/oracles.hpp"
#include "degen/sequences.hpp"

namespace degen {

namespace {

const std::array<Rational, 5>& smoke_points() {
  static const std::array<Rational, 5> points{Rational(-3, 2), Rational(-1, 3), Rational(1, 5),
                                              Rational(2, 3), Rational(7, 2)};
  return points;
}

using Params = std::vector<std::pair<std::string, std::int64_t>>;

Counterexample mismatch(Params params, const LambdaPoly& lhs, const LambdaPoly& rhs) {
  return {std::move(params), to_text(lhs), to_text(rhs)};
}

Counterexample mismatch(Params params, const XLPoly& lhs, const XLPoly& rhs) {
  return {std::move(params), to_text(lhs), to_text(rhs)};
}

LambdaPoly constant(std::int64_t value) { return LambdaPoly(Rational(value)); }

int always_zero(int) { return 0; }
int diagonal(int n) { return n; }

// --- individual checks -----------------------------------------------------

std::optional<Counterexample> check_gf_residual(const Ranges& r, const Comparator& cmp) {
  const auto residual = gf_residual(*r.n_max);
  for (std::size_t n = 0; n <= residual.order(); ++n) {
    if (!cmp.equal(residual.tap(n), XLPoly{})) {
      return mismatch({{"n", static_cast<std::int64_t>(n)}}, residual.tap(n), XLPoly{});
    }
  }
  return std::nullopt;
}

// Coefficient of x^k in (1-x)^{n+1} sum_{j<=k} (j+1)_{n,lambda} x^j.
LambdaPoly defining_series_coeff(int n, int k) {
  XLPoly series;
  for (int j = 0; j <= k; ++j) {
    series += XLPoly::monomial(falling_factorial_degenerate(Rational(j + 1), static_cast<unsigned>(n)),
                               static_cast<std::size_t>(j));
  }
  const XLPoly one_minus_x = XLPoly(constant(1)) - x_var();
  return (series * pow(one_minus_x, static_cast<unsigned>(n + 1))).coeff(static_cast<std::size_t>(k));
}

std::optional<Counterexample> check_explicit_sum(const Ranges& r, const Comparator& cmp) {
  return scan_nk(0, *r.n_max, always_zero, diagonal, eulerian_explicit, defining_series_coeff, cmp);
}

std::optional<Counterexample> check_vanishing(const Ranges& r, const Comparator& cmp) {
  return scan_nk(
      0, *r.n_max, [](int n) { return n + 1; }, [](int n) { return n + 3; }, eulerian_explicit,
      [](int, int) { return LambdaPoly{}; }, cmp);
}

std::optional<Counterexample> check_poly_recursion(const Ranges& r, const Comparator& cmp) {
  const EulerianTable table(*r.n_max, EulerianRoute::explicit_sum);
  const auto polys = eulerian_polys_gf(*r.n_max);
  for (int n = 0; n <= *r.n_max; ++n) {
    const XLPoly assembled = table.polynomial(n);
    if (!cmp.equal(assembled, polys[static_cast<std::size_t>(n)])) {
      return mismatch({{"n", n}}, assembled, polys[static_cast<std::size_t>(n)]);
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> check_minus_one(const Ranges& r, const Comparator& cmp) {
  for (int n = 0; n <= *r.n_max; ++n) {
    const LambdaPoly direct = eulerian_at_minus_one(n, MinusOneRoute::direct);
    const LambdaPoly via_bernoulli = eulerian_at_minus_one(n, MinusOneRoute::bernoulli);
    if (!cmp.equal(direct, via_bernoulli)) return mismatch({{"n", n}}, direct, via_bernoulli);
  }
  return std::nullopt;
}

std::optional<Counterexample> check_alternating_sum(const Ranges& r, const Comparator& cmp) {
  const EulerianTable table(*r.n_max, EulerianRoute::recursion);
  for (int n = 1; n <= *r.n_max; ++n) {
    LambdaPoly alternating;
    for (int k = 0; k <= n; ++k) {
      if (k % 2 == 0) {
        alternating += table.at(n, k);
      } else {
        alternating -= table.at(n, k);
      }
    }
    const LambdaPoly via_bernoulli = eulerian_at_minus_one(n, MinusOneRoute::bernoulli);
    if (!cmp.equal(alternating, via_bernoulli)) return mismatch({{"n", n}}, alternating, via_bernoulli);
  }
  return std::nullopt;
}

std::optional<Counterexample> check_two_term_recursion(const Ranges& r, const Comparator& cmp) {
  const EulerianTable explicit_table(*r.n_max, EulerianRoute::explicit_sum);
  const EulerianTable recursion_table(*r.n_max, EulerianRoute::recursion);
  return scan_nk(
      0, *r.n_max, always_zero, diagonal,
      [&](int n, int k) { return explicit_table.at(n, k); },
      [&](int n, int k) { return recursion_table.at(n, k); }, cmp);
}

std::optional<Counterexample> check_worpitzky(const Ranges& r, const Comparator& cmp) {
  for (int n = 0; n <= *r.n_max; ++n) {
    const XLPoly lhs = worpitzky_lhs(n);
    const XLPoly rhs = falling_factorial_degenerate(x_var(), static_cast<unsigned>(n));
    if (!cmp.equal(lhs, rhs)) return mismatch({{"n", n}}, lhs, rhs);
  }
  return std::nullopt;
}

std::optional<Counterexample> check_stirling2_from_eulerian(const Ranges& r, const Comparator& cmp) {
  return scan_nk(0, *r.n_max, always_zero, diagonal, stirling2_from_eulerian, stirling2_degenerate,
                 cmp);
}

std::optional<Counterexample> check_power_sums(const Ranges& r, const Comparator& cmp,
                                               PowerSumRoute lhs_route, PowerSumRoute rhs_route) {
  for (int n = 1; n <= *r.n_max; ++n) {
    for (int m = 1; m <= *r.m_max; ++m) {
      const LambdaPoly lhs = power_sum(m, n, lhs_route);
      const LambdaPoly rhs = power_sum(m, n, rhs_route);
      if (!cmp.equal(lhs, rhs)) return mismatch({{"n", n}, {"m", m}}, lhs, rhs);
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> check_eulerian_from_stirling2(const Ranges& r, const Comparator& cmp) {
  return scan_nk(
      1, *r.n_max, [](int) { return 1; }, diagonal, eulerian_from_stirling2,
      [](int n, int k) { return eulerian_explicit(n, k - 1); }, cmp);
}

std::optional<Counterexample> check_series_coefficients(const Ranges& r, const Comparator& cmp) {
  const EulerianTable table(*r.n_max, EulerianRoute::explicit_sum);
  for (int n = 0; n <= *r.n_max; ++n) {
    for (int k = 0; k <= *r.k_max; ++k) {
      LambdaPoly lhs;
      for (int i = 0; i <= std::min(k, n); ++i) lhs += table.at(n, i).scaled(binomial(n + k - i, n));
      const LambdaPoly rhs = falling_factorial_degenerate(Rational(k + 1), static_cast<unsigned>(n));
      if (!cmp.equal(lhs, rhs)) return mismatch({{"n", n}, {"k", k}}, lhs, rhs);
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> check_stirling2_expansion(const Ranges& r, const Comparator& cmp) {
  for (int n = 0; n <= *r.n_max; ++n) {
    XLPoly lhs;
    for (int k = 0; k <= n; ++k) {
      lhs += binomial_poly(0, static_cast<unsigned>(k)) * stirling2_degenerate(n, k).scaled(factorial(k));
    }
    const XLPoly rhs = falling_factorial_degenerate(x_var(), static_cast<unsigned>(n));
    if (!cmp.equal(lhs, rhs)) return mismatch({{"n", n}}, lhs, rhs);
  }
  return std::nullopt;
}

std::optional<Counterexample> check_stirling1_basis(const Ranges& r, const Comparator& cmp) {
  for (int n = 0; n <= *r.n_max; ++n) {
    const auto row = stirling1_row(n);
    XLPoly lhs;
    for (int k = 0; k <= n; ++k) {
      lhs += falling_factorial_degenerate(x_var(), static_cast<unsigned>(k)) *
             row[static_cast<std::size_t>(k)];
    }
    const XLPoly rhs = falling_factorial_classical(static_cast<unsigned>(n));
    if (!cmp.equal(lhs, rhs)) return mismatch({{"n", n}}, lhs, rhs);
  }
  return std::nullopt;
}

std::optional<Counterexample> check_eulerian_structure(const Ranges& r, const Comparator& cmp) {
  const EulerianTable table(*r.n_max, EulerianRoute::recursion);
  for (int n = 0; n <= *r.n_max; ++n) {
    LambdaPoly row_sum;
    for (const auto& entry : table.row(n)) row_sum += entry;
    const LambdaPoly expected(factorial(n));
    if (!cmp.equal(row_sum, expected)) return mismatch({{"n", n}}, row_sum, expected);
    if (n == 0) continue;
    if (!cmp.equal(table.at(n, n), LambdaPoly{})) {
      return mismatch({{"n", n}, {"k", n}}, table.at(n, n), LambdaPoly{});
    }
    for (int k = 0; k <= n; ++k) {
      if (table.at(n, k).degree() > n - 1) {
        return Counterexample{{{"n", n}, {"k", k}},
                              "deg_λ " + std::to_string(table.at(n, k).degree()),
                              "deg_λ <= " + std::to_string(n - 1)};
      }
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> check_bernoulli_golden(const Ranges&, const Comparator& cmp) {
  const std::array<LambdaPoly, 4> golden{
      constant(1),
      LambdaPoly(std::vector<Rational>{Rational(-1, 2), Rational(1, 2)}),
      LambdaPoly(std::vector<Rational>{Rational(1, 6), Rational(0), Rational(-1, 6)}),
      LambdaPoly(std::vector<Rational>{Rational(0), Rational(-1, 4), Rational(0), Rational(1, 4)}),
  };
  const auto beta = bernoulli_taps(3);
  for (int n = 0; n <= 3; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (!cmp.equal(beta[i], golden[i])) return mismatch({{"n", n}}, beta[i], golden[i]);
  }
  return std::nullopt;
}

std::optional<Counterexample> check_bernoulli_lambda_one(const Ranges& r, const Comparator&) {
  // This is a statement about a single evaluation; both modes do it exactly.
  const auto beta = bernoulli_taps(static_cast<std::size_t>(*r.n_max));
  for (int n = 1; n <= *r.n_max; ++n) {
    const Rational value = eval_lambda(beta[static_cast<std::size_t>(n)], Rational(1));
    if (!value.is_zero()) return Counterexample{{{"n", n}}, value.to_string(), "0"};
  }
  return std::nullopt;
}

std::optional<Counterexample> check_permutation_oracle(const Ranges& r, const Comparator&) {
  const EulerianTable table(*r.n_max, EulerianRoute::explicit_sum);
  for (int n = 1; n <= *r.n_max; ++n) {
    const auto descents = descent_distribution(n);
    const auto excedances = excedance_distribution(n);
    const auto ascents = ascent_distribution(n);
    for (int k = 0; k <= n; ++k) {
      const Rational value = eval_lambda(table.at(n, k), Rational(0));
      const Rational expected(k < n ? static_cast<std::int64_t>(descents.counts[static_cast<std::size_t>(k)]) : 0);
      const bool ok = value == expected && (k == n || (descents.counts[static_cast<std::size_t>(k)] ==
                                                           excedances.counts[static_cast<std::size_t>(k)] &&
                                                       descents.counts[static_cast<std::size_t>(k)] ==
                                                           ascents.counts[static_cast<std::size_t>(k)]));
      if (!ok) {
        std::string rhs = expected.to_string();
        if (k < n) {
          rhs += " (excedances " + std::to_string(excedances.counts[static_cast<std::size_t>(k)]) +
                 ", ascents " + std::to_string(ascents.counts[static_cast<std::size_t>(k)]) + ")";
        }
        return Counterexample{{{"n", n}, {"k", k}}, value.to_string(), rhs};
      }
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> check_classical_limits(const Ranges& r, const Comparator&) {
  const int n_max = *r.n_max;
  const auto classical = classical_triangles(n_max);
  const EulerianTable table(n_max, EulerianRoute::recursion);
  const auto beta = bernoulli_taps(static_cast<std::size_t>(n_max));
  for (int n = 0; n <= n_max; ++n) {
    const auto s1 = stirling1_row(n);
    const auto ni = static_cast<std::size_t>(n);
    for (int k = 0; k <= n; ++k) {
      const auto ki = static_cast<std::size_t>(k);
      const std::array<std::pair<Rational, std::int64_t>, 3> pairs{
          std::pair{eval_lambda(table.at(n, k), Rational(0)), classical.eulerian[ni][ki]},
          std::pair{eval_lambda(s1[ki], Rational(0)), classical.stirling1[ni][ki]},
          std::pair{eval_lambda(stirling2_degenerate(n, k), Rational(0)), classical.stirling2[ni][ki]},
      };
      for (const auto& [value, expected] : pairs) {
        if (value != Rational(expected)) {
          return Counterexample{{{"n", n}, {"k", k}}, value.to_string(), std::to_string(expected)};
        }
      }
    }
    const Rational b = eval_lambda(beta[ni], Rational(0));
    if (b != classical.bernoulli[ni]) {
      return Counterexample{{{"n", n}}, b.to_string(), classical.bernoulli[ni].to_string()};
    }
  }
  return std::nullopt;
}

std::vector<CheckDef> build_registry() {
  using std::nullopt;
  auto power = [](PowerSumRoute a, PowerSumRoute b) {
    return [a, b](const Ranges& r, const Comparator& cmp) { return check_power_sums(r, cmp, a, b); };
  };
  return {
      {"prop-2.1-gf-residual", "(x-1)/(x - e_{-λ}((x-1)t)) = sum_n A_{n,λ}(x) t^n/n!, checked as S(t)(x - e_{-λ}((x-1)t)) - (x-1) = 0",
       {12, nullopt, nullopt}, nullopt, check_gf_residual},
      {"thm-2.2-explicit", "A_λ(n,k) = sum_{i<=k} C(n+1,i)(-1)^i (k-i+1)_{n,λ} = [x^k] (1-x)^{n+1} sum_j (j+1)_{n,λ} x^j",
       {12, nullopt, nullopt}, nullopt, check_explicit_sum},
      {"thm-2.2-vanishing", "sum_{i<=k} C(n+1,i)(-1)^i (k-i+1)_{n,λ} = 0 for n < k <= n+3",
       {15, nullopt, nullopt}, nullopt, check_vanishing},
      {"thm-2.3-poly-recursion", "A_{n,λ}(x) = sum_{i<n} C(n,i) A_{i,λ}(x) (1)_{n-i,-λ} (x-1)^{n-i-1}",
       {20, nullopt, nullopt}, nullopt, check_poly_recursion},
      {"thm-2.4-minus-one", "A_{n,λ}(-1) = 2^{n+1}(2^{n+1} β_{n+1,λ/2} - β_{n+1,λ})/(n+1)",
       {15, nullopt, nullopt}, nullopt, check_minus_one},
      {"cor-2.5-alternating-sum", "sum_k (-1)^k A_λ(n,k) = 2^{n+1}(2^{n+1} β_{n+1,λ/2} - β_{n+1,λ})/(n+1)",
       {15, nullopt, nullopt}, nullopt, check_alternating_sum},
      {"thm-2.6-recursion", "A_λ(n,k) = ((n-k)+(n-1)λ) A_λ(n-1,k-1) + (k+1-(n-1)λ) A_λ(n-1,k)",
       {20, nullopt, nullopt}, nullopt, check_two_term_recursion},
      {"thm-2.7-worpitzky", "sum_k C(x+k,n) A_{-λ}(n,k) = (x)_{n,λ}",
       {15, nullopt, nullopt}, nullopt, check_worpitzky},
      {"thm-2.8-stirling2-from-eulerian", "{n,k}_λ = (1/k!) sum_j A_{-λ}(n,j) C(j,n-k)",
       {15, nullopt, nullopt}, nullopt, check_stirling2_from_eulerian},
      {"thm-2.9-power-sum-eulerian", "sum_{k=1}^m (k)_{n,λ} = sum_j A_{-λ}(n,j) C(m+j+1,n+1)",
       {10, 20, nullopt}, nullopt, power(PowerSumRoute::direct, PowerSumRoute::eulerian)},
      {"eq-43-power-sum-bernoulli", "sum_{k=1}^m (k)_{n,λ} = (β_{n+1,λ}(m+1) - β_{n+1,λ})/(n+1)",
       {10, 20, nullopt}, nullopt, power(PowerSumRoute::direct, PowerSumRoute::bernoulli)},
      {"thm-2.10-eulerian-bernoulli", "sum_j A_{-λ}(n,j) C(m+j+1,n+1) = (β_{n+1,λ}(m+1) - β_{n+1,λ})/(n+1)",
       {10, 20, nullopt}, nullopt, power(PowerSumRoute::eulerian, PowerSumRoute::bernoulli)},
      {"thm-2.11-eulerian-from-stirling2", "A_λ(n,k-1) = (-1)^k sum_{j<=k} (-1)^j C(n-j,n-k) j! {n,j}_λ",
       {15, nullopt, nullopt}, nullopt, check_eulerian_from_stirling2},
      {"eq-19-coefficients", "sum_{i<=min(k,n)} A_λ(n,i) C(n+k-i,n) = (k+1)_{n,λ}",
       {10, nullopt, 15}, nullopt, check_series_coefficients},
      {"eq-38-stirling2-expansion", "(x)_{n,λ} = sum_k k! {n,k}_λ C(x,k)",
       {12, nullopt, nullopt}, nullopt, check_stirling2_expansion},
      {"eq-16-stirling1-basis", "(x)_n = sum_k S_{1,λ}(n,k) (x)_{k,λ}",
       {12, nullopt, nullopt}, nullopt, check_stirling1_basis},
      {"eulerian-structure", "sum_k A_λ(n,k) = n!, A_λ(n,n) = 0 and deg_λ A_λ(n,k) <= n-1 for n >= 1",
       {20, nullopt, nullopt}, nullopt, check_eulerian_structure},
      {"bernoulli-golden", "β_{0..3,λ} = 1, -1/2+λ/2, 1/6-λ^2/6, -λ/4+λ^3/4",
       {3, nullopt, nullopt}, 3, check_bernoulli_golden},
      {"bernoulli-lambda1-vanishing", "β_{n,λ} at λ=1 is 0 for n >= 1",
       {12, nullopt, nullopt}, nullopt, check_bernoulli_lambda_one},
      {"oracle-lambda0-permutations", "A_λ(n,k) at λ=0 counts permutations by descents, excedances and ascents",
       {7, nullopt, nullopt}, kMaxEnumeratedN, check_permutation_oracle},
      {"oracle-lambda0-classical", "λ=0 limits match classical Eulerian, Stirling and Bernoulli triangles",
       {20, nullopt, nullopt}, kMaxClassicalN, check_classical_limits},
  };
}

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pending:
      return "pending";
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
  }
  return "unknown";
}

std::string_view to_string(CompareMode mode) {
  return mode == CompareMode::exact ? "exact" : "smoke";
}

bool Comparator::equal(const LambdaPoly& lhs, const LambdaPoly& rhs) const {
  if (mode_ == CompareMode::exact) return lhs == rhs;
  return std::all_of(smoke_points().begin(), smoke_points().end(),
                     [&](const Rational& v) { return lhs.eval(v) == rhs.eval(v); });
}

bool Comparator::equal(const XLPoly& lhs, const XLPoly& rhs) const {
  if (mode_ == CompareMode::exact) return lhs == rhs;
  return std::all_of(smoke_points().begin(), smoke_points().end(), [&](const Rational& v) {
    return eval_lambda(lhs, v) == eval_lambda(rhs, v);
  });
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> checks = build_registry();
  return checks;
}

std::vector<std::string> check_ids() {
  std::vector<std::string> ids;
  for (const auto& check : registry()) ids.push_back(check.id);
  return ids;
}

UnknownCheckError::UnknownCheckError(std::string id, std::vector<std::string> valid)
    : std::invalid_argument("unknown check id '" + id + "'"), id_(std::move(id)), valid_(std::move(valid)) {}

Ranges effective_ranges(const CheckDef& check, const Ranges& overrides) {
  Ranges out = check.defaults;
  if (out.n_max && overrides.n_max) out.n_max = overrides.n_max;
  if (out.m_max && overrides.m_max) out.m_max = overrides.m_max;
  if (out.k_max && overrides.k_max) out.k_max = overrides.k_max;
  if (out.n_max && check.n_cap) out.n_max = std::min(*out.n_max, *check.n_cap);
  return out;
}

CheckSpec run_check(const CheckDef& check, const Ranges& overrides, CompareMode mode) {
  CheckSpec spec{check.id, check.anchor, effective_ranges(check, overrides), CheckStatus::pending,
                 std::nullopt};
  const Comparator cmp(mode);
  spec.counterexample = check.run(spec.range, cmp);
  spec.status = spec.counterexample ? CheckStatus::fail : CheckStatus::pass;
  return spec;
}

std::vector<CheckSpec> run_suite(const SuiteOptions& options) {
  const auto& checks = registry();
  std::vector<bool> selected(checks.size(), options.selection.empty());
  for (const auto& id : options.selection) {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckDef& c) { return c.id == id; });
    if (it == checks.end()) throw UnknownCheckError(id, check_ids());
    selected[static_cast<std::size_t>(it - checks.begin())] = true;
  }

  std::vector<std::size_t> work;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (selected[i]) work.push_back(i);
  }

  std::vector<CheckSpec> results(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t slot = next++; slot < work.size(); slot = next++) {
      results[slot] = run_check(checks[work[slot]], options.overrides, options.mode);
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(work.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  return results;
}

bool all_passed(const std::vector<CheckSpec>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckSpec& s) { return s.status == CheckStatus::pass; });
}

std::optional<Counterexample> scan_nk(
    int n_min, int n_max, const std::function<int(int)>& k_lo, const std::function<int(int)>& k_hi,
    const std::function<LambdaPoly(int, int)>& lhs, const std::function<LambdaPoly(int, int)>& rhs,
    const Comparator& cmp) {
  for (int n = n_min; n <= n_max; ++n) {
    for (int k = k_lo(n); k <= k_hi(n); ++k) {
      const LambdaPoly a = lhs(n, k);
      const LambdaPoly b = rhs(n, k);
      if (!cmp.equal(a, b)) return mismatch({{"n", n}, {"k", k}}, a, b);
    }
  }
  return std::nullopt;
}

}  // namespace degen
