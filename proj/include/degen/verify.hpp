#ifndef DEGEN_VERIFY_HPP
#define DEGEN_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degen/poly.hpp"

namespace degen {

/// Parameter bounds for a check. Unset fields are not used by the check.
struct Ranges {
  std::optional<int> n_max;
  std::optional<int> m_max;
  std::optional<int> k_max;

  friend bool operator==(const Ranges&, const Ranges&) = default;
};

struct Counterexample {
  /// Parameter values in scan order, e.g. {{"n", 3}, {"k", 1}}.
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

enum class CheckStatus { pending, pass, fail };
std::string_view to_string(CheckStatus status);

/// Outcome of one named identity over its parameter range. A failing check
/// always carries a counterexample; a passing one never does.
struct CheckSpec {
  std::string id;
  std::string anchor;
  Ranges range;
  CheckStatus status = CheckStatus::pending;
  std::optional<Counterexample> counterexample;

  friend bool operator==(const CheckSpec&, const CheckSpec&) = default;
};

/// exact compares canonical polynomials. smoke compares values at five fixed
/// rational lambdas and is not a proof.
enum class CompareMode { exact, smoke };
std::string_view to_string(CompareMode mode);

class Comparator {
 public:
  explicit Comparator(CompareMode mode) : mode_(mode) {}

  CompareMode mode() const { return mode_; }
  bool equal(const LambdaPoly& lhs, const LambdaPoly& rhs) const;
  bool equal(const XLPoly& lhs, const XLPoly& rhs) const;

 private:
  CompareMode mode_;
};

using CheckFn = std::function<std::optional<Counterexample>(const Ranges&, const Comparator&)>;

struct CheckDef {
  std::string id;
  std::string anchor;
  Ranges defaults;
  /// Hard upper bound on n_max for checks backed by enumeration.
  std::optional<int> n_cap;
  CheckFn run;
};

/// Every identity check, in canonical report order.
const std::vector<CheckDef>& registry();
std::vector<std::string> check_ids();

class UnknownCheckError : public std::invalid_argument {
 public:
  UnknownCheckError(std::string id, std::vector<std::string> valid);
  const std::string& id() const { return id_; }
  const std::vector<std::string>& valid_ids() const { return valid_; }

 private:
  std::string id_;
  std::vector<std::string> valid_;
};

/// Defaults overlaid with the overrides that apply to this check, clamped
/// to its cap.
Ranges effective_ranges(const CheckDef& check, const Ranges& overrides);

CheckSpec run_check(const CheckDef& check, const Ranges& overrides, CompareMode mode);

struct SuiteOptions {
  std::vector<std::string> selection;  // empty selects every check
  Ranges overrides;
  CompareMode mode = CompareMode::exact;
  unsigned jobs = 1;
};

/// Runs the selected checks and returns results in registry order,
/// independent of selection order and of jobs. Throws UnknownCheckError.
std::vector<CheckSpec> run_suite(const SuiteOptions& options);

bool all_passed(const std::vector<CheckSpec>& results);

/// Scans 0 <= n <= n_max, k_lo(n) <= k <= k_hi(n) in lexicographic order and
/// returns the first (n, k) where lhs and rhs disagree.
std::optional<Counterexample> scan_nk(
    int n_min, int n_max, const std::function<int(int)>& k_lo, const std::function<int(int)>& k_hi,
    const std::function<LambdaPoly(int, int)>& lhs, const std::function<LambdaPoly(int, int)>& rhs,
    const Comparator& cmp);

}  // namespace degen

#endif  // DEGEN_VERIFY_HPP
