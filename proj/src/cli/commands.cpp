#include "degen/cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <ctime>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "degen/algebra.hpp"
#include "degen/cli/serialize.hpp"
#include "degen/format.hpp"
#include "degen/sequences.hpp"
#include "degen/verify.hpp"

namespace degen::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// lambda as given on the command line: symbolic, or an exact rational.
struct LambdaChoice {
  std::optional<Rational> value;

  static LambdaChoice parse(const std::string& text) {
    if (text == "symbolic") return {};
    try {
      return {Rational::parse(text)};
    } catch (const std::invalid_argument&) {
      throw UsageError("--lambda must be 'symbolic' or an exact rational p/q; got '" + text +
                       "' (floats are rejected)");
    }
  }

  std::string label() const { return value ? value->to_string() : "symbolic"; }

  json render(const LambdaPoly& p) const { return value ? to_json(p.eval(*value)) : to_json(p); }
  json render(const XLPoly& p) const { return value ? to_json(eval_lambda(p, *value)) : to_json(p); }

  std::string csv(const LambdaPoly& p) const {
    return value ? p.eval(*value).to_string() : to_csv_cell(p);
  }
  std::string csv(const XLPoly& p) const {
    return value ? to_csv_cell(eval_lambda(p, *value)) : to_csv_cell(p);
  }

  std::string text(const LambdaPoly& p) const { return value ? p.eval(*value).to_string() : to_text(p); }
  std::string text(const XLPoly& p) const { return to_text(value ? eval_lambda(p, *value) : p); }
};

Rational parse_exact(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + " must be an exact rational p/q; got '" + text + "' (floats are rejected)");
  }
}

int n_cap() {
  const char* env = std::getenv(kNCapEnvVar);
  if (env == nullptr || *env == '\0') return kDefaultNCap;
  try {
    std::size_t used = 0;
    const int cap = std::stoi(env, &used);
    if (used != std::char_traits<char>::length(env) || cap < 0) throw std::invalid_argument(env);
    return cap;
  } catch (const std::exception&) {
    throw UsageError(std::string(kNCapEnvVar) + " must be a nonnegative integer");
  }
}

void require_n_in_cap(int n, const char* flag) {
  const int cap = n_cap();
  if (n < 0 || n > cap) {
    throw UsageError(std::string(flag) + " must be in [0, " + std::to_string(cap) + "], got " +
                     std::to_string(n) + " (raise the cap with " + kNCapEnvVar + ")");
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json metadata(const std::string& route, bool timestamp) {
  json meta{{"tool", std::string(kToolName)}, {"version", std::string(kToolVersion)}, {"route", route}};
  if (timestamp) meta["generated_at"] = utc_timestamp();
  return meta;
}

// One emitted entry: (n, k) position plus the value in every output form.
struct Entry {
  int n;
  std::optional<int> k;
  json value;
  std::string csv;
  std::string text;
};

struct Document {
  std::string family;
  json parameters;
  std::string route;
  std::string lambda;
  json values;
  std::vector<Entry> entries;
  std::optional<int> m;
  std::optional<std::string> x;
};

void emit(const Document& doc, const std::string& format, bool human, bool timestamp, std::ostream& out) {
  if (human) {
    for (const auto& e : doc.entries) {
      out << doc.family << " n=" << e.n;
      if (e.k) out << " k=" << *e.k;
      if (doc.m) out << " m=" << *doc.m;
      if (doc.x) out << " x=" << *doc.x;
      out << ": " << e.text << '\n';
    }
    return;
  }
  if (format == "csv") {
    out << kDocumentCsvHeader << '\n';
    for (const auto& e : doc.entries) {
      out << doc.family << ',' << e.n << ',' << (e.k ? std::to_string(*e.k) : "") << ','
          << (doc.m ? std::to_string(*doc.m) : "") << ',' << csv_escape(doc.x.value_or("")) << ','
          << doc.route << ',' << doc.lambda << ',' << csv_escape(e.csv) << '\n';
    }
    return;
  }
  json j{{"family", doc.family},
         {"parameters", doc.parameters},
         {"values", doc.values},
         {"metadata", metadata(doc.route, timestamp)}};
  out << j.dump(2) << '\n';
}

template <class Value>
Entry make_entry(int n, std::optional<int> k, const Value& v, const LambdaChoice& lambda) {
  return {n, k, lambda.render(v), lambda.csv(v), lambda.text(v)};
}

// Appends a triangle of rows to the document.
void add_rows(Document& doc, const std::vector<std::vector<LambdaPoly>>& rows, const LambdaChoice& lambda) {
  doc.values = json::array();
  for (std::size_t n = 0; n < rows.size(); ++n) {
    json row = json::array();
    for (std::size_t k = 0; k < rows[n].size(); ++k) {
      auto entry = make_entry(static_cast<int>(n), static_cast<int>(k), rows[n][k], lambda);
      row.push_back(entry.value);
      doc.entries.push_back(std::move(entry));
    }
    doc.values.push_back(std::move(row));
  }
}

template <class Value>
void add_list(Document& doc, const std::vector<Value>& items, const LambdaChoice& lambda) {
  doc.values = json::array();
  for (std::size_t n = 0; n < items.size(); ++n) {
    auto entry = make_entry(static_cast<int>(n), std::nullopt, items[n], lambda);
    doc.values.push_back(entry.value);
    doc.entries.push_back(std::move(entry));
  }
}

Document build_table(const std::string& family, int n_max, const std::string& route_flag,
                     const LambdaChoice& lambda) {
  Document doc;
  doc.family = family;
  doc.lambda = lambda.label();

  auto require_route = [&](std::initializer_list<const char*> allowed, const char* fallback) {
    const std::string route = route_flag.empty() ? fallback : route_flag;
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return route == a; })) {
      std::string list;
      for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
      throw UsageError("route '" + route + "' is not valid for " + family + " (valid: " + list + ")");
    }
    return route;
  };

  if (family == "eulerian-number" || family == "eulerian-poly") {
    doc.route = require_route({"explicit", "recursion", "gf-recursion"}, "explicit");
    const EulerianTable table(n_max, *parse_eulerian_route(doc.route));
    if (family == "eulerian-number") {
      std::vector<std::vector<LambdaPoly>> rows;
      for (int n = 0; n <= n_max; ++n) rows.push_back(table.row(n));
      add_rows(doc, rows, lambda);
    } else {
      std::vector<XLPoly> polys;
      for (int n = 0; n <= n_max; ++n) polys.push_back(table.polynomial(n));
      add_list(doc, polys, lambda);
    }
  } else if (family == "bernoulli") {
    doc.route = require_route({"triangular"}, "triangular");
    add_list(doc, bernoulli_taps(static_cast<std::size_t>(n_max)), lambda);
  } else if (family == "stirling1") {
    doc.route = require_route({"basis-solve"}, "basis-solve");
    std::vector<std::vector<LambdaPoly>> rows;
    for (int n = 0; n <= n_max; ++n) rows.push_back(stirling1_row(n));
    add_rows(doc, rows, lambda);
  } else {
    doc.route = require_route({"explicit", "eulerian"}, "explicit");
    std::vector<std::vector<LambdaPoly>> rows;
    for (int n = 0; n <= n_max; ++n) {
      std::vector<LambdaPoly> row;
      for (int k = 0; k <= n; ++k) {
        row.push_back(doc.route == "explicit" ? stirling2_degenerate(n, k) : stirling2_from_eulerian(n, k));
      }
      rows.push_back(std::move(row));
    }
    add_rows(doc, rows, lambda);
  }
  doc.parameters = {{"n_max", n_max}, {"lambda", doc.lambda}, {"route", doc.route}};
  return doc;
}

int cmd_verify(const std::vector<std::string>& checks, const std::string& suite, const Ranges& overrides,
               const std::string& format, bool smoke, unsigned jobs, bool timestamp, std::ostream& out,
               std::ostream& err) {
  if (!suite.empty() && suite != "all") throw UsageError("--suite accepts only 'all'");
  SuiteOptions options;
  if (suite.empty()) options.selection = checks;
  options.overrides = overrides;
  options.mode = smoke ? CompareMode::smoke : CompareMode::exact;
  options.jobs = jobs;

  std::vector<CheckSpec> results;
  try {
    results = run_suite(options);
  } catch (const UnknownCheckError& e) {
    err << "error: " << e.what() << "\nvalid check ids:\n";
    for (const auto& id : e.valid_ids()) err << "  " << id << '\n';
    return kExitUsage;
  }

  if (format == "json") {
    json report = report_to_json(results, options.mode);
    if (timestamp) report["generated_at"] = utc_timestamp();
    out << report.dump(2) << '\n';
  } else if (format == "csv") {
    out << kReportCsvHeader << '\n';
    for (const auto& r : results) {
      auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
      std::string params;
      std::string lhs;
      std::string rhs;
      if (r.counterexample) {
        for (const auto& [name, value] : r.counterexample->parameters) {
          params += (params.empty() ? "" : ";") + name + "=" + std::to_string(value);
        }
        lhs = r.counterexample->lhs;
        rhs = r.counterexample->rhs;
      }
      out << r.id << ',' << to_string(r.status) << ',' << opt(r.range.n_max) << ',' << opt(r.range.m_max)
          << ',' << opt(r.range.k_max) << ',' << csv_escape(params) << ',' << csv_escape(lhs) << ','
          << csv_escape(rhs) << '\n';
    }
  } else {
    if (smoke) out << "mode: smoke (sampled at 5 lambda values, non-exhaustive)\n";
    for (const auto& r : results) {
      out << (r.status == CheckStatus::pass ? "PASS " : "FAIL ") << r.id;
      if (r.range.n_max) out << " n<=" << *r.range.n_max;
      if (r.range.m_max) out << " m<=" << *r.range.m_max;
      if (r.range.k_max) out << " k<=" << *r.range.k_max;
      out << '\n';
      if (r.counterexample) {
        out << "  at";
        for (const auto& [name, value] : r.counterexample->parameters) out << ' ' << name << '=' << value;
        out << "\n  lhs: " << r.counterexample->lhs << "\n  rhs: " << r.counterexample->rhs << '\n';
      }
    }
  }
  return all_passed(results) ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact degenerate Eulerian, Bernoulli and Stirling computations", std::string(kToolName)};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string format = "json";
  bool human = false;
  bool timestamp = false;
  std::string lambda_text = "symbolic";
  std::string route;

  auto* table = app.add_subcommand("table", "Emit a table of one sequence family");
  std::string family;
  int table_n_max = 0;
  table->add_option("family", family, "Sequence family")
      ->required()
      ->check(CLI::IsMember({"eulerian-number", "eulerian-poly", "bernoulli", "stirling1", "stirling2"}));
  table->add_option("--n-max", table_n_max, "Largest n")->required();
  table->add_option("--route", route, "Computation route");
  table->add_option("--lambda", lambda_text, "'symbolic' or an exact rational p/q");
  table->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  table->add_flag("--human", human, "Render polynomials as readable text");
  table->add_flag("--timestamp", timestamp, "Add a generation timestamp to the metadata");

  auto* eval = app.add_subcommand("eval", "Evaluate one quantity exactly");
  eval->require_subcommand(1);
  auto* powersum = eval->add_subcommand("powersum", "sum_{k=1}^{m} (k)_{n,lambda}");
  int ps_m = 0;
  int ps_n = 0;
  powersum->add_option("--m", ps_m, "Upper summation limit m >= 1")->required();
  powersum->add_option("--n", ps_n, "Order n >= 1")->required();
  auto* eulerian_at = eval->add_subcommand("eulerian-at", "A_{n,lambda}(x) at a rational x");
  std::string x_text;
  int ea_n = 0;
  eulerian_at->add_option("--x", x_text, "Exact rational x")->required();
  eulerian_at->add_option("--n", ea_n, "Order n >= 0")->required();
  for (auto* sub : {powersum, eulerian_at}) {
    sub->add_option("--lambda", lambda_text, "'symbolic' or an exact rational p/q");
    sub->add_option("--route", route, "Computation route");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--human", human, "Render as readable text");
    sub->add_flag("--timestamp", timestamp, "Add a generation timestamp to the metadata");
  }

  auto* verify = app.add_subcommand("verify", "Run identity checks");
  std::vector<std::string> checks;
  std::string suite;
  Ranges overrides;
  int n_max_override = -1;
  int m_max_override = -1;
  int k_max_override = -1;
  bool smoke = false;
  bool list = false;
  unsigned jobs = 1;
  std::string verify_format = "json";
  verify->add_option("--suite", suite, "'all' runs every check");
  verify->add_option("--check", checks, "Check id (repeatable)");
  verify->add_option("--n-max", n_max_override, "Override n_max")->check(CLI::NonNegativeNumber);
  verify->add_option("--m-max", m_max_override, "Override m_max")->check(CLI::PositiveNumber);
  verify->add_option("--k-max", k_max_override, "Override k_max")->check(CLI::NonNegativeNumber);
  verify->add_option("--format", verify_format, "Report format")->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--jobs", jobs, "Run checks on this many threads")->check(CLI::PositiveNumber);
  verify->add_flag("--smoke", smoke, "Compare at 5 sample lambdas instead of exactly (non-exhaustive)");
  verify->add_flag("--list", list, "List check ids and exit");
  verify->add_flag("--timestamp", timestamp, "Add a generation timestamp to the report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (table->parsed()) {
      require_n_in_cap(table_n_max, "--n-max");
      const auto lambda = LambdaChoice::parse(lambda_text);
      emit(build_table(family, table_n_max, route, lambda), format, human, timestamp, out);
      return kExitOk;
    }

    if (powersum->parsed()) {
      if (ps_m < 1 || ps_n < 1) throw UsageError("powersum needs --m >= 1 and --n >= 1");
      require_n_in_cap(ps_n, "--n");
      const auto lambda = LambdaChoice::parse(lambda_text);
      const std::string r = route.empty() ? "direct" : route;
      const auto parsed = parse_power_sum_route(r);
      if (!parsed) throw UsageError("route '" + r + "' is not valid for powersum (valid: direct, eulerian, bernoulli)");
      Document doc;
      doc.family = "powersum";
      doc.route = r;
      doc.lambda = lambda.label();
      doc.m = ps_m;
      doc.entries.push_back(make_entry(ps_n, std::nullopt, power_sum(ps_m, ps_n, *parsed), lambda));
      doc.values = doc.entries.back().value;
      doc.parameters = {{"m", ps_m}, {"n", ps_n}, {"lambda", doc.lambda}, {"route", r}};
      emit(doc, format, human, timestamp, out);
      return kExitOk;
    }

    if (eulerian_at->parsed()) {
      require_n_in_cap(ea_n, "--n");
      const Rational x = parse_exact("--x", x_text);
      const auto lambda = LambdaChoice::parse(lambda_text);
      const std::string r = route.empty() ? "explicit" : route;
      LambdaPoly value;
      if (r == "bernoulli") {
        if (x != Rational(-1)) throw UsageError("route 'bernoulli' is only defined at --x -1");
        value = eulerian_at_minus_one(ea_n, MinusOneRoute::bernoulli);
      } else if (auto er = parse_eulerian_route(r)) {
        value = eval_x(eulerian_poly(ea_n, *er), x);
      } else {
        throw UsageError("route '" + r +
                         "' is not valid for eulerian-at (valid: explicit, recursion, gf-recursion, bernoulli)");
      }
      Document doc;
      doc.family = "eulerian-at";
      doc.route = r;
      doc.lambda = lambda.label();
      doc.x = x.to_string();
      doc.entries.push_back(make_entry(ea_n, std::nullopt, value, lambda));
      doc.values = doc.entries.back().value;
      doc.parameters = {{"x", x.to_string()}, {"n", ea_n}, {"lambda", doc.lambda}, {"route", r}};
      emit(doc, format, human, timestamp, out);
      return kExitOk;
    }

    if (verify->parsed()) {
      if (list) {
        for (const auto& id : check_ids()) out << id << '\n';
        return kExitOk;
      }
      if (n_max_override >= 0) overrides.n_max = n_max_override;
      if (m_max_override >= 0) overrides.m_max = m_max_override;
      if (k_max_override >= 0) overrides.k_max = k_max_override;
      return cmd_verify(checks, suite, overrides, verify_format, smoke, jobs, timestamp, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace degen::cli
