#include "degen/cli/serialize.hpp"

#include <stdexcept>

namespace degen::cli {

using nlohmann::json;

json to_json(const Rational& value) { return value.to_string(); }

json to_json(const LambdaPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

json to_json(const XLPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a rational string, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

LambdaPoly lambda_poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a coefficient array, got " + j.dump());
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return LambdaPoly(std::move(coeffs));
}

XLPoly xl_poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a nested coefficient array, got " + j.dump());
  std::vector<LambdaPoly> coeffs;
  for (const auto& c : j) coeffs.push_back(lambda_poly_from_json(c));
  return XLPoly(std::move(coeffs));
}

std::string to_csv_cell(const LambdaPoly& p) {
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i > 0) out += ';';
    out += p.coeffs()[i].to_string();
  }
  return out;
}

std::string to_csv_cell(const XLPoly& p) {
  std::string out;
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    if (j > 0) out += '|';
    out += to_csv_cell(p.coeffs()[j]);
  }
  return out;
}

LambdaPoly lambda_poly_from_csv_cell(std::string_view cell) {
  std::vector<Rational> coeffs;
  while (!cell.empty()) {
    const auto semi = cell.find(';');
    coeffs.push_back(Rational::parse(cell.substr(0, semi)));
    if (semi == std::string_view::npos) break;
    cell.remove_prefix(semi + 1);
  }
  return LambdaPoly(std::move(coeffs));
}

namespace {

json ranges_to_json(const Ranges& r) {
  json out = json::object();
  if (r.n_max) out["n_max"] = *r.n_max;
  if (r.m_max) out["m_max"] = *r.m_max;
  if (r.k_max) out["k_max"] = *r.k_max;
  return out;
}

}  // namespace

json report_to_json(const std::vector<CheckSpec>& results, CompareMode mode) {
  json checks = json::array();
  std::size_t passed = 0;
  for (const auto& spec : results) {
    json entry;
    entry["id"] = spec.id;
    entry["anchor"] = spec.anchor;
    entry["range"] = ranges_to_json(spec.range);
    entry["status"] = std::string(to_string(spec.status));
    if (spec.counterexample) {
      json params = json::array();
      for (const auto& [name, value] : spec.counterexample->parameters) {
        params.push_back({{"name", name}, {"value", value}});
      }
      entry["counterexample"] = {
          {"parameters", params}, {"lhs", spec.counterexample->lhs}, {"rhs", spec.counterexample->rhs}};
    } else {
      entry["counterexample"] = nullptr;
    }
    if (spec.status == CheckStatus::pass) ++passed;
    checks.push_back(std::move(entry));
  }
  json report;
  report["tool"] = std::string(kToolName);
  report["version"] = std::string(kToolVersion);
  report["mode"] = std::string(to_string(mode));
  report["exhaustive"] = mode == CompareMode::exact;
  report["checks"] = std::move(checks);
  report["summary"] = {{"total", results.size()}, {"passed", passed}, {"failed", results.size() - passed}};
  return report;
}

CheckSpec check_from_json(const json& j) {
  CheckSpec spec;
  spec.id = j.at("id").get<std::string>();
  spec.anchor = j.at("anchor").get<std::string>();
  const auto& range = j.at("range");
  if (range.contains("n_max")) spec.range.n_max = range["n_max"].get<int>();
  if (range.contains("m_max")) spec.range.m_max = range["m_max"].get<int>();
  if (range.contains("k_max")) spec.range.k_max = range["k_max"].get<int>();
  const auto status = j.at("status").get<std::string>();
  if (status == "pass") {
    spec.status = CheckStatus::pass;
  } else if (status == "fail") {
    spec.status = CheckStatus::fail;
  } else {
    spec.status = CheckStatus::pending;
  }
  if (!j.at("counterexample").is_null()) {
    Counterexample ce;
    for (const auto& p : j["counterexample"].at("parameters")) {
      ce.parameters.emplace_back(p.at("name").get<std::string>(), p.at("value").get<std::int64_t>());
    }
    ce.lhs = j["counterexample"].at("lhs").get<std::string>();
    ce.rhs = j["counterexample"].at("rhs").get<std::string>();
    spec.counterexample = std::move(ce);
  }
  return spec;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace degen::cli
