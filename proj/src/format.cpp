#include "degen/format.hpp"

#include <vector>

namespace degen {

namespace {

std::string power_suffix(const char* var, std::size_t power) {
  if (power == 0) return "";
  if (power == 1) return var;
  return std::string(var) + "^" + std::to_string(power);
}

// Joins signed terms as "a - b + c".
std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [negative, body] = terms[i];
    if (i == 0) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace

std::string to_text(const LambdaPoly& p) {
  std::vector<std::pair<bool, std::string>> terms;
  const auto coeffs = p.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    const Rational magnitude = coeffs[i].abs();
    std::string body;
    if (i == 0 || magnitude != Rational(1)) body = magnitude.to_string();
    body += power_suffix("λ", i);
    terms.emplace_back(coeffs[i].sign() < 0, std::move(body));
  }
  return join_terms(terms);
}

std::string to_text(const XLPoly& p) {
  std::vector<std::pair<bool, std::string>> terms;
  const auto coeffs = p.coeffs();
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const LambdaPoly& c = coeffs[j];
    if (c.is_zero()) continue;
    const std::string x_part = power_suffix("x", j);
    // single-term coefficients keep their sign outside; sums get parentheses
    std::size_t nonzero = 0;
    for (const auto& r : c.coeffs()) nonzero += r.is_zero() ? 0 : 1;
    if (nonzero == 1) {
      const bool negative = c.coeffs().back().sign() < 0;
      std::string body = to_text(negative ? -c : c);
      if (j > 0 && body == "1") body.clear();
      terms.emplace_back(negative, body + x_part);
    } else {
      terms.emplace_back(false, "(" + to_text(c) + ")" + x_part);
    }
  }
  return join_terms(terms);
}

}  // namespace degen
