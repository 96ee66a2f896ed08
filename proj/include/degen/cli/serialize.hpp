#ifndef DEGEN_CLI_SERIALIZE_HPP
#define DEGEN_CLI_SERIALIZE_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "degen/poly.hpp"
#include "degen/rational.hpp"
#include "degen/verify.hpp"

namespace degen::cli {

inline constexpr std::string_view kToolName = "degen";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// Fixed CSV header shared by every table and eval document.
inline constexpr std::string_view kDocumentCsvHeader = "family,n,k,m,x,route,lambda,value";
inline constexpr std::string_view kReportCsvHeader =
    "id,status,n_max,m_max,k_max,parameters,lhs,rhs";

// Polynomials are coefficient arrays of canonical rational strings, lowest
// power first; bivariate values nest the lambda arrays inside the x array.
nlohmann::json to_json(const Rational& value);
nlohmann::json to_json(const LambdaPoly& p);
nlohmann::json to_json(const XLPoly& p);

/// Throw std::invalid_argument on malformed input.
Rational rational_from_json(const nlohmann::json& j);
LambdaPoly lambda_poly_from_json(const nlohmann::json& j);
XLPoly xl_poly_from_json(const nlohmann::json& j);

/// CSV cell forms: "1/6;0;-1/6" for lambda polynomials, x-coefficients
/// separated by '|' for bivariate ones.
std::string to_csv_cell(const LambdaPoly& p);
std::string to_csv_cell(const XLPoly& p);
LambdaPoly lambda_poly_from_csv_cell(std::string_view cell);

/// Verification report as JSON.
nlohmann::json report_to_json(const std::vector<CheckSpec>& results, CompareMode mode);
CheckSpec check_from_json(const nlohmann::json& j);

/// Quotes a CSV field when it contains separators or quotes.
std::string csv_escape(std::string_view field);

}  // namespace degen::cli

#endif  // DEGEN_CLI_SERIALIZE_HPP
