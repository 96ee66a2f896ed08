#ifndef DEGEN_FORMAT_HPP
#define DEGEN_FORMAT_HPP

#include <string>

#include "degen/poly.hpp"

namespace degen {

/// Human-readable text such as "1 - 3λ + 2λ^2"; the zero polynomial is "0".
std::string to_text(const LambdaPoly& p);

/// Human-readable bivariate text such as "(1 - λ) + (1 + λ)x".
std::string to_text(const XLPoly& p);

}  // namespace degen

#endif  // DEGEN_FORMAT_HPP
