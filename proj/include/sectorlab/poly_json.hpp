#pragma once

#include <json.hpp>

#include <string>

#include "sectorlab/poly.hpp"

namespace sectorlab {

/// Reads either {"coeffs": [c0, c1, ...]} or
/// {"roots": {"real": [...], "pairs": [[a, b], ...], "lead": L}}.
/// Malformed documents raise InvalidArgument naming the offending field.
RealPolynomial polynomial_from_json(const nlohmann::json& doc);

/// Parses text first; JSON syntax errors are reported with line and column.
RealPolynomial polynomial_from_json_text(const std::string& text);

/// Always writes the "coeffs" form.
nlohmann::json polynomial_to_json(const RealPolynomial& p);

}  // namespace sectorlab
