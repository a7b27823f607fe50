#include "sectorlab/poly_json.hpp"

#include <algorithm>

namespace sectorlab {

namespace {

[[noreturn]] void malformed(const std::string& field, const std::string& problem) {
  throw Error(ErrorKind::InvalidArgument, "field '" + field + "': " + problem);
}

double number_at(const nlohmann::json& value, const std::string& field) {
  if (!value.is_number()) malformed(field, "expected a number, got " + std::string(value.type_name()));
  return value.get<double>();
}

std::vector<double> number_list(const nlohmann::json& doc, const std::string& field) {
  if (!doc.is_array()) malformed(field, "expected an array");
  std::vector<double> out;
  out.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) out.push_back(number_at(doc[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

RealPolynomial polynomial_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) malformed("$", "expected an object with \"coeffs\" or \"roots\"");
  if (doc.contains("coeffs")) {
    const auto coeffs = number_list(doc.at("coeffs"), "coeffs");
    if (coeffs.empty()) malformed("coeffs", "must not be empty");
    return RealPolynomial(coeffs);
  }
  if (doc.contains("roots")) {
    const auto& roots = doc.at("roots");
    if (!roots.is_object()) malformed("roots", "expected an object");
    SectorRootSpec spec;
    if (roots.contains("real")) spec.real_roots = number_list(roots.at("real"), "roots.real");
    if (roots.contains("pairs")) {
      const auto& pairs = roots.at("pairs");
      if (!pairs.is_array()) malformed("roots.pairs", "expected an array of [a, b]");
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const std::string field = "roots.pairs[" + std::to_string(i) + "]";
        const auto ab = number_list(pairs[i], field);
        if (ab.size() != 2) malformed(field, "expected exactly two numbers [a, b]");
        spec.pairs.push_back({ab[0], ab[1]});
      }
    }
    const double lead = roots.contains("lead") ? number_at(roots.at("lead"), "roots.lead") : 1.0;
    if (spec.degree() == 0) malformed("roots", "no zeros given");
    return from_sector_roots(spec, lead);
  }
  malformed("$", "missing \"coeffs\" or \"roots\"");
}

RealPolynomial polynomial_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::string what = e.what();
    const auto colon = what.find(": ");
    const std::string reason = colon == std::string::npos ? what : what.substr(colon + 2);
    // e.byte is 1-based and points one past the offending character.
    const auto stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::InvalidArgument, "JSON syntax error at line " + std::to_string(line) + ", column " +
                                                std::to_string(column) + ": " + reason);
  }
  return polynomial_from_json(doc);
}

nlohmann::json polynomial_to_json(const RealPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(p[k]);
  return {{"coeffs", coeffs}};
}

}  // namespace sectorlab
