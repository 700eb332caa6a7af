#include "scarf/serialize.hpp"

#include "scarf/error.hpp"

namespace scarf {

nlohmann::json to_json(const BPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.to_string());
  return out;
}

nlohmann::json to_json(const SPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

BPoly bpoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "BPoly JSON must be an array of strings");
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) throw Error(ErrorCode::ParseError, "BPoly coefficient must be a \"num/den\" string");
    coeffs.push_back(Rational::parse(item.get<std::string>()));
  }
  return BPoly(std::move(coeffs));
}

SPoly spoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "SPoly JSON must be an array of BPoly arrays");
  std::vector<BPoly> coeffs;
  coeffs.reserve(j.size());
  for (const auto& item : j) coeffs.push_back(bpoly_from_json(item));
  return SPoly(std::move(coeffs));
}

}  // namespace scarf
