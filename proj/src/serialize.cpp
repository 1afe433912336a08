#include "guchar/serialize.hpp"

namespace guchar {

nlohmann::json poly_to_json(const RatPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rat& c : p.coeffs()) out.push_back(rat_str(c));
  return out;
}

nlohmann::json poly_to_json(const IntPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const Int& c : p.coeffs()) out.push_back(int_str(c));
  return out;
}

RatPoly ratpoly_from_json(const nlohmann::json& j) {
  std::vector<Rat> coeffs;
  for (const auto& entry : j) coeffs.push_back(rat_parse(entry.get<std::string>()));
  return RatPoly(std::move(coeffs));
}

IntPoly intpoly_from_json(const nlohmann::json& j) {
  std::vector<Int> coeffs;
  for (const auto& entry : j) coeffs.push_back(int_parse(entry.get<std::string>()));
  return IntPoly(std::move(coeffs));
}

nlohmann::json series_to_json(const TruncSeries& s) {
  nlohmann::json out = nlohmann::json::array();
  for (unsigned k = 0; k <= s.order(); ++k) out.push_back(poly_to_json(s.coeff(k)));
  return out;
}

TruncSeries series_from_json(const nlohmann::json& j) {
  if (j.empty() || !j.is_array()) throw std::invalid_argument("series JSON must be a nonempty array");
  TruncSeries out(static_cast<unsigned>(j.size()) - 1);
  for (unsigned k = 0; k < j.size(); ++k) out.set_coeff(k, ratpoly_from_json(j[k]));
  return out;
}

namespace {

nlohmann::json side_to_json(const std::vector<ClassEntry>& side) {
  nlohmann::json out = nlohmann::json::array();
  for (const ClassEntry& b : side) out.push_back({b.m, b.d, b.e});
  return out;
}

std::vector<ClassEntry> side_from_json(const nlohmann::json& j) {
  std::vector<ClassEntry> out;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 3)
      throw std::invalid_argument("class-type block must be a triple [m, d, e]");
    out.push_back({entry[0].get<unsigned>(), entry[1].get<unsigned>(), entry[2].get<unsigned>()});
  }
  return out;
}

}  // namespace

nlohmann::json classtype_to_json(const ClassType& t) {
  return {{"minus", side_to_json(t.minus)}, {"plus", side_to_json(t.plus)}};
}

ClassType classtype_from_json(const nlohmann::json& j) {
  return {side_from_json(j.at("minus")), side_from_json(j.at("plus"))};
}

}  // namespace guchar
