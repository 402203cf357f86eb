#include "invcurve/io/json.hpp"

#include <charconv>
#include <string>

#include "invcurve/error.hpp"

namespace invcurve::io {

namespace {

Json coords_to_json(const arith::FieldElement& e) {
  Json coords = Json::array();
  for (const arith::Rational& c : e.coords()) {
    coords.push_back(Json::array({c.get_num().get_str(), c.get_den().get_str()}));
  }
  return coords;
}

arith::FieldElement coords_from_json(const arith::NumberField& field, const Json& coords) {
  if (!coords.is_array()) throw Error("coordinates must be an array");
  std::vector<arith::Rational> values;
  for (const Json& c : coords) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
      throw Error("coordinate must be a [\"num\", \"den\"] pair of strings");
    }
    values.push_back(arith::parse_rational(c[0].get<std::string>(), c[1].get<std::string>()));
  }
  return arith::FieldElement::from_coords(field, values);
}

unsigned parse_exponent(std::string_view s) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v > 60000) {
    throw Error("malformed exponent '" + std::string(s) + "'");
  }
  return v;
}

poly::Monomial parse_key(const std::string& key) {
  const auto p1 = key.find(',');
  const auto p2 = p1 == std::string::npos ? std::string::npos : key.find(',', p1 + 1);
  if (p2 == std::string::npos || key.find(',', p2 + 1) != std::string::npos) {
    throw Error("monomial key must look like \"a,b,c\", got '" + key + "'");
  }
  std::string_view v(key);
  return {parse_exponent(v.substr(0, p1)), parse_exponent(v.substr(p1 + 1, p2 - p1 - 1)),
          parse_exponent(v.substr(p2 + 1))};
}

}  // namespace

Json to_json(const arith::FieldElement& e) {
  Json j;
  j["field"] = e.field().id();
  j["coords"] = coords_to_json(e);
  return j;
}

arith::FieldElement field_element_from_json(const Json& j) {
  const auto& field = arith::NumberField::by_id(j.at("field").get<std::string>());
  return coords_from_json(field, j.at("coords"));
}

Json to_json(const poly::MPoly& p) {
  Json j;
  j["field"] = p.field().id();
  Json terms = Json::object();
  for (const auto& [m, c] : p.terms()) {
    terms[std::to_string(m.e[0]) + "," + std::to_string(m.e[1]) + "," + std::to_string(m.e[2])] = coords_to_json(c);
  }
  j["terms"] = std::move(terms);
  return j;
}

poly::MPoly poly_from_json(const Json& j) {
  const auto& field = arith::NumberField::by_id(j.at("field").get<std::string>());
  const Json& terms = j.at("terms");
  if (!terms.is_object()) throw Error("\"terms\" must be an object");
  std::vector<std::pair<poly::Monomial, arith::FieldElement>> out;
  for (const auto& [key, value] : terms.items()) out.emplace_back(parse_key(key), coords_from_json(field, value));
  return poly::MPoly::from_terms(field, out);
}

}  // namespace invcurve::io
