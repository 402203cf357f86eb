#pragma once

#include <json.hpp>

#include "invcurve/arith/field_element.hpp"
#include "invcurve/mpoly/mpoly.hpp"

namespace invcurve::io {

using Json = nlohmann::json;

// {"field": id, "coords": [["num", "den"], ...]}
Json to_json(const arith::FieldElement& e);
arith::FieldElement field_element_from_json(const Json& j);

// {"field": id, "terms": {"a,b,c": [["num", "den"], ...], ...}}
Json to_json(const poly::MPoly& p);
poly::MPoly poly_from_json(const Json& j);

}  // namespace invcurve::io
