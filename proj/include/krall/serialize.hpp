#pragma once

#include <json.hpp>

#include "krall/quasipoly.hpp"
#include "krall/shiftop.hpp"

namespace krall {

// Scalars are "p/q" or "p/q+r/s*sqrt(d)" strings; polynomials are arrays of
// scalars, lowest power first.
nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const Poly& p);
/// {"b", "numerator", "pole_order"}
nlohmann::json to_json(const QuasiPoly& q);
/// {"b", "terms": [{"shift", "num", "den"}]}
nlohmann::json to_json(const ShiftOp& op);

Scalar scalar_from_json(const nlohmann::json& j);
Poly poly_from_json(const nlohmann::json& j);
QuasiPoly quasipoly_from_json(const nlohmann::json& j);
ShiftOp shiftop_from_json(const nlohmann::json& j);

}  // namespace krall
