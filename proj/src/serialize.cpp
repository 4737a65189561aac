#include "krall/serialize.hpp"

namespace krall {

nlohmann::json to_json(const Scalar& s) { return s.str(); }

nlohmann::json to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

nlohmann::json to_json(const QuasiPoly& q) {
  return {{"b", q.b().str()}, {"numerator", to_json(q.numerator())}, {"pole_order", q.pole_order()}};
}

nlohmann::json to_json(const ShiftOp& op) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : op.terms())
    terms.push_back({{"shift", k}, {"num", to_json(c.num())}, {"den", to_json(c.den())}});
  return {{"b", op.b().str()}, {"terms", terms}};
}

Scalar scalar_from_json(const nlohmann::json& j) { return Scalar::parse(j.get<std::string>()); }

Poly poly_from_json(const nlohmann::json& j) {
  std::vector<Scalar> c;
  for (const auto& e : j) c.push_back(scalar_from_json(e));
  return Poly(std::move(c));
}

QuasiPoly quasipoly_from_json(const nlohmann::json& j) {
  return QuasiPoly(poly_from_json(j.at("numerator")), j.at("pole_order").get<int>(), scalar_from_json(j.at("b")));
}

ShiftOp shiftop_from_json(const nlohmann::json& j) {
  const Scalar b = scalar_from_json(j.at("b"));
  ShiftOp op(b);
  for (const auto& t : j.at("terms"))
    op += RatN(poly_from_json(t.at("num")), poly_from_json(t.at("den"))) * ShiftOp::shift(t.at("shift").get<int>(), b);
  return op;
}

}  // namespace krall
