#include "krall/dualform.hpp"

#include "krall/errors.hpp"
#include "krall/hermite.hpp"

namespace krall {

Scalar gamma_b(const Poly& p, const Scalar& b) { return p.derivative()(-b) + b * p(-b); }

namespace {

/// Numerator over (x+b)^1; polynomials are lifted as (x+b) q.
Poly numerator_over_linear(const QuasiPoly& q) {
  if (q.pole_order() > 1)
    throw DomainError("U_b holds quasi-polynomials with a simple pole at most: " + q.str());
  return q.pole_order() == 1 ? q.numerator() : q.numerator() * Poly::linear(q.b());
}

}  // namespace

bool in_Ub(const QuasiPoly& q) { return gamma_b(numerator_over_linear(q), q.b()).is_zero(); }

bool in_Ub_by_residue(const QuasiPoly& q) {
  if (q.pole_order() > 1)
    throw DomainError("U_b holds quasi-polynomials with a simple pole at most: " + q.str());
  return weighted_residue(q * q).is_zero();
}

UbElement UbElement::make(QuasiPoly q) {
  if (!in_Ub(q)) throw DomainError("not in U_b: " + q.str());
  Scalar a = q.pole_order() == 1 ? q.numerator()(-q.b()) : Scalar(0);
  return UbElement(std::move(q), std::move(a));
}

Scalar eta_tilde(const UbElement& q1, const UbElement& q2) {
  const Scalar& b = q1.value().b();
  if (!(b == q2.value().b())) throw ContextError("eta_tilde across different b");
  const Scalar aa = q1.residue() * q2.residue();
  // d/dx (e^{-x^2}/(x+b)) = -(1/(x+b)^2 - 2b/(x+b) + 2) e^{-x^2}: subtract the
  // pole part of q1 q2 as an exact derivative and keep its constant.
  QuasiPoly r = q1.value() * q2.value();
  r -= aa * (QuasiPoly::x_plus_b_power(-2, b) - Scalar(2) * b * QuasiPoly::x_plus_b_power(-1, b));
  if (!r.is_polynomial()) throw ConsistencyError("eta_tilde remainder is not polynomial: " + r.str());
  return eta(r.as_poly(), Poly(1)) - Scalar(2) * aa;
}

Scalar eta_tilde(const QuasiPoly& q1, const QuasiPoly& q2) {
  return eta_tilde(UbElement::make(q1), UbElement::make(q2));
}

}  // namespace krall
