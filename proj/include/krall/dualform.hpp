#pragma once

#include "krall/quasipoly.hpp"

namespace krall {

/// gamma_b(p) = p'(-b) + b p(-b)
Scalar gamma_b(const Poly& p, const Scalar& b);

/// Membership in U_b = { p / (x+b) : gamma_b(p) = 0 }.  Pole order >= 2
/// throws DomainError.
bool in_Ub(const QuasiPoly& q);

/// Weighted residue of q^2 at -b is zero.  For q with a pole this agrees
/// with in_Ub; for pole-free q it is always true (weaker test).
bool in_Ub_by_residue(const QuasiPoly& q);

/// Element of U_b with its a_{-1} coefficient at the pole.
class UbElement {
 public:
  /// Throws DomainError if q is not in U_b.
  static UbElement make(QuasiPoly q);

  const QuasiPoly& value() const { return value_; }
  const Scalar& residue() const { return a_minus1_; }

 private:
  UbElement(QuasiPoly q, Scalar a) : value_(std::move(q)), a_minus1_(std::move(a)) {}
  QuasiPoly value_;
  Scalar a_minus1_;
};

/// Extended bilinear form on U_b, by formal antiderivative of the pole part.
Scalar eta_tilde(const UbElement& q1, const UbElement& q2);
/// Convenience overload; both arguments are checked for membership.
Scalar eta_tilde(const QuasiPoly& q1, const QuasiPoly& q2);

}  // namespace krall
