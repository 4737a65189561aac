#include "krall/diffop.hpp"

#include "krall/errors.hpp"

namespace krall {

DiffOp op_zero(const Scalar& b) { return DiffOp(QuasiPoly(b)); }

DiffOp op_constant(const Scalar& c, const Scalar& b) {
  return DiffOp::multiplication(QuasiPoly::constant(c, b));
}

DiffOp op_multiply(const QuasiPoly& q) { return DiffOp::multiplication(q); }

DiffOp op_multiply(const Poly& p, const Scalar& b) {
  return DiffOp::multiplication(QuasiPoly::polynomial(p, b));
}

DiffOp op_d(const Scalar& b, int k) { return DiffOp::derivation(k, QuasiPoly::constant(1, b)); }

DiffOp op_x_plus_b(int k, const Scalar& b) { return op_multiply(QuasiPoly::x_plus_b_power(k, b)); }

DiffOp formal_adjoint(const DiffOp& op) {
  const Scalar& b = op.zero_coeff().b();
  DiffOp out = op_zero(b);
  DiffOp minus_d_power = op_constant(1, b);
  const DiffOp minus_d = op_d(b) * Scalar(-1);
  for (int k = 0; k <= op.order(); ++k) {
    if (k > 0) minus_d_power = minus_d_power * minus_d;
    if (!op.coeff(k).is_zero()) out += minus_d_power * op_multiply(op.coeff(k));
  }
  return out;
}

DiffOp conjugate_derivative(const DiffOp& op, const QuasiPoly& shift) {
  const Scalar& b = op.zero_coeff().b();
  const DiffOp shifted_d = op_d(b) + op_multiply(shift);
  DiffOp out = op_zero(b);
  DiffOp power = op_constant(1, b);
  for (int k = 0; k <= op.order(); ++k) {
    if (k > 0) power = power * shifted_d;
    if (!op.coeff(k).is_zero()) out += op_multiply(op.coeff(k)) * power;
  }
  return out;
}

DiffOp weighted_adjoint(const DiffOp& op) {
  const Scalar& b = op.zero_coeff().b();
  // e^{x^2} o D o e^{-x^2} = D - 2x
  return conjugate_derivative(formal_adjoint(op), QuasiPoly::polynomial(Poly::monomial(1, Scalar(-2)), b));
}

bool has_polynomial_coefficients(const DiffOp& op) {
  for (const auto& c : op.coeffs())
    if (!c.is_polynomial()) return false;
  return true;
}

WeylOp to_weyl(const DiffOp& op) {
  WeylOp out{Poly()};
  for (int k = op.order(); k >= 0; --k) {
    const QuasiPoly& c = op.coeff(k);
    if (c.is_zero()) continue;
    if (!c.is_polynomial())
      throw DomainError("operator coefficient of D^" + std::to_string(k) + " has a pole: " + c.str());
    out += WeylOp::multiplication(c.as_poly()) * WeylOp::derivation(k, Poly(1));
  }
  return out;
}

DiffOp to_diffop(const WeylOp& op, const Scalar& b) {
  DiffOp out = op_zero(b);
  for (int k = 0; k <= op.order(); ++k) {
    if (op.coeff(k).is_zero()) continue;
    out += op_multiply(op.coeff(k), b) * op_d(b, k);
  }
  return out;
}

}  // namespace krall
