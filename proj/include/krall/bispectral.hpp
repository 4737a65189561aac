#pragma once

#include "krall/krall.hpp"
#include "krall/shiftop.hpp"

namespace krall {

// Shift operators on sequences indexed by n.
ShiftOp jacobi_op(const Scalar& b);    // S + (n/2) S^-1
ShiftOp shift_U(const Scalar& b);      // b + n S^-1
ShiftOp shift_V(const Scalar& b);      // 2 S + b
ShiftOp shift_U_hat(const Scalar& b);  // (b^2 - 2n)^-1 U
ShiftOp shift_V_hat(const Scalar& b);  // (b^2 - 2n - 2)^-1 V
/// lambda_b(n) as a rational function of n.
RatN lambda_n(const Scalar& b);

/// J = D_z + z/2 in the z variable.
WeylOp j_operator_z();

/// Anti-homomorphism x -> D_z + z/2, D_x -> z.
WeylOp flat_map(const WeylOp& L);
/// Throws DomainError if a coefficient has a pole.
WeylOp flat_map(const DiffOp& L);
/// Homomorphism z -> n S^-1, D_z -> S.
ShiftOp natural_map(const WeylOp& M, const Scalar& b);

/// (x+b) A pushed through both maps.
ShiftOp a_tilde_natural(const KrallContext& ctx);
/// (b^2 - 2n)(J + b) - U
ShiftOp a_tilde_closed_form(const Scalar& b);

/// Five-diagonal closed form sum_k a_k(n) S^k for multiplication by (x+b)^2.
ShiftOp rr5_closed_form(const Scalar& b);
/// (J+b)^2 + V Vhat - U Uhat, checked against rr5_closed_form.
ShiftOp rr5_operator(const KrallContext& ctx);
/// (J+b)^3 + 3/2 (J+b)(V Vhat - U Uhat) + 3/2 (Vhat + Uhat)
ShiftOp rr7_operator(const KrallContext& ctx);

/// (x+b)^2 hhat_n against the expansion in hhat, uhat, vhat.  Uses only
/// operator forms of uhat, vhat, so it is valid at characteristic b.
bool rr5_check_expanded(const KrallContext& ctx, int n);
/// Expanded form and the five-diagonal operator; EvaluationError at a pole.
bool rr5_check(const KrallContext& ctx, const ShiftOp& rr5, int n);
bool rr5_check(const KrallContext& ctx, int n);

bool rr7_check_expanded(const KrallContext& ctx, int n);
bool rr7_check(const KrallContext& ctx, const ShiftOp& rr7, int n);
bool rr7_check(const KrallContext& ctx, int n);

struct XqResult {
  DiffOp op;
  bool polynomial;
};
/// A^dag q A
XqResult x_q(const Poly& q, const KrallContext& ctx);
/// natural_map(flat_map(X_q)) o diag(1 / lambda_b(n)); DomainError unless
/// X_q has polynomial coefficients.
ShiftOp dressed_operator(const Poly& q, const KrallContext& ctx);
/// q hhat_n == (dressed q)(hhat)_n
bool dressed_check(const Poly& q, const ShiftOp& dressed, const KrallContext& ctx, int n);

}  // namespace krall
