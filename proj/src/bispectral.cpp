#include "krall/bispectral.hpp"

namespace krall {

namespace {

Poly n_poly(const Scalar& c0, const Scalar& c1) { return Poly({c0, c1}); }

RatN falling_factorial(int m) {
  Poly p(1);
  for (int i = 0; i < m; ++i) p *= n_poly(Scalar(-i), Scalar(1));
  return RatN(p, Poly(1));
}

// b^2 - 2n - shift
RatN affine(const Scalar& b2, int shift) { return RatN(n_poly(b2 - Scalar(shift), Scalar(-2)), Poly(1)); }

QuasiPoly zero_seq(const KrallContext& ctx) { return QuasiPoly(ctx.b()); }

}  // namespace

ShiftOp jacobi_op(const Scalar& b) {
  return ShiftOp::shift(1, b) + RatN(n_poly(0, Scalar(1, 2)), Poly(1)) * ShiftOp::shift(-1, b);
}

ShiftOp shift_U(const Scalar& b) {
  return ShiftOp::multiplication(b, b) + RatN::n() * ShiftOp::shift(-1, b);
}

ShiftOp shift_V(const Scalar& b) {
  return RatN(2) * ShiftOp::shift(1, b) + ShiftOp::multiplication(b, b);
}

ShiftOp shift_U_hat(const Scalar& b) { return (RatN(1) / affine(b * b, 0)) * shift_U(b); }
ShiftOp shift_V_hat(const Scalar& b) { return (RatN(1) / affine(b * b, 2)) * shift_V(b); }

RatN lambda_n(const Scalar& b) { return affine(b * b, 0) * affine(b * b, 2); }

WeylOp j_operator_z() {
  return WeylOp::derivation(1, Poly(1)) + WeylOp::multiplication(Poly::monomial(1, Scalar(1, 2)));
}

WeylOp flat_map(const WeylOp& L) {
  // x^m D^k -> z^k J^m
  const WeylOp J = j_operator_z();
  WeylOp out{Poly()};
  for (int k = 0; k <= L.order(); ++k) {
    const Poly& a = L.coeff(k);
    if (a.is_zero()) continue;
    // a(J) by Horner
    WeylOp aJ = WeylOp::multiplication(a.leading());
    for (int m = a.degree() - 1; m >= 0; --m) aJ = aJ * J + WeylOp::multiplication(a.coeff(m));
    out += WeylOp::multiplication(Poly::monomial(k)) * aJ;
  }
  return out;
}

WeylOp flat_map(const DiffOp& L) { return flat_map(to_weyl(L)); }

ShiftOp natural_map(const WeylOp& M, const Scalar& b) {
  // z^m D_z^k -> n(n-1)..(n-m+1) S^(k-m)
  ShiftOp out(b);
  for (int k = 0; k <= M.order(); ++k) {
    const Poly& c = M.coeff(k);
    for (int m = 0; m <= c.degree(); ++m) {
      if (c.coeff(m).is_zero()) continue;
      out += (RatN(c.coeff(m)) * falling_factorial(m)) * ShiftOp::shift(k - m, b);
    }
  }
  return out;
}

ShiftOp a_tilde_natural(const KrallContext& ctx) {
  return natural_map(flat_map(op_x_plus_b(1, ctx.b()) * ctx.A()), ctx.b());
}

ShiftOp a_tilde_closed_form(const Scalar& b) {
  const ShiftOp Jb = jacobi_op(b) + ShiftOp::multiplication(b, b);
  return affine(b * b, 0) * Jb - shift_U(b);
}

ShiftOp rr5_closed_form(const Scalar& b) {
  const Scalar b2 = b * b;
  const RatN n = RatN::n();
  auto inv = [&](int shift) { return RatN(1) / affine(b2, shift); };
  ShiftOp out(b);
  out += ShiftOp::multiplication(RatN(1) + RatN(4) * inv(4), b) * ShiftOp::shift(2, b);
  out += ShiftOp::multiplication(RatN(Scalar(2) * b) * (RatN(1) + inv(2) + inv(4)), b) * ShiftOp::shift(1, b);
  out += ShiftOp::multiplication(RatN(b2 + Scalar(1, 2)) + n - RatN(2) * n * inv(0) +
                                     RatN(2) * (n + RatN(1)) * inv(2),
                                 b);
  out += ShiftOp::multiplication(RatN(b) * n * (RatN(1) - inv(0) - inv(-2)), b) * ShiftOp::shift(-1, b);
  out += ShiftOp::multiplication(RatN(Scalar(1, 4)) * n * (n - RatN(1)) * (RatN(1) - RatN(4) * inv(-2)), b) *
         ShiftOp::shift(-2, b);
  return out;
}

ShiftOp rr5_operator(const KrallContext& ctx) {
  const Scalar& b = ctx.b();
  const ShiftOp Jb = jacobi_op(b) + ShiftOp::multiplication(b, b);
  const ShiftOp op = Jb * Jb + shift_V(b) * shift_V_hat(b) - shift_U(b) * shift_U_hat(b);
  if (!(op == rr5_closed_form(b)))
    throw ConsistencyError("five-diagonal closed form disagrees with (J+b)^2 + V Vhat - U Uhat");
  return op;
}

ShiftOp rr7_operator(const KrallContext& ctx) {
  const Scalar& b = ctx.b();
  const ShiftOp Jb = jacobi_op(b) + ShiftOp::multiplication(b, b);
  const ShiftOp corr = shift_V(b) * shift_V_hat(b) - shift_U(b) * shift_U_hat(b);
  const RatN three_halves(Scalar(3, 2));
  return Jb * Jb * Jb + three_halves * (Jb * corr) + three_halves * (shift_V_hat(b) + shift_U_hat(b));
}

namespace {

// (V Vhat - U Uhat) hhat at index n written with uhat, vhat:
// 2 vhat_{n+1} + b vhat_n - b uhat_n - n uhat_{n-1}
QuasiPoly rr5_correction(const KrallContext& ctx, int n) {
  const Scalar& b = ctx.b();
  QuasiPoly g = Scalar(2) * ctx.vhat(n + 1) + b * ctx.vhat(n) - b * ctx.uhat(n);
  if (n > 0) g -= Scalar(n) * ctx.uhat(n - 1);
  return g;
}

}  // namespace

bool rr5_check_expanded(const KrallContext& ctx, int n) {
  const Scalar& b = ctx.b();
  const QuasiPoly lhs = QuasiPoly::x_plus_b_power(2, b) * ctx.hhat(n);
  const ShiftOp Jb = jacobi_op(b) + ShiftOp::multiplication(b, b);
  const auto hh = [&](int i) { return ctx.hhat(i); };
  const QuasiPoly rhs = apply_at(Jb * Jb, n, hh, zero_seq(ctx)) + rr5_correction(ctx, n);
  return lhs == rhs;
}

bool rr5_check(const KrallContext& ctx, const ShiftOp& rr5, int n) {
  const QuasiPoly lhs = QuasiPoly::x_plus_b_power(2, ctx.b()) * ctx.hhat(n);
  const auto hh = [&](int i) { return ctx.hhat(i); };
  return rr5_check_expanded(ctx, n) && apply_at(rr5, n, hh, zero_seq(ctx)) == lhs;
}

bool rr5_check(const KrallContext& ctx, int n) { return rr5_check(ctx, rr5_operator(ctx), n); }

bool rr7_check_expanded(const KrallContext& ctx, int n) {
  const Scalar& b = ctx.b();
  const QuasiPoly lhs = QuasiPoly::x_plus_b_power(3, b) * ctx.hhat(n);
  const ShiftOp Jb = jacobi_op(b) + ShiftOp::multiplication(b, b);
  const auto hh = [&](int i) { return ctx.hhat(i); };
  const auto g = [&](int i) { return rr5_correction(ctx, i); };
  QuasiPoly rhs = apply_at(Jb * Jb * Jb, n, hh, zero_seq(ctx));
  rhs += Scalar(3, 2) * apply_at(Jb, n, g, zero_seq(ctx));
  rhs += Scalar(3, 2) * (ctx.vhat(n) + ctx.uhat(n));
  return lhs == rhs;
}

bool rr7_check(const KrallContext& ctx, const ShiftOp& rr7, int n) {
  const QuasiPoly lhs = QuasiPoly::x_plus_b_power(3, ctx.b()) * ctx.hhat(n);
  const auto hh = [&](int i) { return ctx.hhat(i); };
  return rr7_check_expanded(ctx, n) && apply_at(rr7, n, hh, zero_seq(ctx)) == lhs;
}

bool rr7_check(const KrallContext& ctx, int n) { return rr7_check(ctx, rr7_operator(ctx), n); }

XqResult x_q(const Poly& q, const KrallContext& ctx) {
  DiffOp op = ctx.A_adj() * op_multiply(q, ctx.b()) * ctx.A();
  const bool poly = has_polynomial_coefficients(op);
  return {std::move(op), poly};
}

ShiftOp dressed_operator(const Poly& q, const KrallContext& ctx) {
  const XqResult X = x_q(q, ctx);
  if (!X.polynomial) throw DomainError("X_q has a pole for q = " + q.str());
  return natural_map(flat_map(X.op), ctx.b()) * ShiftOp::multiplication(RatN(1) / lambda_n(ctx.b()), ctx.b());
}

bool dressed_check(const Poly& q, const ShiftOp& dressed, const KrallContext& ctx, int n) {
  const auto hh = [&](int i) { return ctx.hhat(i); };
  return apply_at(dressed, n, hh, zero_seq(ctx)) == ctx.as_quasi(q) * ctx.hhat(n);
}

}  // namespace krall
