#include <doctest.h>

#include <random>

#include "krall/bispectral.hpp"
#include "krall/errors.hpp"
#include "krall/hermite.hpp"

using namespace krall;

namespace {

const Scalar kB(3, 2);

WeylOp random_word(std::mt19937& rng) {
  const WeylOp x = WeylOp::multiplication(Poly::x());
  const WeylOp d = WeylOp::derivation(1, Poly(1));
  WeylOp w = WeylOp::multiplication(Poly(1));
  const int len = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < len; ++i) {
    switch (rng() % 3) {
      case 0: w = w * x; break;
      case 1: w = w * d; break;
      default: w = w * WeylOp::multiplication(Poly(Scalar(static_cast<long>(rng() % 5) - 2, 3))) + x;
    }
  }
  return w;
}

ShiftOp random_shift(std::mt19937& rng, const Scalar& b) {
  ShiftOp op(b);
  for (int k = -2; k <= 2; ++k) {
    const long a = static_cast<long>(rng() % 7) - 3;
    const long c = static_cast<long>(rng() % 5) + 1;
    op += RatN(Poly({Scalar(a), Scalar(1)}), Poly({Scalar(c), Scalar(1)})) * ShiftOp::shift(k, b);
  }
  return op;
}

QuasiPoly rr5_printed_rhs(const KrallContext& ctx, int n) {
  // expansion with constant b^2+n-1/2 and +b uhat_n + n uhat_{n-1}
  const Scalar& b = ctx.b();
  QuasiPoly r = ctx.hhat(n + 2) + Scalar(2) * b * ctx.hhat(n + 1) + (ctx.b2() + Scalar(n) - Scalar(1, 2)) * ctx.hhat(n);
  if (n >= 1) r += b * Scalar(n) * ctx.hhat(n - 1) + Scalar(n) * ctx.uhat(n - 1);
  if (n >= 2) r += Scalar(n * (n - 1), 4) * ctx.hhat(n - 2);
  r += Scalar(2) * ctx.vhat(n + 1) + b * ctx.vhat(n) + b * ctx.uhat(n);
  return r;
}

}  // namespace

TEST_CASE("shift operators on Hermite sequences") {
  const auto h = [](int i) { return hermite_poly(i); };
  CHECK(apply_at(jacobi_op(kB), 2, h, Poly()) == Poly::x() * hermite_poly(2));
  for (int n = 0; n <= 10; ++n) CHECK(apply_at(jacobi_op(kB), n, h, Poly()) == Poly::x() * hermite_poly(n));
  CHECK(apply_at(shift_U(kB), 0, h, Poly()) == kB * Poly(1));
  const ShiftOp Jb = jacobi_op(kB) + ShiftOp::multiplication(kB, kB);
  CHECK((Jb * Jb).coefficient(0) == RatN::n() + RatN(kB * kB + Scalar(1, 2)));
  CHECK_THROWS_AS(apply_at(ShiftOp::shift(-1, kB), 0, h, Poly()), ConsistencyError);
  CHECK_THROWS_AS(shift_U_hat(Scalar(2)).coefficient_at(0, 2), EvaluationError);
  CHECK(shift_U_hat(Scalar(2)).coefficient_at(0, 1) == Scalar(1));
}

TEST_CASE("shift operator algebra") {
  std::mt19937 rng(17);
  for (int t = 0; t < 8; ++t) {
    const ShiftOp A = random_shift(rng, kB), B = random_shift(rng, kB), C = random_shift(rng, kB);
    CHECK((A * B) * C == A * (B * C));
    CHECK(A * (B + C) == A * B + A * C);
  }
  CHECK_THROWS_AS(ShiftOp::shift(1, kB) + ShiftOp::shift(1, Scalar(2)), ContextError);
  const RatN r(Poly({Scalar(-1), Scalar(0), Scalar(1)}), Poly({Scalar(1), Scalar(1)}));
  CHECK(r == RatN(Poly({Scalar(-1), Scalar(1)}), Poly(1)));
  CHECK(r.shifted(2)(Scalar(0)) == Scalar(1));
}

TEST_CASE("bispectral maps") {
  const WeylOp d = WeylOp::derivation(1, Poly(1));
  const WeylOp x = WeylOp::multiplication(Poly::x());
  const WeylOp z = WeylOp::multiplication(Poly::x());
  const WeylOp dz = d;
  CHECK(flat_map(d) == z);
  CHECK(flat_map(x) == j_operator_z());
  CHECK(flat_map(t2_weyl()) == WeylOp::multiplication(Poly::monomial(1, Scalar(-2))) * dz);
  CHECK(natural_map(j_operator_z(), kB) == jacobi_op(kB));
  CHECK(natural_map(z, kB) == RatN::n() * ShiftOp::shift(-1, kB));
  CHECK(natural_map(flat_map(t2_weyl()), kB) == ShiftOp::multiplication(RatN(-2) * RatN::n(), kB));
  std::mt19937 rng(29);
  for (int t = 0; t < 20; ++t) {
    const WeylOp L = random_word(rng), M = random_word(rng);
    CHECK(flat_map(L * M) == flat_map(M) * flat_map(L));
    CHECK(natural_map(L * M, kB) == natural_map(L, kB) * natural_map(M, kB));
  }
  // L h_n = (L flat natural) h_n
  const auto h = [](int i) { return hermite_poly(i); };
  const WeylOp L = random_word(rng) * x * d;
  const ShiftOp Ln = natural_map(flat_map(L), kB);
  for (int n = 0; n <= 8; ++n) CHECK(apply_at(Ln, n, h, Poly()) == L.apply(hermite_poly(n)));
  CHECK_THROWS_AS(flat_map(op_x_plus_b(-1, kB)), DomainError);
}

TEST_CASE("A tilde through the bispectral maps") {
  for (const Scalar& b : {kB, Scalar(2), Scalar(-7, 3)}) {
    const KrallContext ctx(b);
    const ShiftOp At = a_tilde_natural(ctx);
    CHECK(At == a_tilde_closed_form(b));
    const auto h = [&](int i) { return ctx.h(i); };
    for (int n = 0; n <= 10; ++n) CHECK(apply_at(At, n, h, Poly()) == ctx.th(n + 1));
  }
  const KrallContext ctx(kB);
  const auto h = [&](int i) { return ctx.h(i); };
  CHECK(apply_at(a_tilde_natural(ctx), 0, h, Poly()) ==
        kB * kB * Poly::x() + kB * (kB * kB - Scalar(1)) * Poly(1));
  const KrallContext c2(Scalar(2));
  const auto h2 = [&](int i) { return c2.h(i); };
  CHECK(c2.as_quasi(apply_at(a_tilde_natural(c2), 1, h2, Poly())) ==
        QuasiPoly::x_plus_b_power(1, Scalar(2)) * c2.hhat(1));
}

TEST_CASE("five-term recurrence") {
  const KrallContext ctx(kB);
  const ShiftOp rr5 = rr5_operator(ctx);
  CHECK(rr5.min_shift() == -2);
  CHECK(rr5.max_shift() == 2);
  for (int n = 0; n <= 15; ++n) CHECK(rr5_check(ctx, rr5, n));
  CHECK(rr5_check(ctx, 5));
  const Scalar b2 = kB * kB;
  // a_2(n) = 1 + 4/(b^2 - 2n - 4); the variant with +4 in the denominator fails
  CHECK(rr5.coefficient(2) == RatN(1) + RatN(4) / RatN(Poly({b2 - Scalar(4), Scalar(-2)}), Poly(1)));
  CHECK_FALSE(rr5.coefficient(2) == RatN(1) + RatN(4) / RatN(Poly({b2 + Scalar(4), Scalar(-2)}), Poly(1)));
  for (int n = 0; n <= 4; ++n)
    CHECK_FALSE(QuasiPoly::x_plus_b_power(2, kB) * ctx.hhat(n) == rr5_printed_rhs(ctx, n));
  for (const Scalar& b : {Scalar(-5, 2), Scalar(3, 7), Scalar::sqrt_of(3)}) {
    const KrallContext c(b);
    const ShiftOp op = rr5_operator(c);
    for (int n = 0; n <= 8; ++n) CHECK(rr5_check(c, op, n));
  }
}

TEST_CASE("seven-term recurrence") {
  const KrallContext c1(kB);
  CHECK(rr7_check(c1, 0));
  const KrallContext c2(Scalar(-5, 2));
  CHECK(rr7_check(c2, 6));
  const ShiftOp rr7 = rr7_operator(c1);
  CHECK(rr7.min_shift() == -3);
  CHECK(rr7.max_shift() == 3);
  for (int n = 0; n <= 15; ++n) CHECK(rr7_check(c1, rr7, n));
  // consistency with the five-term relation multiplied through by (x+b)
  for (int n = 0; n <= 5; ++n) {
    const auto hh = [&](int i) { return c1.hhat(i); };
    const QuasiPoly five = apply_at(rr5_operator(c1), n, hh, QuasiPoly(kB));
    CHECK(QuasiPoly::x_plus_b_power(1, kB) * five == apply_at(rr7, n, hh, QuasiPoly(kB)));
  }
}

TEST_CASE("X_q polynomiality and dressed operators") {
  const KrallContext ctx(kB);
  const Poly xb = Poly::linear(kB);
  const XqResult X1 = x_q(Poly(1), ctx);
  CHECK(X1.polynomial);
  CHECK(X1.op == ctx.p2_of(ctx.T2()));
  CHECK(x_q(xb * xb, ctx).polynomial);
  CHECK(x_q(xb * xb * xb, ctx).polynomial);
  CHECK(x_q(xb * xb * Poly({Scalar(1), Scalar(-3)}), ctx).polynomial);
  CHECK_FALSE(x_q(xb, ctx).polynomial);
  CHECK_FALSE(x_q(Poly::x(), ctx).polynomial);
  for (int c = -3; c <= 3; ++c) CHECK(x_q(Poly(c), ctx).polynomial);
  CHECK_THROWS_AS(dressed_operator(xb, ctx), DomainError);
  for (const Scalar& b : {kB, Scalar(-9, 4)}) {
    const KrallContext c(b);
    const Poly q = pow(Poly::linear(b), 2);
    const ShiftOp D = dressed_operator(q, c);
    CHECK(D == rr5_operator(c));
    for (int n = 0; n <= 10; ++n) CHECK(dressed_check(q, D, c, n));
    const Poly q3 = pow(Poly::linear(b), 3);
    const ShiftOp D3 = dressed_operator(q3, c);
    for (int n = 0; n <= 6; ++n) CHECK(dressed_check(q3, D3, c, n));
  }
}
