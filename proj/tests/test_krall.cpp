#include <doctest.h>

#include "krall/errors.hpp"
#include "krall/hermite.hpp"
#include "krall/krall.hpp"

using namespace krall;

namespace {

QuasiPoly Q(std::initializer_list<Scalar> num, int pole, const Scalar& b) {
  return QuasiPoly(Poly(std::vector<Scalar>(num)), pole, b);
}

}  // namespace

TEST_CASE("construction") {
  CHECK_THROWS_AS(KrallContext(Scalar(0)), UnsupportedParameter);
  const KrallContext ctx(Scalar(3, 2));
  CHECK(ctx.T4().order() == 4);
  CHECK(ctx.T6().order() == 6);
  CHECK_FALSE(ctx.characteristic_index().has_value());
  CHECK(KrallContext(Scalar(2)).characteristic_index() == 2);
  CHECK(KrallContext(Scalar::sqrt_of(2)).characteristic_index() == 1);
  CHECK(KrallContext(Scalar(-2)).characteristic_index() == 2);
  CHECK_FALSE(KrallContext(Scalar(1)).characteristic_index().has_value());
}

TEST_CASE("eigenvalue sign fixed by direct application") {
  // T4hat hhat_0 = b^2 (b^2 - 2) hhat_0 and T4hat hhat_1 = (b^2 - 2)(b^2 - 4) hhat_1
  const Scalar b(3, 2);
  const KrallContext ctx(b);
  CHECK(ctx.T4().apply(ctx.hhat(0)) == Scalar(9, 16) * ctx.hhat(0));
  CHECK(ctx.T4().apply(ctx.hhat(1)) == Scalar(7, 16) * Scalar(-1) * ctx.hhat(1));
  CHECK(ctx.lambda(0) == Scalar(9, 16));
  CHECK(ctx.lambda(1) == Scalar(-7, 16));
  // the (b^2 - 2n)(b^2 - 2n + 2) variant is rejected
  const Scalar wrong = (ctx.b2() - Scalar(2)) * ctx.b2();
  CHECK_FALSE(ctx.T4().apply(ctx.hhat(1)) == wrong * ctx.hhat(1));
  CHECK(KrallContext(Scalar(2)).lambda(0) == Scalar(8));
}

TEST_CASE("quasi-polynomials hhat") {
  const Scalar b(3, 2);
  const KrallContext ctx(b);
  CHECK(ctx.hhat(0) == QuasiPoly::constant(b * b, b) - b * QuasiPoly::x_plus_b_power(-1, b));
  const KrallContext c2(Scalar(2));
  CHECK(c2.hhat(1) == Q({0, 2}, 0, Scalar(2)) - Q({1, 2}, 1, Scalar(2)));
  for (int n = 0; n <= 15; ++n) {
    CHECK(ctx.hhat(n) == ctx.A().apply(ctx.as_quasi(hermite_poly(n))));
    CHECK(ctx.hhat(n).pole_order() <= 1);
  }
}

TEST_CASE("exceptional polynomials th") {
  const Scalar b(3, 2);
  const KrallContext ctx(b);
  CHECK(ctx.th(1) == Poly({b * b * b - b, b * b}));
  CHECK(ctx.th(1) == Poly({Scalar(15, 8), Scalar(9, 4)}));
  CHECK(KrallContext(Scalar(2)).th(1) == Poly({Scalar(6), Scalar(4)}));
  for (int n = 0; n <= 12; ++n) {
    CHECK(ctx.th(n + 1).degree() == n + 1);
    CHECK(ctx.th(n + 1).leading() == ctx.b2() - Scalar(2 * n));
  }
  CHECK(KrallContext(Scalar(2)).th(3).degree() <= 2);
  CHECK_THROWS_AS(ctx.th(0), DomainError);
}

TEST_CASE("uhat and vhat") {
  const Scalar b(-5, 2);
  const KrallContext ctx(b);
  CHECK(ctx.uhat(0) == QuasiPoly::constant(b, b) - QuasiPoly::x_plus_b_power(-1, b));
  CHECK(ctx.vhat(0) == (Scalar(2) * ctx.hhat(1) + b * ctx.hhat(0)) / (ctx.b2() - Scalar(2)));
  for (int n = 0; n <= 10; ++n) {
    CHECK_NOTHROW(ctx.uhat(n));
    CHECK_NOTHROW(ctx.vhat(n));
  }
  // at b = 2 the quotient form of uhat_2 divides by zero; the operator form is finite
  const KrallContext c2(Scalar(2));
  CHECK_FALSE(c2.uhat(2).is_zero());
  CHECK_FALSE(c2.vhat(1).is_zero());
}

TEST_CASE("eigenrelations") {
  for (const Scalar& b : {Scalar(3, 2), Scalar(-7, 3), Scalar(2), Scalar::sqrt_of(2)}) {
    const KrallContext ctx(b);
    for (int n = 0; n <= 12; ++n) {
      const QuasiPoly& hn = ctx.hhat(n);
      CHECK(ctx.T4().apply(hn) == ctx.lambda(n) * hn);
      CHECK(ctx.T6().apply(hn) == Scalar(-2 * n) * ctx.lambda(n) * hn);
      const QuasiPoly t = ctx.as_quasi(ctx.th(n + 1));
      CHECK(ctx.T4_tilde().apply(t) == ctx.lambda(n) * t);
    }
  }
}

TEST_CASE("operator identities") {
  for (const Scalar& b : {Scalar(1, 2), Scalar(-9, 4), Scalar(2), Scalar::sqrt_of(2)}) {
    const KrallContext ctx(b);
    const auto rows = identity_suite(ctx);
    CHECK(rows.size() >= 20);
    for (const auto& r : rows) {
      INFO(r.check << " " << r.detail);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("generating function for hhat") {
  const KrallContext ctx(Scalar(-3, 7));
  const auto s = hhat_generating_series(ctx, 10);
  for (int n = 0; n <= 10; ++n) CHECK(s[static_cast<std::size_t>(n)] == ctx.hhat(n));
}
