#include <doctest.h>

#include "krall/bispectral.hpp"
#include "krall/charvals.hpp"
#include "krall/errors.hpp"

using namespace krall;

TEST_CASE("b_j = 2") {
  const CharContext c(2);
  const KrallContext& k = c.krall();
  CHECK(c.b() == Scalar(2));
  CHECK(k.hhat(2) == QuasiPoly(Poly({Scalar(1), Scalar(-2), Scalar(-2)}), 1, Scalar(2)));
  CHECK(Scalar(2) * k.hhat(2) + Scalar(2) * k.hhat(1) == QuasiPoly(Scalar(2)));
  CHECK(degeneracy_check(c));
  CHECK(jordan_check(c));
  CHECK(k.T4().apply(limit_forms(c).u_j) == Scalar(8) * k.hhat(1));
  CHECK(degree_drop_check(c));
  CHECK(k.th(3).degree() <= 2);
  // uhat_2 = (D + 2 - 1/(x+2)) (x^2 - 1/2)
  const Poly h2({Scalar(-1, 2), Scalar(0), Scalar(1)});
  const Scalar b(2);
  const QuasiPoly expected = QuasiPoly::polynomial(h2.derivative() + b * h2, b) - QuasiPoly(h2, 1, b);
  CHECK(limit_forms(c).u_j == expected);
  CHECK_FALSE(limit_forms(c).v_j_minus1.is_zero());
}

TEST_CASE("b_j = sqrt 2") {
  const CharContext c(1);
  const KrallContext& k = c.krall();
  CHECK(c.b() == Scalar::sqrt_of(2));
  CHECK((Scalar::sqrt_of(2) * k.hhat(1) + k.hhat(0)).is_zero());
  CHECK(degeneracy_check(c));
  CHECK(jordan_check(c));
  CHECK(degree_drop_check(c));
}

TEST_CASE("higher characteristic values") {
  for (int j = 3; j <= 6; ++j) {
    const CharContext c(j);
    CHECK(degeneracy_check(c));
    CHECK(jordan_check(c));
    CHECK(degree_drop_check(c));
  }
  CHECK_THROWS_AS(CharContext(0), UnsupportedParameter);
}

TEST_CASE("generic-b precursors of the limit forms") {
  for (const Scalar& b : {Scalar(3, 2), Scalar(-11, 5)}) {
    const KrallContext k(b);
    for (int n = 0; n <= 8; ++n) {
      CHECK(limit_consistency(k, n));
      CHECK(jordan_precursor_check(k, n));
    }
  }
}

TEST_CASE("recurrences at characteristic values") {
  for (int j : {1, 2, 3}) {
    const CharContext c(j);
    const KrallContext& k = c.krall();
    const ShiftOp rr5 = rr5_operator(k);
    for (int n = 0; n <= 10; ++n) {
      CHECK(rr5_check_expanded(k, n));
      CHECK(rr7_check_expanded(k, n));
      // the five-diagonal form is usable wherever its coefficients are finite
      bool finite = true;
      for (const auto& [s, coef] : rr5.terms()) {
        try {
          (void)coef(Scalar(n));
        } catch (const EvaluationError&) {
          finite = false;
        }
      }
      if (finite) CHECK(rr5_check(k, rr5, n));
      else CHECK_THROWS_AS(rr5_check(k, rr5, n), EvaluationError);
    }
  }
}
