#include <doctest.h>

#include <random>

#include "krall/errors.hpp"
#include "krall/poly.hpp"

using krall::Poly;
using krall::Scalar;

namespace {
Poly P(std::initializer_list<Scalar> c) { return Poly(std::vector<Scalar>(c)); }
}  // namespace

TEST_CASE("basic arithmetic") {
  const Poly x = Poly::x();
  CHECK(Poly().degree() == -1);
  CHECK((x + Poly(1)) * (x - Poly(1)) == x * x - Poly(1));
  CHECK((x * x).derivative() == Scalar(2) * x);
  CHECK(P({1, 2, 3})(Scalar(2)) == Scalar(17));
  CHECK(P({0, 0, 0}).is_zero());
  CHECK(P({1, 2, 3}).str() == "3/1*x^2 + 2/1*x + 1/1");
  CHECK_THROWS_AS(Poly().leading(), krall::ArithmeticError);
}

TEST_CASE("taylor shift and division") {
  const Poly p = P({1, -3, 0, 2});
  CHECK(p.taylor_shift(Scalar(2)) == P({11, 21, 12, 2}));
  for (int s = -3; s <= 3; ++s)
    CHECK(p.taylor_shift(Scalar(s))(Scalar(1)) == p(Scalar(1 + s)));
  auto [q, r] = p.divide_linear(Scalar(-1));  // by x - 1
  CHECK(r == p(Scalar(1)));
  CHECK(q * Poly::linear(Scalar(-1)) + Poly(r) == p);
  auto [q2, r2] = p.divmod(P({1, 0, 1}));
  CHECK(q2 * P({1, 0, 1}) + r2 == p);
  CHECK(r2.degree() < 2);
  CHECK_THROWS_AS(p.divmod(Poly()), krall::ArithmeticError);
  const Poly g = krall::gcd(P({-1, 0, 1}) * P({2, 1}), P({1, 1}) * P({5, 0, 1}));
  CHECK(g == P({1, 1}));
}

TEST_CASE("Hermite polynomials") {
  CHECK(krall::hermite_poly(0) == Poly(1));
  CHECK(krall::hermite_poly(1) == Poly::x());
  CHECK(krall::hermite_poly(2) == P({Scalar(-1, 2), 0, 1}));
  CHECK(krall::hermite_poly(3) == P({0, Scalar(-3, 2), 0, 1}));
  CHECK(krall::hermite_poly(4) == P({Scalar(3, 4), 0, -3, 0, 1}));
  const auto h = krall::hermite_recurrence(20);
  for (int n = 0; n <= 20; ++n) {
    CHECK(h[static_cast<std::size_t>(n)] == krall::hermite_closed_form(n));
    // eigenpolynomials of D^2 - 2x D
    const Poly& hn = h[static_cast<std::size_t>(n)];
    CHECK(hn.derivative(2) - Scalar(2) * Poly::x() * hn.derivative() == Scalar(-2 * n) * hn);
    if (n >= 1) CHECK(hn.derivative() == Scalar(n) * h[static_cast<std::size_t>(n - 1)]);
  }
}

TEST_CASE("Hermite basis round trip") {
  const auto a = krall::to_hermite_basis(P({0, 0, 1}));
  REQUIRE(a.size() == 3);
  CHECK(a[0] == Scalar(1, 2));
  CHECK(a[1] == Scalar(0));
  CHECK(a[2] == Scalar(1));
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> d(-20, 20);
  for (int t = 0; t < 30; ++t) {
    std::vector<Scalar> c;
    for (int k = 0; k <= t % 12; ++k) c.emplace_back(d(rng), 7);
    const Poly p(c);
    CHECK(krall::from_hermite_basis(krall::to_hermite_basis(p)) == p);
  }
}
