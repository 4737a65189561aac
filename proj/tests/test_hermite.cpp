#include <doctest.h>

#include "krall/hermite.hpp"

using namespace krall;

TEST_CASE("norms") {
  CHECK(nu(0) == Scalar(1));
  CHECK(nu(2) == Scalar(1, 2));
  CHECK(nu(3) == Scalar(3, 4));
  HermiteContext hc(10);
  CHECK(hc.n_max() == 10);
  CHECK(hc.nu(10) == Scalar(3628800, 1024));
}

TEST_CASE("bilinear form") {
  HermiteContext hc(15);
  CHECK(eta(hc.h(2), hc.h(2)) == Scalar(1, 2));
  CHECK(eta(hc.h(1), hc.h(2)) == Scalar(0));
  CHECK(eta(Poly::monomial(2), Poly(1)) == Scalar(1, 2));
  CHECK(eta(Poly::monomial(4), Poly(1)) == Scalar(3, 4));
  for (int m = 0; m <= 12; ++m)
    for (int n = 0; n <= 12; ++n) {
      CHECK(eta(hc.h(m), hc.h(n)) == (m == n ? hc.nu(n) : Scalar(0)));
      CHECK(eta(Poly::x() * hc.h(m), hc.h(n)) == eta(hc.h(m), Poly::x() * hc.h(n)));
    }
  const Poly p({Scalar(1), Scalar(-2), Scalar(0), Scalar(5, 3)});
  const Poly q({Scalar(0), Scalar(7), Scalar(1, 2)});
  CHECK(eta(p, q) == eta(q, p));
}

TEST_CASE("generating function") {
  const auto g = gen_series_coeffs(10);
  CHECK(g[0] == Poly(1));
  CHECK(g[1] == Poly::x());
  CHECK(g[2] == Poly({Scalar(-1, 2), Scalar(0), Scalar(1)}));
  for (int n = 0; n <= 10; ++n) CHECK(g[static_cast<std::size_t>(n)] == hermite_poly(n));
  // T2 on the series equals (z^2 - 2xz) times the series, coefficientwise.
  const WeylOp T2 = t2_weyl();
  for (std::size_t n = 0; n <= 10; ++n) {
    Poly rhs = -Scalar(2 * static_cast<long>(n)) * Poly::x() * (n >= 1 ? g[n - 1] : Poly());
    if (n >= 2) rhs += Scalar(static_cast<long>(n * (n - 1))) * g[n - 2];
    CHECK(T2.apply(g[n]) == rhs);
  }
}
