#include <doctest.h>

#include <cmath>
#include <numbers>

#include "krall/dualform.hpp"
#include "krall/errors.hpp"
#include "krall/krall.hpp"
#include "krall/numeric.hpp"

using namespace krall;

TEST_CASE("Gauss-Legendre rules") {
  for (int n : {1, 2, 5, 16, 64}) {
    const auto gl = gauss_legendre(n);
    double w = 0;
    for (double v : gl.weights) w += v;
    CHECK(w == doctest::Approx(2).epsilon(1e-14));
    // exact for degree 2n - 1
    double m = 0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) m += gl.weights[i] * std::pow(gl.nodes[i], 2 * n - 2);
    CHECK(m == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(gauss_legendre(0), DomainError);
}

TEST_CASE("Kummer function") {
  CHECK(kummer_m(0.3, 1.7, 0) == 1);
  CHECK(kummer_m(1, 1, 1) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(kummer_m(-1, 0.5, 1) == doctest::Approx(-1).epsilon(1e-15));
  CHECK(kummer_m(1, 1, -20) == doctest::Approx(std::exp(-20.0)).epsilon(1e-6));
  CHECK_THROWS_AS(kummer_m(1, -2, 1), DomainError);
  CHECK_THROWS_AS(kummer_m(1, 1, 26), DomainError);
  for (double a : {-2.5, -0.3, 0.7, 3.1})
    for (double c : {0.5, 1.5, 2.25})
      for (double z : {-3.0, -0.5, 0.25, 2.0, 6.0}) {
        const double M = kummer_m(a, c, z), Mp = kummer_m_derivative(a, c, z, 1),
                     Mpp = kummer_m_derivative(a, c, z, 2);
        const double scale = std::abs(z * Mpp) + std::abs((c - z) * Mp) + std::abs(a * M);
        CHECK(std::abs(z * Mpp + (c - z) * Mp - a * M) <= 1e-10 * std::max(scale, 1.0));
      }
}

TEST_CASE("kernel basis") {
  for (int n = 0; n <= 6; ++n)
    for (double x : {0.0, 1.0, 2.0}) {
      const auto h = hermite_poly(n);
      double hx = 0;
      const auto c = h.coeffs();
      for (auto it = c.rbegin(); it != c.rend(); ++it) hx = hx * x + it->to_double();
      CHECK(std::abs(kernel_f(1, x, n).f / std::sqrt(std::numbers::pi) - hx) < 1e-10);
    }
  const double a = 1.0 / 3, x = 0.5;
  const double r = x * kernel_f(2, x, a).f - kernel_f(2, x, a + 1).f - a / 2 * kernel_f(2, x, a - 1).f;
  CHECK(std::abs(r) < 1e-8);
  const auto rows = kernel_basis_check(1.5, {1.0 / 3, 2.7}, {-1.0, 0.0, 1.0, 2.0});
  CHECK(rows.size() == 13);
  for (const auto& row : rows) {
    INFO(row.check);
    CHECK(row.pass);
  }
  CHECK_THROWS_AS(kernel_basis_check(1.5, {1.0}, {-1.5}), GeometryError);
}

TEST_CASE("contour realization of eta_tilde") {
  const Scalar b(3, 2);
  const KrallContext ctx(b);
  const ContourSpec spec = ContourSpec::defaults(1.5);
  CHECK(spec.X == 6);
  const auto r00 = contour_eta(ctx.hhat(0), ctx.hhat(0), spec);
  CHECK(std::abs(r00.value.real() - 0.5625) < 1e-12);
  CHECK(std::abs(r00.value.imag()) < 1e-9);
  CHECK(std::abs(contour_eta(ctx.hhat(0), ctx.hhat(1), spec).value) < 1e-9);
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      const auto up = contour_eta(ctx.hhat(m), ctx.hhat(n), spec);
      const double exact = eta_tilde(ctx.hhat(m), ctx.hhat(n)).to_double();
      CHECK(std::abs(up.value.real() - exact) <= 1e-10 + up.tail_bound);
      for (double rho : {0.25, 0.75}) {
        ContourSpec s = spec;
        s.rho = rho;
        s.side = Detour::lower;
        CHECK(std::abs(contour_eta(ctx.hhat(m), ctx.hhat(n), s).value - up.value) < 1e-9);
      }
    }
  // non-member control: the detours differ by 2 pi i times the residue
  const QuasiPoly q = QuasiPoly::x_plus_b_power(-1, b);
  ContourSpec lower = spec;
  lower.side = Detour::lower;
  const auto d = contour_eta(q, q, spec).value - contour_eta(q, q, lower).value;
  const double expected = 2 * std::numbers::pi * 2 * 1.5 * std::exp(-2.25) / std::sqrt(std::numbers::pi);
  CHECK(std::abs(d.imag() + expected) < 1e-9);
  CHECK(std::abs(d.real()) < 1e-9);
}

TEST_CASE("parallel and serial quadrature agree bitwise") {
  const KrallContext ctx(Scalar(-5, 2));
  const ContourSpec spec = ContourSpec::defaults(-2.5);
  for (int n = 0; n <= 5; ++n) {
    const auto p = contour_eta(ctx.hhat(n), ctx.hhat(n), spec);
    const auto s = contour_eta_serial(ctx.hhat(n), ctx.hhat(n), spec);
    CHECK(p.value == s.value);
  }
}

TEST_CASE("contour geometry errors") {
  const KrallContext ctx(Scalar(3, 2));
  ContourSpec s = ContourSpec::defaults(1.5);
  s.rho = 0;
  CHECK_THROWS_AS(contour_eta(ctx.hhat(0), ctx.hhat(0), s), GeometryError);
  s.rho = 0.5;
  s.X = 1.9;
  CHECK_THROWS_AS(contour_eta(ctx.hhat(0), ctx.hhat(0), s), GeometryError);
}
