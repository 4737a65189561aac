#pragma once

#include <complex>
#include <vector>

#include "krall/quasipoly.hpp"
#include "krall/report.hpp"

namespace krall {

struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
/// n-point rule on [-1, 1] by Newton iteration on P_n.
GaussLegendre gauss_legendre(int n);

enum class Detour { upper, lower };

/// Path [-X, -b-rho] + half circle around -b + [-b+rho, X].
struct ContourSpec {
  double X = 6;
  double rho = 0.5;
  Detour side = Detour::upper;
  int panels = 8;
  int nodes = 64;

  static ContourSpec defaults(double b);
  /// Throws GeometryError.
  void validate(double b) const;
};

struct ContourResult {
  std::complex<double> value;
  /// Bound on the discarded integral over |x| > X.
  double tail_bound = 0;
};

/// (1/sqrt(pi)) int q1 q2 e^{-x^2} dx along the contour.  Panels are summed
/// in parallel; the reduction order is fixed, so results are reproducible.
ContourResult contour_eta(const QuasiPoly& q1, const QuasiPoly& q2, const ContourSpec& spec);
/// Same quadrature, single-threaded reference.
ContourResult contour_eta_serial(const QuasiPoly& q1, const QuasiPoly& q2, const ContourSpec& spec);

/// Kummer M(a, c, z) by its power series.  DomainError if c is a
/// nonpositive integer or |z| > 25.
double kummer_m(double a, double c, double z);
/// d^k/dz^k M(a, c, z) from the termwise-differentiated series.
double kummer_m_derivative(double a, double c, double z, int k);

struct KernelValue {
  double f;
  double df;
  double d2f;
};
/// Kernel basis f_k(x; a), k = 1, 2, of T2 + 2a, with two derivatives in x.
KernelValue kernel_f(int k, double x, double a);

/// Checks on f_1, f_2: T2 f = -2a f, the three-term relation in a, the
/// annihilation of 2 f(b^2/2) + b f(b^2/2 - 1) by A, and f_1(x; n) =
/// sqrt(pi) h_n(x).  GeometryError if a grid point sits at x = -b.
std::vector<CheckResult> kernel_basis_check(double b, const std::vector<double>& a_grid,
                                            const std::vector<double>& x_grid);

}  // namespace krall
