#include "krall/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "krall/errors.hpp"
#include "krall/poly.hpp"

namespace krall {

using cplx = std::complex<double>;

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre rule needs n >= 1");
  GaussLegendre r;
  r.nodes.resize(static_cast<std::size_t>(n));
  r.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1;
      dp = n * (x * p1 - p0) / (x * x - 1);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1);
    const double w = 2 / ((1 - x * x) * dp * dp);
    r.nodes[static_cast<std::size_t>(i)] = -x;
    r.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    r.weights[static_cast<std::size_t>(i)] = w;
    r.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return r;
}

ContourSpec ContourSpec::defaults(double b) {
  ContourSpec s;
  s.X = std::max(6.0, std::abs(b) + 4);
  return s;
}

void ContourSpec::validate(double b) const {
  if (!(rho > 0)) throw GeometryError("detour radius must be positive");
  if (panels < 1 || nodes < 1) throw GeometryError("need at least one panel and one node");
  if (!(-b - rho > -X) || !(-b + rho < X))
    throw GeometryError("pole at -b lies within the detour radius of a segment endpoint");
}

namespace {

struct NumericQuasi {
  std::vector<double> num;
  int pole;
  double b;

  explicit NumericQuasi(const QuasiPoly& q) : pole(q.pole_order()), b(q.b().to_double()) {
    for (const auto& c : q.numerator().coeffs()) num.push_back(c.to_double());
  }

  cplx operator()(cplx z) const {
    cplx acc = 0;
    for (auto it = num.rbegin(); it != num.rend(); ++it) acc = acc * z + *it;
    if (pole > 0) acc /= std::pow(z + b, pole);
    return acc;
  }
};

struct Panel {
  enum Kind { line, arc } kind;
  double t0, t1;  // x range for lines, theta range for arcs
};

struct Integrand {
  NumericQuasi q1, q2;
  double b, rho;
  const GaussLegendre* gl;

  cplx panel(const Panel& p) const {
    const double half = 0.5 * (p.t1 - p.t0);
    const double mid = 0.5 * (p.t1 + p.t0);
    cplx sum = 0;
    for (std::size_t i = 0; i < gl->nodes.size(); ++i) {
      const double t = mid + half * gl->nodes[i];
      cplx z, dz;
      if (p.kind == Panel::line) {
        z = t;
        dz = 1;
      } else {
        const cplx e = std::polar(1.0, t);
        z = -b + rho * e;
        dz = cplx(0, 1) * rho * e;
      }
      sum += gl->weights[i] * q1(z) * q2(z) * std::exp(-z * z) * dz;
    }
    return sum * half / std::sqrt(std::numbers::pi);
  }
};

std::vector<Panel> make_panels(const ContourSpec& s, double b) {
  std::vector<Panel> out;
  auto split = [&](Panel::Kind kind, double a, double c) {
    for (int i = 0; i < s.panels; ++i)
      out.push_back({kind, a + (c - a) * i / s.panels, a + (c - a) * (i + 1) / s.panels});
  };
  split(Panel::line, -s.X, -b - s.rho);
  if (s.side == Detour::upper) split(Panel::arc, std::numbers::pi, 0);
  else split(Panel::arc, -std::numbers::pi, 0);
  split(Panel::line, -b + s.rho, s.X);
  return out;
}

// int_{|x|>X} |q1 q2| e^{-x^2} / sqrt(pi), from |num(x)| <= sum |c_k| |x|^k,
// |x+b|^m >= (X - |b|)^m and int_X^inf t^k e^{-t^2} <= X^(k-1) e^{-X^2} / (2 - (k-1)/X^2).
double tail_bound(const QuasiPoly& q1, const QuasiPoly& q2, double X) {
  const QuasiPoly prod = q1 * q2;
  const double b = std::abs(prod.b().to_double());
  double denom = 1;
  if (prod.pole_order() > 0) {
    if (X <= b + 1) return INFINITY;
    denom = std::pow(X - b, prod.pole_order());
  }
  double total = 0;
  const auto c = prod.numerator().coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double ak = std::abs(c[k].to_double());
    if (ak == 0) continue;
    const double kk = static_cast<double>(k);
    const double guard = 2 - (kk - 1) / (X * X);
    if (guard <= 0) return INFINITY;
    total += ak * std::pow(X, kk - 1) * std::exp(-X * X) / guard;
  }
  return 2 * total / denom / std::sqrt(std::numbers::pi);
}

ContourResult contour_eta_impl(const QuasiPoly& q1, const QuasiPoly& q2, const ContourSpec& spec, bool parallel) {
  if (!(q1.b() == q2.b())) throw ContextError("contour_eta across different b");
  const double b = q1.b().to_double();
  spec.validate(b);
  const GaussLegendre gl = gauss_legendre(spec.nodes);
  const Integrand f{NumericQuasi(q1), NumericQuasi(q2), b, spec.rho, &gl};
  const std::vector<Panel> panels = make_panels(spec, b);
  std::vector<cplx> partial(panels.size());
  const long np = static_cast<long>(panels.size());
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < np; ++i) partial[static_cast<std::size_t>(i)] = f.panel(panels[static_cast<std::size_t>(i)]);
  } else {
    for (long i = 0; i < np; ++i) partial[static_cast<std::size_t>(i)] = f.panel(panels[static_cast<std::size_t>(i)]);
  }
  ContourResult r;
  for (const cplx& p : partial) r.value += p;
  r.tail_bound = tail_bound(q1, q2, spec.X);
  return r;
}

}  // namespace

ContourResult contour_eta(const QuasiPoly& q1, const QuasiPoly& q2, const ContourSpec& spec) {
  return contour_eta_impl(q1, q2, spec, true);
}

ContourResult contour_eta_serial(const QuasiPoly& q1, const QuasiPoly& q2, const ContourSpec& spec) {
  return contour_eta_impl(q1, q2, spec, false);
}

double kummer_m(double a, double c, double z) {
  if (c <= 0 && c == std::floor(c)) throw DomainError("Kummer M: c is a nonpositive integer");
  if (!(std::abs(z) <= 25)) throw DomainError("Kummer M: |z| > 25 is outside the series range");
  double term = 1, sum = 1;
  for (int k = 0; k < 10000; ++k) {
    term *= (a + k) / (c + k) * z / (k + 1);
    sum += term;
    if (term == 0 || std::abs(term) < 1e-18 * std::abs(sum)) return sum;
  }
  throw DomainError("Kummer M series did not converge");
}

double kummer_m_derivative(double a, double c, double z, int k) {
  // termwise: d/dz sum (a)_n/(c)_n z^n/n! = (a/c) sum (a+1)_n/(c+1)_n z^n/n!
  double factor = 1;
  for (int i = 0; i < k; ++i) factor *= (a + i) / (c + i);
  if (factor == 0) return 0;
  return factor * kummer_m(a + k, c + k, z);
}

KernelValue kernel_f(int k, double x, double a) {
  if (k != 1 && k != 2) throw DomainError("kernel index must be 1 or 2");
  const double z = x * x;
  const double a0 = -a / 2, a1 = 0.5 - a / 2;
  const double M0 = kummer_m(a0, 0.5, z), M0p = kummer_m_derivative(a0, 0.5, z, 1),
               M0pp = kummer_m_derivative(a0, 0.5, z, 2);
  const double M1 = kummer_m(a1, 1.5, z), M1p = kummer_m_derivative(a1, 1.5, z, 1),
               M1pp = kummer_m_derivative(a1, 1.5, z, 2);
  // g0 = M0(x^2), g1 = x M1(x^2)
  const double g0 = M0, g0p = 2 * x * M0p, g0pp = 2 * M0p + 4 * z * M0pp;
  const double g1 = x * M1, g1p = M1 + 2 * z * M1p, g1pp = 6 * x * M1p + 4 * x * z * M1pp;
  const double s = std::sin(std::numbers::pi * a / 2), c = std::cos(std::numbers::pi * a / 2);
  const double G0 = std::tgamma(a / 2 + 0.5), G1 = 2 * std::tgamma(a / 2 + 1);
  const double c0 = k == 1 ? c * G0 : s * G0;
  const double c1 = k == 1 ? s * G1 : -c * G1;
  return {c0 * g0 + c1 * g1, c0 * g0p + c1 * g1p, c0 * g0pp + c1 * g1pp};
}

std::vector<CheckResult> kernel_basis_check(double b, const std::vector<double>& a_grid,
                                            const std::vector<double>& x_grid) {
  for (double x : x_grid)
    if (std::abs(x + b) < 1e-9) throw GeometryError("sample point at the pole x = -b");
  auto b_str = [&] {
    std::ostringstream os;
    os.precision(17);
    os << b;
    return os.str();
  }();
  std::vector<CheckResult> out;
  auto push = [&](const std::string& name, const std::string& ref, double res, double tol, std::optional<int> n) {
    out.push_back({name, ref, b_str, n, std::isfinite(res) && res < tol, res, {}});
  };

  for (int k = 1; k <= 2; ++k) {
    double eig = 0, rr = 0;
    for (double a : a_grid)
      for (double x : x_grid) {
        const KernelValue f = kernel_f(k, x, a);
        const double scale = std::abs(f.d2f) + std::abs(2 * x * f.df) + std::abs(2 * a * f.f);
        eig = std::max(eig, std::abs(f.d2f - 2 * x * f.df + 2 * a * f.f) / std::max(scale, 1.0));
        const double up = kernel_f(k, x, a + 1).f, down = kernel_f(k, x, a - 1).f;
        const double rscale = std::abs(x * f.f) + std::abs(up) + std::abs(a / 2 * down);
        rr = std::max(rr, std::abs(x * f.f - up - a / 2 * down) / std::max(rscale, 1.0));
      }
    push("T2 f_" + std::to_string(k) + " = -2a f_" + std::to_string(k), "T2af", eig, 1e-8, std::nullopt);
    push("x f_" + std::to_string(k) + "(a) = f(a+1) + a/2 f(a-1)", "fRR", rr, 1e-8, std::nullopt);

    // A c_b(f_k) = 0 with c_b(f) = 2 f(b^2/2) + b f(b^2/2 - 1)
    double ann = 0;
    for (double x : x_grid) {
      const KernelValue u = kernel_f(k, x, b * b / 2), v = kernel_f(k, x, b * b / 2 - 1);
      const double g = 2 * u.f + b * v.f, gp = 2 * u.df + b * v.df, gpp = 2 * u.d2f + b * v.d2f;
      const double terms[] = {gpp, 2 * x * gp, b * b * g, (gp + b * g) / (x + b)};
      double scale = 0;
      for (double t : terms) scale += std::abs(t);
      const double r = gpp - 2 * x * gp + b * b * g - (gp + b * g) / (x + b);
      ann = std::max(ann, std::abs(r) / std::max(scale, 1.0));
    }
    push("A c_b(f_" + std::to_string(k) + ") = 0", "cbdef", ann, 1e-7, std::nullopt);
  }

  const auto h = hermite_recurrence(6);
  for (int n = 0; n <= 6; ++n) {
    double diff = 0;
    for (double x : x_grid) {
      double hx = 0;
      const auto c = h[static_cast<std::size_t>(n)].coeffs();
      for (auto it = c.rbegin(); it != c.rend(); ++it) hx = hx * x + it->to_double();
      diff = std::max(diff, std::abs(kernel_f(1, x, n).f / std::sqrt(std::numbers::pi) - hx));
    }
    push("f_1(x; n) = sqrt(pi) h_n(x)", "T2af", diff, 1e-10, n);
  }
  return out;
}

}  // namespace krall
