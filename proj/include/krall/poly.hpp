#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "krall/scalar.hpp"

namespace krall {

/// Dense univariate polynomial over Scalar, ascending powers.  The
/// coefficient vector is trimmed so that the leading coefficient is nonzero;
/// the zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(Scalar constant);  // NOLINT
  Poly(long constant) : Poly(Scalar(constant)) {}  // NOLINT
  explicit Poly(std::vector<Scalar> coeffs);

  static Poly x() { return monomial(1); }
  static Poly monomial(int power, Scalar coeff = Scalar(1));
  /// x + shift
  static Poly linear(Scalar shift) { return Poly({std::move(shift), Scalar(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::span<const Scalar> coeffs() const { return c_; }
  /// Coefficient of x^k; zero outside the stored range.
  Scalar coeff(int k) const;
  const Scalar& leading() const;

  Poly derivative(int times = 1) const;
  Scalar operator()(const Scalar& at) const;
  /// q(t) = p(t + shift).
  Poly taylor_shift(const Scalar& shift) const;

  /// Quotient and remainder; throws ArithmeticError for a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  /// Exact division by (x + shift); second member is the remainder p(-shift).
  std::pair<Poly, Scalar> divide_linear(const Scalar& shift) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Scalar& s);
  Poly& operator/=(const Scalar& s);

  friend Poly operator-(Poly p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Human-readable form in the given variable, highest power first.
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

inline Poly operator+(Poly a, const Poly& b) { return a += b; }
inline Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(const Poly& a, const Poly& b);
inline Poly operator*(Poly a, const Scalar& s) { return a *= s; }
inline Poly operator*(const Scalar& s, Poly a) { return a *= s; }
inline Poly operator/(Poly a, const Scalar& s) { return a /= s; }

Poly pow(const Poly& base, unsigned exponent);
/// Monic gcd over the field (zero if both are zero).
Poly gcd(Poly a, Poly b);

/// Monic Hermite polynomial h_n.  Built from the closed sum and from the
/// three-term recurrence; the two must agree or ConsistencyError is thrown.
Poly hermite_poly(int n);
Poly hermite_closed_form(int n);
/// h_0..h_n_max by x h_n = h_{n+1} + (n/2) h_{n-1}.
std::vector<Poly> hermite_recurrence(int n_max);

/// Coefficients a_n with p = sum a_n h_n (top-down peeling of monic h_n).
std::vector<Scalar> to_hermite_basis(const Poly& p);
Poly from_hermite_basis(std::span<const Scalar> a);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace krall
