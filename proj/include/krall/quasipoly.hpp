#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "krall/poly.hpp"

namespace krall {

/// numerator / (x + b)^pole_order, kept normalized: when pole_order > 0 the
/// numerator does not vanish at x = -b, and zero is (0, 0).  Every value
/// carries its b; arithmetic across different b throws ContextError.
class QuasiPoly {
 public:
  explicit QuasiPoly(Scalar b) : b_(std::move(b)) {}
  QuasiPoly(Poly numerator, int pole_order, Scalar b);

  static QuasiPoly polynomial(Poly p, Scalar b) { return QuasiPoly(std::move(p), 0, std::move(b)); }
  static QuasiPoly constant(Scalar c, Scalar b) { return polynomial(Poly(std::move(c)), std::move(b)); }
  /// (x + b)^k for any integer k.
  static QuasiPoly x_plus_b_power(int k, const Scalar& b);

  const Poly& numerator() const { return num_; }
  int pole_order() const { return pole_; }
  const Scalar& b() const { return b_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return pole_ == 0; }
  /// The value as a polynomial; throws DomainError if there is a pole.
  const Poly& as_poly() const;

  QuasiPoly derivative(int times = 1) const;
  Scalar operator()(const Scalar& x) const;

  QuasiPoly& operator+=(const QuasiPoly& rhs);
  QuasiPoly& operator-=(const QuasiPoly& rhs);
  QuasiPoly& operator*=(const QuasiPoly& rhs);
  QuasiPoly& operator*=(const Scalar& s);
  QuasiPoly& operator/=(const Scalar& s);

  friend QuasiPoly operator-(QuasiPoly q);
  friend bool operator==(const QuasiPoly& a, const QuasiPoly& c) {
    return a.pole_ == c.pole_ && a.b_ == c.b_ && a.num_ == c.num_;
  }

  std::string str() const;

 private:
  void normalize();
  void require_same_b(const QuasiPoly& other) const;

  Poly num_;
  int pole_ = 0;
  Scalar b_;
};

inline QuasiPoly operator+(QuasiPoly a, const QuasiPoly& c) { return a += c; }
inline QuasiPoly operator-(QuasiPoly a, const QuasiPoly& c) { return a -= c; }
inline QuasiPoly operator*(QuasiPoly a, const QuasiPoly& c) { return a *= c; }
inline QuasiPoly operator*(QuasiPoly a, const Scalar& s) { return a *= s; }
inline QuasiPoly operator*(const Scalar& s, QuasiPoly a) { return a *= s; }
inline QuasiPoly operator/(QuasiPoly a, const Scalar& s) { return a /= s; }

/// Laurent coefficients of f at x = -b in powers of (x + b).
struct LaurentData {
  int lowest = 0;             // power of the first coefficient
  std::vector<Scalar> coeffs; // coeffs[i] multiplies (x+b)^(lowest + i)

  Scalar at(int power) const;
};

/// Coefficients of (x+b)^-m .. (x+b)^depth; requires depth >= -m.
LaurentData laurent_at_pole(const QuasiPoly& f, int depth);

/// Residue at x = -b of f(x) e^{-x^2}, divided by e^{-b^2}:
/// a_{-1} + 2b a_{-2}.  Pole orders above 2 throw DomainError.
Scalar weighted_residue(const QuasiPoly& f);

std::ostream& operator<<(std::ostream& os, const QuasiPoly& q);

}  // namespace krall
