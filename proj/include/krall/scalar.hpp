#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace krall {

/// Exact element of Q or of a real quadratic field Q(sqrt(d)).
///
/// The value is rational + surd * sqrt(radicand).  Canonical form: the
/// rationals are reduced, radicand is squarefree and > 1, and a zero surd
/// part always carries radicand 0.  Arithmetic between two elements with
/// different nonzero radicands throws ContextError; mixing with a plain
/// rational is always allowed.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : rat_(value) {}  // NOLINT: integer literals are scalars
  Scalar(long num, long den);
  explicit Scalar(mpq_class value);

  /// sqrt(n) for n >= 0, with square factors pulled out.
  static Scalar sqrt_of(unsigned long n);

  /// Parses "p", "p/q", "r/s*sqrt(d)", "p/q+r/s*sqrt(d)" (spaces ignored).
  static Scalar parse(std::string_view text);

  const mpq_class& rational_part() const { return rat_; }
  const mpq_class& surd_part() const { return surd_; }
  unsigned long radicand() const { return radicand_; }
  bool is_rational() const { return radicand_ == 0; }
  bool is_zero() const { return radicand_ == 0 && sgn(rat_) == 0; }

  Scalar inverse() const;
  double to_double() const;

  /// "p/q" or "p/q+r/s*sqrt(d)"; the denominator is always written.
  std::string str() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator-(Scalar a);
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.radicand_ == b.radicand_ && a.rat_ == b.rat_ && a.surd_ == b.surd_;
  }

 private:
  Scalar(mpq_class rat, mpq_class surd, unsigned long radicand);
  void canonicalize();
  static unsigned long joint_radicand(const Scalar& a, const Scalar& b);

  mpq_class rat_{0};
  mpq_class surd_{0};
  unsigned long radicand_ = 0;
};

inline Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
inline Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
inline Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
inline Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

Scalar pow(const Scalar& base, unsigned exponent);

/// Characteristic parameter b_j = sqrt(2j), j >= 1.
Scalar char_b(int j);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace krall
