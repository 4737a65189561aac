#include "krall/quasipoly.hpp"

#include <algorithm>
#include <ostream>

#include "krall/errors.hpp"

namespace krall {

QuasiPoly::QuasiPoly(Poly numerator, int pole_order, Scalar b)
    : num_(std::move(numerator)), pole_(pole_order), b_(std::move(b)) {
  if (pole_ < 0) {
    num_ *= pow(Poly::linear(b_), static_cast<unsigned>(-pole_));
    pole_ = 0;
  }
  normalize();
}

QuasiPoly QuasiPoly::x_plus_b_power(int k, const Scalar& b) {
  if (k >= 0) return polynomial(pow(Poly::linear(b), static_cast<unsigned>(k)), b);
  return QuasiPoly(Poly(1), -k, b);
}

void QuasiPoly::normalize() {
  if (num_.is_zero()) {
    pole_ = 0;
    return;
  }
  while (pole_ > 0) {
    auto [quot, rem] = num_.divide_linear(b_);
    if (!rem.is_zero()) break;
    num_ = std::move(quot);
    --pole_;
  }
}

void QuasiPoly::require_same_b(const QuasiPoly& other) const {
  if (!(b_ == other.b_))
    throw ContextError("quasi-polynomials with different b: " + b_.str() + " vs " + other.b_.str());
}

const Poly& QuasiPoly::as_poly() const {
  if (pole_ != 0) throw DomainError("quasi-polynomial has a pole at x = -b: " + str());
  return num_;
}

QuasiPoly QuasiPoly::derivative(int times) const {
  QuasiPoly out = *this;
  for (int t = 0; t < times; ++t) {
    if (out.pole_ == 0) {
      out.num_ = out.num_.derivative();
      continue;
    }
    // (N/(x+b)^m)' = (N'(x+b) - m N) / (x+b)^(m+1)
    Poly next = out.num_.derivative() * Poly::linear(b_) - Scalar(out.pole_) * out.num_;
    out = QuasiPoly(std::move(next), out.pole_ + 1, b_);
  }
  return out;
}

Scalar QuasiPoly::operator()(const Scalar& x) const {
  Scalar value = num_(x);
  if (pole_ == 0) return value;
  const Scalar base = x + b_;
  if (base.is_zero()) throw ArithmeticError("quasi-polynomial evaluated at its pole");
  return value / pow(base, static_cast<unsigned>(pole_));
}

QuasiPoly& QuasiPoly::operator+=(const QuasiPoly& rhs) {
  require_same_b(rhs);
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int m = std::max(pole_, rhs.pole_);
  const Poly lin = Poly::linear(b_);
  Poly lhs_num = num_ * pow(lin, static_cast<unsigned>(m - pole_));
  lhs_num += rhs.num_ * pow(lin, static_cast<unsigned>(m - rhs.pole_));
  num_ = std::move(lhs_num);
  pole_ = m;
  normalize();
  return *this;
}

QuasiPoly& QuasiPoly::operator-=(const QuasiPoly& rhs) { return *this += -rhs; }

QuasiPoly& QuasiPoly::operator*=(const QuasiPoly& rhs) {
  require_same_b(rhs);
  num_ *= rhs.num_;
  pole_ += rhs.pole_;
  normalize();
  return *this;
}

QuasiPoly& QuasiPoly::operator*=(const Scalar& s) {
  num_ *= s;
  if (num_.is_zero()) pole_ = 0;
  return *this;
}

QuasiPoly& QuasiPoly::operator/=(const Scalar& s) {
  num_ /= s;
  return *this;
}

QuasiPoly operator-(QuasiPoly q) {
  q.num_ = -q.num_;
  return q;
}

std::string QuasiPoly::str() const {
  if (pole_ == 0) return num_.str();
  std::string den = "(x + " + b_.str() + ")";
  if (pole_ > 1) den += "^" + std::to_string(pole_);
  return "(" + num_.str() + ") / " + den;
}

std::ostream& operator<<(std::ostream& os, const QuasiPoly& q) { return os << q.str(); }

Scalar LaurentData::at(int power) const {
  const int idx = power - lowest;
  if (idx < 0 || idx >= static_cast<int>(coeffs.size())) return Scalar(0);
  return coeffs[static_cast<std::size_t>(idx)];
}

LaurentData laurent_at_pole(const QuasiPoly& f, int depth) {
  const int m = f.pole_order();
  if (depth < -m) throw DomainError("Laurent depth below the pole order");
  // Recentre the numerator: N(x) = sum c_k (x+b)^k.
  const Poly centred = f.numerator().taylor_shift(-f.b());
  LaurentData out;
  out.lowest = -m;
  for (int power = -m; power <= depth; ++power) out.coeffs.push_back(centred.coeff(power + m));
  return out;
}

Scalar weighted_residue(const QuasiPoly& f) {
  if (f.pole_order() > 2) throw DomainError("weighted residue supports pole order <= 2");
  const LaurentData l = laurent_at_pole(f, 0);
  // e^{-x^2} = e^{-b^2} (1 + 2b (x+b) + ...)
  return l.at(-1) + Scalar(2) * f.b() * l.at(-2);
}

}  // namespace krall
