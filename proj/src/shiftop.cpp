#include "krall/shiftop.hpp"

namespace krall {

RatN::RatN(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  reduce();
}

void RatN::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    const Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  const Scalar lead = den_.leading();
  if (!(lead == Scalar(1))) {
    num_ /= lead;
    den_ /= lead;
  }
}

RatN RatN::shifted(int k) const {
  if (k == 0) return *this;
  return RatN(num_.taylor_shift(Scalar(k)), den_.taylor_shift(Scalar(k)));
}

Scalar RatN::operator()(const Scalar& n) const {
  const Scalar d = den_(n);
  if (d.is_zero()) throw EvaluationError("coefficient " + str() + " has a pole at n = " + n.str());
  return num_(n) / d;
}

RatN& RatN::operator+=(const RatN& r) {
  if (den_ == r.den_) {
    num_ += r.num_;
  } else {
    num_ = num_ * r.den_ + r.num_ * den_;
    den_ = den_ * r.den_;
  }
  reduce();
  return *this;
}

RatN& RatN::operator-=(const RatN& r) { return *this += -r; }

RatN& RatN::operator*=(const RatN& r) {
  num_ *= r.num_;
  den_ *= r.den_;
  reduce();
  return *this;
}

RatN& RatN::operator/=(const RatN& r) {
  if (r.is_zero()) throw ArithmeticError("division by the zero rational function");
  num_ *= r.den_;
  den_ *= r.num_;
  reduce();
  return *this;
}

std::string RatN::str() const {
  if (den_ == Poly(1)) return num_.str("n");
  return "(" + num_.str("n") + ")/(" + den_.str("n") + ")";
}

ShiftOp ShiftOp::shift(int k, const Scalar& b) {
  ShiftOp op(b);
  op.terms_.emplace(k, RatN(1));
  return op;
}

ShiftOp ShiftOp::multiplication(RatN c, const Scalar& b) {
  ShiftOp op(b);
  op.add_term(0, c);
  return op;
}

RatN ShiftOp::coefficient(int k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? RatN() : it->second;
}

Scalar ShiftOp::coefficient_at(int k, int n) const { return coefficient(k)(Scalar(n)); }

void ShiftOp::add_term(int k, const RatN& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void ShiftOp::require_same_b(const ShiftOp& r) const {
  if (!(b_ == r.b_)) throw ContextError("shift operators with different b");
}

ShiftOp& ShiftOp::operator+=(const ShiftOp& r) {
  require_same_b(r);
  for (const auto& [k, c] : r.terms_) add_term(k, c);
  return *this;
}

ShiftOp& ShiftOp::operator-=(const ShiftOp& r) {
  require_same_b(r);
  for (const auto& [k, c] : r.terms_) add_term(k, -c);
  return *this;
}

ShiftOp& ShiftOp::operator*=(const RatN& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

ShiftOp ShiftOp::compose(const ShiftOp& r) const {
  require_same_b(r);
  ShiftOp out(b_);
  for (const auto& [k, a] : terms_)
    for (const auto& [m, c] : r.terms_) out.add_term(k + m, a * c.shifted(k));
  return out;
}

std::string ShiftOp::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += "[" + it->second.str() + "]";
    if (it->first != 0) s += "*S^" + std::to_string(it->first);
  }
  return s;
}

}  // namespace krall
