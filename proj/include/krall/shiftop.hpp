#pragma once

#include <map>
#include <string>
#include <vector>

#include "krall/errors.hpp"
#include "krall/poly.hpp"

namespace krall {

/// Rational function of the index n: num(n) / den(n), reduced, den monic.
class RatN {
 public:
  RatN() : den_(1) {}
  RatN(Scalar c) : num_(std::move(c)), den_(1) {}  // NOLINT
  RatN(long c) : RatN(Scalar(c)) {}                // NOLINT
  RatN(Poly num, Poly den);
  static RatN n() { return RatN(Poly::x(), Poly(1)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// r(n + k)
  RatN shifted(int k) const;
  /// Throws EvaluationError at a pole.
  Scalar operator()(const Scalar& n) const;

  RatN& operator+=(const RatN& r);
  RatN& operator-=(const RatN& r);
  RatN& operator*=(const RatN& r);
  RatN& operator/=(const RatN& r);
  friend RatN operator-(RatN r) {
    r.num_ = -r.num_;
    return r;
  }
  friend bool operator==(const RatN& a, const RatN& c) { return a.num_ == c.num_ && a.den_ == c.den_; }

  std::string str() const;

 private:
  void reduce();
  Poly num_;
  Poly den_;
};

inline RatN operator+(RatN a, const RatN& c) { return a += c; }
inline RatN operator-(RatN a, const RatN& c) { return a -= c; }
inline RatN operator*(RatN a, const RatN& c) { return a *= c; }
inline RatN operator/(RatN a, const RatN& c) { return a /= c; }

/// Difference operator sum_k c_k(n) S^k with (S f)_n = f_{n+1}.
class ShiftOp {
 public:
  explicit ShiftOp(Scalar b) : b_(std::move(b)) {}
  static ShiftOp shift(int k, const Scalar& b);
  static ShiftOp multiplication(RatN c, const Scalar& b);

  const Scalar& b() const { return b_; }
  const std::map<int, RatN>& terms() const { return terms_; }
  RatN coefficient(int k) const;
  /// c_k(n); EvaluationError at a pole.
  Scalar coefficient_at(int k, int n) const;
  bool is_zero() const { return terms_.empty(); }
  int min_shift() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_shift() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  ShiftOp& operator+=(const ShiftOp& r);
  ShiftOp& operator-=(const ShiftOp& r);
  ShiftOp& operator*=(const RatN& s);
  /// (a S^k) o (c S^m) = a c(n+k) S^(k+m)
  ShiftOp compose(const ShiftOp& r) const;

  friend bool operator==(const ShiftOp& a, const ShiftOp& c) { return a.b_ == c.b_ && a.terms_ == c.terms_; }
  std::string str() const;

 private:
  void add_term(int k, const RatN& c);
  void require_same_b(const ShiftOp& r) const;
  Scalar b_;
  std::map<int, RatN> terms_;
};

inline ShiftOp operator+(ShiftOp a, const ShiftOp& c) { return a += c; }
inline ShiftOp operator-(ShiftOp a, const ShiftOp& c) { return a -= c; }
inline ShiftOp operator*(const ShiftOp& a, const ShiftOp& c) { return a.compose(c); }
inline ShiftOp operator*(const RatN& s, ShiftOp a) { return a *= s; }

/// Values f_lo .. f_hi of a sequence around a centre index.  Negative
/// indices are zero by convention and never generated.
template <class T>
class SeqWindow {
 public:
  template <class Gen>
  SeqWindow(int center, int lo, int hi, Gen&& gen, const T& zero) : center_(center), lo_(lo) {
    for (int i = lo; i <= hi; ++i) values_.push_back(i < 0 ? zero : gen(i));
  }
  int center() const { return center_; }
  bool covers(int i) const { return i >= lo_ && i < lo_ + static_cast<int>(values_.size()); }
  static bool is_padding(int i) { return i < 0; }
  const T& at(int i) const {
    if (!covers(i)) throw DomainError("index " + std::to_string(i) + " outside sequence window");
    return values_[static_cast<std::size_t>(i - lo_)];
  }

 private:
  int center_;
  int lo_;
  std::vector<T> values_;
};

/// (op f)_n on a window centred at n.  A nonzero coefficient on a padded
/// (negative) index throws ConsistencyError.
template <class T>
T apply(const ShiftOp& op, const SeqWindow<T>& w, T acc) {
  const int n = w.center();
  for (const auto& [k, c] : op.terms()) {
    const int idx = n + k;
    const Scalar coef = c(Scalar(n));
    if (coef.is_zero()) continue;
    if (SeqWindow<T>::is_padding(idx))
      throw ConsistencyError("nonzero coefficient of S^" + std::to_string(k) + " at n = " + std::to_string(n) +
                             " consumes negative index " + std::to_string(idx));
    acc += coef * w.at(idx);
  }
  return acc;
}

template <class T, class Gen>
T apply_at(const ShiftOp& op, int n, Gen&& gen, const T& zero) {
  const SeqWindow<T> w(n, n + op.min_shift(), n + op.max_shift(), gen, zero);
  return apply(op, w, zero);
}

}  // namespace krall
