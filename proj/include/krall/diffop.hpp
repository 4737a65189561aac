#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "krall/quasipoly.hpp"

namespace krall {

/// Ordinary differential operator sum_k a_k(x) D^k in normal order
/// (coefficients to the left of derivatives).
///
/// Coeff is a commutative differential ring element: Poly for the Weyl
/// algebra, QuasiPoly for operators with poles at x = -b.  A zero
/// coefficient is kept as a prototype so the zero operator still knows its
/// context.
template <class Coeff>
class LinearOp {
 public:
  explicit LinearOp(Coeff zero) : zero_(std::move(zero)) { zero_ *= Scalar(0); }

  static LinearOp multiplication(Coeff c) {
    LinearOp op(c);
    op.a_.push_back(std::move(c));
    op.trim();
    return op;
  }

  /// D^k
  static LinearOp derivation(int k, const Coeff& one) {
    LinearOp op(one);
    op.a_.assign(static_cast<std::size_t>(k) + 1, op.zero_);
    op.a_.back() = one;
    return op;
  }

  int order() const { return static_cast<int>(a_.size()) - 1; }
  bool is_zero() const { return a_.empty(); }
  const Coeff& coeff(int k) const {
    if (k < 0 || k > order()) return zero_;
    return a_[static_cast<std::size_t>(k)];
  }
  std::span<const Coeff> coeffs() const { return a_; }
  const Coeff& zero_coeff() const { return zero_; }

  LinearOp& operator+=(const LinearOp& rhs) {
    if (rhs.a_.size() > a_.size()) a_.resize(rhs.a_.size(), zero_);
    for (std::size_t k = 0; k < rhs.a_.size(); ++k) a_[k] += rhs.a_[k];
    trim();
    return *this;
  }

  LinearOp& operator-=(const LinearOp& rhs) {
    if (rhs.a_.size() > a_.size()) a_.resize(rhs.a_.size(), zero_);
    for (std::size_t k = 0; k < rhs.a_.size(); ++k) a_[k] -= rhs.a_[k];
    trim();
    return *this;
  }

  LinearOp& operator*=(const Scalar& s) {
    for (auto& c : a_) c *= s;
    trim();
    return *this;
  }

  /// Left multiplication by a function: c * L.
  LinearOp left_multiply(const Coeff& c) const {
    LinearOp out = *this;
    for (auto& a : out.a_) a = c * a;
    out.trim();
    return out;
  }

  /// Composition (*this) o rhs, renormalized with the Leibniz rule
  /// D^j o c = sum_i C(j,i) c^(i) D^(j-i).
  LinearOp compose(const LinearOp& rhs) const {
    LinearOp out(zero_);
    if (is_zero() || rhs.is_zero()) return out;
    const int p = order();
    const int q = rhs.order();
    out.a_.assign(static_cast<std::size_t>(p + q) + 1, zero_);
    // derivs[k][i] = (rhs coefficient k)^(i)
    std::vector<std::vector<Coeff>> derivs(static_cast<std::size_t>(q) + 1);
    for (int k = 0; k <= q; ++k) {
      auto& chain = derivs[static_cast<std::size_t>(k)];
      chain.push_back(rhs.a_[static_cast<std::size_t>(k)]);
      for (int i = 1; i <= p; ++i) chain.push_back(chain.back().derivative());
    }
    for (int j = 0; j <= p; ++j) {
      const Coeff& aj = a_[static_cast<std::size_t>(j)];
      if (aj.is_zero()) continue;
      Scalar binom(1);
      for (int i = 0; i <= j; ++i) {
        if (i > 0) binom = binom * Scalar(j - i + 1) / Scalar(i);
        for (int k = 0; k <= q; ++k) {
          const Coeff& d = derivs[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
          if (d.is_zero()) continue;
          out.a_[static_cast<std::size_t>(j - i + k)] += binom * (aj * d);
        }
      }
    }
    out.trim();
    return out;
  }

  /// sum_k a_k f^(k)
  Coeff apply(const Coeff& f) const {
    Coeff out = zero_;
    Coeff deriv = f;
    for (std::size_t k = 0; k < a_.size(); ++k) {
      if (k > 0) deriv = deriv.derivative();
      if (!a_[k].is_zero()) out += a_[k] * deriv;
    }
    return out;
  }

  friend bool operator==(const LinearOp& l, const LinearOp& r) { return l.a_ == r.a_; }

  std::string str(const std::string& d = "D") const {
    if (a_.empty()) return "0";
    std::string s;
    for (int k = order(); k >= 0; --k) {
      const Coeff& c = a_[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "[" + c.str() + "]";
      if (k > 0) s += "*" + d + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return s;
  }

 private:
  void trim() {
    while (!a_.empty() && a_.back().is_zero()) a_.pop_back();
  }

  std::vector<Coeff> a_;
  Coeff zero_;
};

template <class C>
LinearOp<C> operator+(LinearOp<C> l, const LinearOp<C>& r) {
  return l += r;
}
template <class C>
LinearOp<C> operator-(LinearOp<C> l, const LinearOp<C>& r) {
  return l -= r;
}
template <class C>
LinearOp<C> operator-(LinearOp<C> l) {
  return l *= Scalar(-1);
}
template <class C>
LinearOp<C> operator*(const LinearOp<C>& l, const LinearOp<C>& r) {
  return l.compose(r);
}
template <class C>
LinearOp<C> operator*(LinearOp<C> l, const Scalar& s) {
  return l *= s;
}
template <class C>
LinearOp<C> operator*(const Scalar& s, LinearOp<C> l) {
  return l *= s;
}
template <class C>
LinearOp<C> commutator(const LinearOp<C>& l, const LinearOp<C>& r) {
  return l * r - r * l;
}

/// Operators in x with coefficients in (x+b)^-1-localized polynomials.
using DiffOp = LinearOp<QuasiPoly>;
/// Operators with polynomial coefficients (Weyl algebra); used for both the
/// x side and the spectral z side of the bispectral maps.
using WeylOp = LinearOp<Poly>;

// Builders for DiffOp in a fixed b context.
DiffOp op_zero(const Scalar& b);
DiffOp op_constant(const Scalar& c, const Scalar& b);
DiffOp op_multiply(const QuasiPoly& q);
DiffOp op_multiply(const Poly& p, const Scalar& b);
DiffOp op_d(const Scalar& b, int k = 1);
/// (x + b)^k as a multiplication operator, k of either sign.
DiffOp op_x_plus_b(int k, const Scalar& b);

/// Plain formal adjoint sum_k (-D)^k o a_k.
DiffOp formal_adjoint(const DiffOp& op);
/// Substitution D -> D + shift(x) applied to a normal-ordered operator,
/// i.e. conjugation e^{-phi} o L o e^{phi} with phi' = shift.
DiffOp conjugate_derivative(const DiffOp& op, const QuasiPoly& shift);
/// Adjoint with respect to the weight e^{-x^2}: e^{x^2} o L* o e^{-x^2}.
DiffOp weighted_adjoint(const DiffOp& op);

/// Conversions; to_weyl throws DomainError if a coefficient has a pole.
WeylOp to_weyl(const DiffOp& op);
DiffOp to_diffop(const WeylOp& op, const Scalar& b);
/// True iff every coefficient is pole-free.
bool has_polynomial_coefficients(const DiffOp& op);

}  // namespace krall
