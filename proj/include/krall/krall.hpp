#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "krall/diffop.hpp"
#include "krall/report.hpp"

namespace krall {

/// Operators and quasi-polynomials for one value of b != 0.
///
/// Every operator identity that the construction relies on is verified once
/// in the constructor.  h, hhat are cached on first use behind a mutex; the
/// caches only grow and returned references stay valid.
class KrallContext {
 public:
  explicit KrallContext(Scalar b);
  KrallContext(KrallContext&&) noexcept;
  KrallContext& operator=(KrallContext&&) noexcept;
  ~KrallContext();

  const Scalar& b() const { return b_; }
  const Scalar& b2() const { return b2_; }
  /// j with b^2 = 2j, if any.
  std::optional<int> characteristic_index() const { return char_j_; }

  const DiffOp& T2() const { return T2_; }
  const DiffOp& U() const { return U_; }
  const DiffOp& V() const { return V_; }
  const DiffOp& U_hat() const { return Uh_; }
  const DiffOp& V_hat() const { return Vh_; }
  const DiffOp& A() const { return A_; }
  const DiffOp& A_adj() const { return Aadj_; }
  const DiffOp& T4() const { return T4_; }
  const DiffOp& T4_tilde() const { return T4t_; }
  const DiffOp& T6() const { return T6_; }

  /// (t + b^2)(t + b^2 - 2)
  Scalar p2(const Scalar& t) const;
  DiffOp p2_of(const DiffOp& t) const;
  /// lambda_b(n) = p2(-2n) = (b^2 - 2n)(b^2 - 2n - 2)
  Scalar lambda(int n) const;

  const Poly& h(int n) const;
  const QuasiPoly& hhat(int n) const;
  /// (b^2 - 2n) h_n - (n h_{n-1} + b h_n) / (x + b)
  QuasiPoly hhat_formula(int n) const;
  /// (x + b) hhat_n as a polynomial; argument is the index n + 1 >= 1.
  Poly th(int n_plus_1) const;
  QuasiPoly uhat(int n) const;
  QuasiPoly vhat(int n) const;

  QuasiPoly as_quasi(const Poly& p) const { return QuasiPoly::polynomial(p, b_); }

 private:
  struct Cache;

  Scalar b_;
  Scalar b2_;
  std::optional<int> char_j_;
  DiffOp T2_, U_, V_, Uh_, Vh_, A_, Aadj_, T4_, T4t_, T6_;
  std::unique_ptr<Cache> cache_;
};

/// Operator identities of the construction, each as an exact equality.
std::vector<CheckResult> identity_suite(const KrallContext& ctx);

/// n! [z^n] of (z^2 - 2zx + b^2 - (z+b)/(x+b)) exp(xz - z^2/4), n <= n_max.
std::vector<QuasiPoly> hhat_generating_series(const KrallContext& ctx, int n_max);

}  // namespace krall
