#pragma once

#include <vector>

#include "krall/diffop.hpp"
#include "krall/poly.hpp"

namespace krall {

/// nu_n = 2^-n n!, the squared norm of h_n.
Scalar nu(int n);

/// Gaussian bilinear form (1/sqrt(pi)) int p q e^{-x^2} dx, computed as the
/// h_0 coefficient of the Hermite expansion of p q.
Scalar eta(const Poly& p, const Poly& q);

/// n! [z^n] exp(x z - z^2/4), for n = 0..n_max, by truncated series product.
std::vector<Poly> gen_series_coeffs(int n_max);

/// T2 = D^2 - 2x D in the given b context.
DiffOp t2_operator(const Scalar& b);
WeylOp t2_weyl();

/// Cached h_n and nu_n up to a fixed n_max.  Read-only after construction.
class HermiteContext {
 public:
  explicit HermiteContext(int n_max);

  int n_max() const { return static_cast<int>(h_.size()) - 1; }
  const Poly& h(int n) const { return h_.at(static_cast<std::size_t>(n)); }
  const Scalar& nu(int n) const { return nu_.at(static_cast<std::size_t>(n)); }

 private:
  std::vector<Poly> h_;
  std::vector<Scalar> nu_;
};

}  // namespace krall
