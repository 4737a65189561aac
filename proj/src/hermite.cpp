#include "krall/hermite.hpp"

namespace krall {

Scalar nu(int n) {
  mpq_class v = 1;
  for (int i = 1; i <= n; ++i) v *= mpq_class(i, 2);
  return Scalar(v);
}

Scalar eta(const Poly& p, const Poly& q) {
  const auto a = to_hermite_basis(p * q);
  return a.empty() ? Scalar(0) : a.front();
}

std::vector<Poly> gen_series_coeffs(int n_max) {
  // exp(xz) = sum x^k z^k / k!,  exp(-z^2/4) = sum (-1/4)^j z^(2j) / j!
  std::vector<Poly> exz(static_cast<std::size_t>(n_max) + 1);
  mpq_class inv_fact = 1;
  for (int k = 0; k <= n_max; ++k) {
    if (k > 0) inv_fact /= k;
    exz[static_cast<std::size_t>(k)] = Poly::monomial(k, Scalar(inv_fact));
  }
  std::vector<Scalar> gauss(static_cast<std::size_t>(n_max) + 1);
  mpq_class g = 1;
  for (int j = 0; 2 * j <= n_max; ++j) {
    if (j > 0) g *= mpq_class(-1, 4 * j);
    gauss[static_cast<std::size_t>(2 * j)] = Scalar(g);
  }
  std::vector<Poly> out;
  mpz_class fact = 1;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) fact *= n;
    Poly c;
    for (int m = 0; m <= n; ++m) {
      const Scalar& gm = gauss[static_cast<std::size_t>(m)];
      if (!gm.is_zero()) c += gm * exz[static_cast<std::size_t>(n - m)];
    }
    out.push_back(c * Scalar(mpq_class(fact)));
  }
  return out;
}

DiffOp t2_operator(const Scalar& b) {
  return op_d(b, 2) - op_multiply(Poly::monomial(1, Scalar(2)), b) * op_d(b);
}

WeylOp t2_weyl() {
  return WeylOp::derivation(2, Poly(1)) -
         WeylOp::multiplication(Poly::monomial(1, Scalar(2))) * WeylOp::derivation(1, Poly(1));
}

HermiteContext::HermiteContext(int n_max) : h_(hermite_recurrence(n_max)) {
  for (int n = 0; n <= n_max; ++n) nu_.push_back(krall::nu(n));
}

}  // namespace krall
