#include "krall/charvals.hpp"

#include "krall/errors.hpp"

namespace krall {

CharContext::CharContext(int j) : j_(j), ctx_(char_b(j)) {
  if (!(ctx_.lambda(j) == Scalar(0)) || !(ctx_.lambda(j - 1) == Scalar(0)))
    throw ConsistencyError("lambda does not vanish at n = j, j-1 for b_j");
}

bool degeneracy_check(const CharContext& c) {
  const KrallContext& k = c.krall();
  const int j = c.j();
  const QuasiPoly u = k.b() * k.hhat(j) + Scalar(j) * k.hhat(j - 1);
  const QuasiPoly v = Scalar(2) * k.hhat(j) + k.b() * k.hhat(j - 1);
  // the first relation is b/2 times the second since b^2 = 2j
  const bool proportional = u == (k.b() / Scalar(2)) * v;
  return u.is_zero() && v.is_zero() && proportional && !k.hhat(j).is_zero();
}

LimitForms limit_forms(const CharContext& c) {
  const KrallContext& k = c.krall();
  return {k.uhat(c.j()), k.vhat(c.j() - 1)};
}

bool limit_consistency(const KrallContext& k, int n) {
  QuasiPoly Uh = k.b() * k.hhat(n);
  if (n > 0) Uh += Scalar(n) * k.hhat(n - 1);
  const QuasiPoly Vh = Scalar(2) * k.hhat(n + 1) + k.b() * k.hhat(n);
  const QuasiPoly u = k.U_hat().apply(k.as_quasi(k.h(n)));
  const QuasiPoly v = k.V_hat().apply(k.as_quasi(k.h(n)));
  return Uh == (k.b2() - Scalar(2 * n)) * u && Vh == (k.b2() - Scalar(2 * n + 2)) * v;
}

bool jordan_check(const CharContext& c) {
  const KrallContext& k = c.krall();
  const int j = c.j();
  const QuasiPoly u = limit_forms(c).u_j;
  const QuasiPoly t = k.T4().apply(u);
  const QuasiPoly& target = k.hhat(j - 1);
  if (!(t == Scalar(4 * j) * target)) return false;
  if (!k.T4().apply(t).is_zero()) return false;
  // u is not a multiple of hhat_{j-1}: compare after scaling by a nonzero coefficient
  const Poly& un = u.numerator();
  const Poly& hn = target.numerator();
  if (u.pole_order() != target.pole_order() || un.degree() != hn.degree()) return true;
  return !(u * hn.leading() == target * un.leading());
}

bool jordan_precursor_check(const KrallContext& k, int n) {
  const Scalar& b = k.b();
  QuasiPoly rhs = b * (k.b2() - Scalar(2 * n + 2)) * k.hhat(n);
  if (n > 0) rhs += Scalar(n) * (k.b2() - Scalar(2 * n - 2)) * k.hhat(n - 1);
  return k.T4().apply(k.uhat(n)) == rhs;
}

bool degree_drop_check(const CharContext& c) {
  const int j = c.j();
  return c.krall().th(j + 1).degree() < j + 1;
}

}  // namespace krall
