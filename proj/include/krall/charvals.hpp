#pragma once

#include <vector>

#include "krall/krall.hpp"

namespace krall {

/// Context at b_j = sqrt(2j).
class CharContext {
 public:
  explicit CharContext(int j);

  int j() const { return j_; }
  const Scalar& b() const { return ctx_.b(); }
  const KrallContext& krall() const { return ctx_; }

 private:
  int j_;
  KrallContext ctx_;
};

/// b hhat_j + j hhat_{j-1} = 0 and 2 hhat_j + b hhat_{j-1} = 0, and the two
/// relations are proportional.
bool degeneracy_check(const CharContext& c);

struct LimitForms {
  QuasiPoly u_j;        // Uhat h_j
  QuasiPoly v_j_minus1; // Vhat h_{j-1}
};
LimitForms limit_forms(const CharContext& c);

/// At a generic b: U hhat_n = (b^2 - 2n) uhat_n and V hhat_n = (b^2 - 2n - 2) vhat_n.
bool limit_consistency(const KrallContext& generic, int n);

/// T4 uhat_j = 4j hhat_{j-1}, T4^2 uhat_j = 0, and uhat_j not proportional
/// to hhat_{j-1}.
bool jordan_check(const CharContext& c);

/// Generic b: T4 uhat_n = b(b^2-2n-2) hhat_n + n(b^2-2n+2) hhat_{n-1}.
bool jordan_precursor_check(const KrallContext& generic, int n);

/// deg th_{j+1} < j + 1 at b_j.
bool degree_drop_check(const CharContext& c);

}  // namespace krall
