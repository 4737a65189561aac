#include "krall/krall.hpp"

#include <functional>

#include "krall/errors.hpp"
#include "krall/hermite.hpp"

namespace krall {

struct KrallContext::Cache {
  std::mutex mu;
  std::deque<Poly> h;
  std::deque<QuasiPoly> hhat;
};

namespace {

std::optional<int> characteristic_index_of(const Scalar& b2) {
  if (!b2.is_rational()) return std::nullopt;
  const mpq_class half = b2.rational_part() / 2;
  if (half.get_den() != 1 || sgn(half) <= 0 || !half.get_num().fits_sint_p()) return std::nullopt;
  return static_cast<int>(half.get_num().get_si());
}

}  // namespace

KrallContext::KrallContext(Scalar b)
    : b_(std::move(b)),
      b2_(b_ * b_),
      T2_(op_zero(b_)),
      U_(op_zero(b_)),
      V_(op_zero(b_)),
      Uh_(op_zero(b_)),
      Vh_(op_zero(b_)),
      A_(op_zero(b_)),
      Aadj_(op_zero(b_)),
      T4_(op_zero(b_)),
      T4t_(op_zero(b_)),
      T6_(op_zero(b_)),
      cache_(std::make_unique<Cache>()) {
  if (b_.is_zero())
    throw UnsupportedParameter("b = 0 is the exceptional Hermite (Wronskian) case and is not supported");
  char_j_ = characteristic_index_of(b2_);

  const DiffOp inv = op_x_plus_b(-1, b_);
  const DiffOp T2b = t2_operator(b_) + op_constant(b2_, b_);
  T2_ = t2_operator(b_);
  U_ = op_d(b_) + op_constant(b_, b_);
  V_ = op_multiply(Poly::linear(b_) + Poly::x(), b_) - op_d(b_);
  Uh_ = U_ - inv;
  Vh_ = V_ + inv;
  A_ = T2b - inv * U_;
  Aadj_ = T2b - V_ * inv;
  T4_ = A_ * Aadj_;
  T4t_ = Scalar(4) * (T2b - op_constant(1, b_)) * A_ - Scalar(3) * p2_of(T2_);
  T6_ = A_ * T2_ * Aadj_;

  if (!(Aadj_ * A_ == p2_of(T2_)))
    throw ConsistencyError("A^dag A != p2(T2) at b = " + b_.str());
  const DiffOp xb = op_x_plus_b(1, b_);
  if (!(xb * T4_ == T4t_ * xb))
    throw ConsistencyError("(x+b) T4hat != T4tilde (x+b) at b = " + b_.str());
}

KrallContext::KrallContext(KrallContext&&) noexcept = default;
KrallContext& KrallContext::operator=(KrallContext&&) noexcept = default;
KrallContext::~KrallContext() = default;

Scalar KrallContext::p2(const Scalar& t) const { return (t + b2_) * (t + b2_ - Scalar(2)); }

DiffOp KrallContext::p2_of(const DiffOp& t) const {
  const DiffOp s = t + op_constant(b2_, b_);
  return s * (s - op_constant(2, b_));
}

Scalar KrallContext::lambda(int n) const { return p2(Scalar(-2 * n)); }

const Poly& KrallContext::h(int n) const {
  if (n < 0) throw DomainError("negative Hermite index");
  std::lock_guard lock(cache_->mu);
  auto& h = cache_->h;
  while (static_cast<int>(h.size()) <= n) {
    const int k = static_cast<int>(h.size());
    Poly next = k == 0   ? Poly(1)
                : k == 1 ? Poly::x()
                         : Poly::x() * h[static_cast<std::size_t>(k - 1)] -
                               Scalar(k - 1, 2) * h[static_cast<std::size_t>(k - 2)];
    if (!(next == hermite_closed_form(k)))
      throw ConsistencyError("Hermite recurrence and closed form disagree at n = " + std::to_string(k));
    h.push_back(std::move(next));
  }
  return h[static_cast<std::size_t>(n)];
}

QuasiPoly KrallContext::hhat_formula(int n) const {
  const Poly& hn = h(n);
  Poly tail = b_ * hn;
  if (n > 0) tail += Scalar(n) * h(n - 1);
  return QuasiPoly::polynomial((b2_ - Scalar(2 * n)) * hn, b_) - QuasiPoly(tail, 1, b_);
}

const QuasiPoly& KrallContext::hhat(int n) const {
  if (n < 0) throw DomainError("negative index");
  {
    std::lock_guard lock(cache_->mu);
    if (n < static_cast<int>(cache_->hhat.size())) return cache_->hhat[static_cast<std::size_t>(n)];
  }
  // Build outside the lock (h() takes it too), then publish in order.
  std::vector<QuasiPoly> fresh;
  int start;
  {
    std::lock_guard lock(cache_->mu);
    start = static_cast<int>(cache_->hhat.size());
  }
  for (int k = start; k <= n; ++k) {
    QuasiPoly formula = hhat_formula(k);
    if (!(formula == A_.apply(as_quasi(h(k)))))
      throw ConsistencyError("hhat formula and A h_n disagree at n = " + std::to_string(k));
    fresh.push_back(std::move(formula));
  }
  std::lock_guard lock(cache_->mu);
  for (int k = static_cast<int>(cache_->hhat.size()); k <= n; ++k)
    cache_->hhat.push_back(fresh[static_cast<std::size_t>(k - start)]);
  return cache_->hhat[static_cast<std::size_t>(n)];
}

Poly KrallContext::th(int n_plus_1) const {
  if (n_plus_1 < 1) throw DomainError("th index must be >= 1");
  return (QuasiPoly::x_plus_b_power(1, b_) * hhat(n_plus_1 - 1)).as_poly();
}

QuasiPoly KrallContext::uhat(int n) const {
  QuasiPoly u = Uh_.apply(as_quasi(h(n)));
  const Scalar den = b2_ - Scalar(2 * n);
  if (!den.is_zero()) {
    QuasiPoly quotient = b_ * hhat(n);
    if (n > 0) quotient += Scalar(n) * hhat(n - 1);
    if (!(quotient / den == u)) throw ConsistencyError("uhat quotient form mismatch at n = " + std::to_string(n));
  }
  return u;
}

QuasiPoly KrallContext::vhat(int n) const {
  QuasiPoly v = Vh_.apply(as_quasi(h(n)));
  const Scalar den = b2_ - Scalar(2 * n + 2);
  if (!den.is_zero()) {
    const QuasiPoly quotient = Scalar(2) * hhat(n + 1) + b_ * hhat(n);
    if (!(quotient / den == v)) throw ConsistencyError("vhat quotient form mismatch at n = " + std::to_string(n));
  }
  return v;
}

std::vector<CheckResult> identity_suite(const KrallContext& ctx) {
  const Scalar& b = ctx.b();
  const DiffOp one = op_constant(1, b);
  const DiffOp xb = op_x_plus_b(1, b);
  const DiffOp xb2 = op_x_plus_b(2, b);
  const DiffOp xb3 = op_x_plus_b(3, b);
  const DiffOp inv = op_x_plus_b(-1, b);
  const DiffOp inv2 = op_x_plus_b(-2, b);
  const DiffOp D = op_d(b);
  const DiffOp T2b = ctx.T2() + op_constant(ctx.b2(), b);
  const DiffOp& U = ctx.U();
  const DiffOp& V = ctx.V();
  const DiffOp& A = ctx.A();

  std::vector<CheckResult> out;
  auto add = [&](const std::string& name, const std::string& ref, const std::function<bool()>& f) {
    CheckResult r{name, ref, b.str(), std::nullopt, false, std::nullopt, {}};
    try {
      r.pass = f();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  };

  add("A^dag A = p2(T2)", "pT02", [&] { return ctx.A_adj() * A == ctx.p2_of(ctx.T2()); });
  add("T4hat expansion", "hT4", [&] {
    const DiffOp rhs = ctx.p2_of(ctx.T2()) + Scalar(4) * inv * (Scalar(2) * D + op_constant(b, b)) -
                       Scalar(4) * inv2 * (op_d(b, 2) + Scalar(2) * b * D + op_constant(ctx.b2() + Scalar(1), b)) +
                       Scalar(8) * op_x_plus_b(-3, b) * U - Scalar(8) * op_x_plus_b(-4, b);
    return ctx.T4() == rhs;
  });
  add("(x+b) T4hat = T4tilde (x+b)", "hcT4tcT4", [&] { return xb * ctx.T4() == ctx.T4_tilde() * xb; });
  add("T4tilde leading terms", "tT4", [&] {
    const auto& t = ctx.T4_tilde();
    const QuasiPoly c3 = QuasiPoly::polynomial(Poly::monomial(1, Scalar(-4)), b) +
                         Scalar(-4) * QuasiPoly::x_plus_b_power(-1, b);
    return t.order() == 4 && t.coeff(4) == QuasiPoly::constant(1, b) && t.coeff(3) == c3;
  });
  add("A^dag is the weighted adjoint of A", "hAadjdef", [&] { return weighted_adjoint(A) == ctx.A_adj(); });
  add("V is the weighted adjoint of U", "Vxdef", [&] { return weighted_adjoint(U) == V; });
  add("T2 + b^2 = -VU + 2b(x+b)", "T2UV", [&] { return T2b == Scalar(2) * b * xb - V * U; });
  add("U + V = 2(x+b)", "UVJ", [&] { return U + V == Scalar(2) * xb; });
  add("[U,V] = 2", "UVbrak", [&] { return commutator(U, V) == Scalar(2) * one; });
  add("U (x+b)^-1 = (x+b)^-1 U - (x+b)^-2", "Uconj", [&] { return U * inv == inv * U - inv2; });
  add("V (x+b)^-1 = (x+b)^-1 V + (x+b)^-2", "Vconj", [&] { return V * inv == inv * V + inv2; });
  add("A (x+b) = (x+b) A^dag", "A2conj", [&] { return A * xb == xb * ctx.A_adj(); });
  add("T2 (x+b) = (x+b) T2 + U - V", "T2conj", [&] { return ctx.T2() * xb == xb * ctx.T2() + U - V; });
  add("Uhat = (x+b) U (x+b)^-1", "hUxdef", [&] { return xb * U * inv == ctx.U_hat(); });
  add("Vhat = (x+b) V (x+b)^-1", "hVxdef", [&] { return xb * V * inv == ctx.V_hat(); });
  add("A U = Uhat (T2 + b^2)", "hAU", [&] { return A * U == ctx.U_hat() * T2b; });
  add("A V = Vhat (T2 + b^2 - 2)", "hAV", [&] { return A * V == ctx.V_hat() * (T2b - Scalar(2) * one); });
  add("[x+b, T2] = V - U", "rr5idents", [&] { return commutator(xb, ctx.T2()) == V - U; });
  add("[x+b, A] = V - U + (x+b)^-1", "rr5idents", [&] { return commutator(xb, A) == V - U + inv; });
  add("[(x+b)^2, A] = 2(x+b)(V-U) = V^2 - U^2 + 2", "rr5idents", [&] {
    const DiffOp c = commutator(xb2, A);
    return c == Scalar(2) * xb * (V - U) && c == V * V - U * U + Scalar(2) * one;
  });
  add("Vhat V - Uhat U = V^2 - U^2 + 2", "rr5idents", [&] {
    return ctx.V_hat() * V - ctx.U_hat() * U == V * V - U * U + Scalar(2) * one;
  });
  add("(x+b)^3 A = A (x+b)^3 + 3/2 (Vhat V - Uhat U)(x+b) + 3/2 (Vhat + Uhat)", "rr7", [&] {
    const DiffOp rhs = A * xb3 + Scalar(3, 2) * (ctx.V_hat() * V - ctx.U_hat() * U) * xb +
                       Scalar(3, 2) * (ctx.V_hat() + ctx.U_hat());
    return xb3 * A == rhs;
  });
  add("[T4hat, T6hat] = 0", "T6", [&] {
    return ctx.T6().order() == 6 && commutator(ctx.T4(), ctx.T6()).is_zero();
  });
  return out;
}

std::vector<QuasiPoly> hhat_generating_series(const KrallContext& ctx, int n_max) {
  const Scalar& b = ctx.b();
  const auto g = gen_series_coeffs(n_max);
  const Poly x = Poly::x();
  std::vector<QuasiPoly> out;
  for (int n = 0; n <= n_max; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    Poly poly_part = ctx.b2() * g[idx];
    Poly pole_part = b * g[idx];
    if (n >= 1) {
      poly_part -= Scalar(2 * n) * x * g[idx - 1];
      pole_part += Scalar(n) * g[idx - 1];
    }
    if (n >= 2) poly_part += Scalar(n * (n - 1)) * g[idx - 2];
    out.push_back(QuasiPoly::polynomial(poly_part, b) - QuasiPoly(pole_part, 1, b));
  }
  return out;
}

}  // namespace krall
