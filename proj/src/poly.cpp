#include "krall/poly.hpp"

#include <ostream>
#include <sstream>

#include "krall/errors.hpp"

namespace krall {

Poly::Poly(Scalar constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int power, Scalar coeff) {
  std::vector<Scalar> c(static_cast<std::size_t>(power) + 1);
  c.back() = std::move(coeff);
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return Scalar(0);
  return c_[static_cast<std::size_t>(k)];
}

const Scalar& Poly::leading() const {
  if (c_.empty()) throw ArithmeticError("leading coefficient of the zero polynomial");
  return c_.back();
}

Poly Poly::derivative(int times) const {
  if (times <= 0) return *this;
  if (degree() < times) return Poly();
  std::vector<Scalar> d(c_.size() - static_cast<std::size_t>(times));
  for (std::size_t k = 0; k < d.size(); ++k) {
    long falling = 1;
    for (int i = 0; i < times; ++i) falling *= static_cast<long>(k) + times - i;
    d[k] = c_[k + static_cast<std::size_t>(times)] * Scalar(falling);
  }
  return Poly(std::move(d));
}

Scalar Poly::operator()(const Scalar& at) const {
  Scalar acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Poly Poly::taylor_shift(const Scalar& shift) const {
  // Repeated synthetic division by (t - shift) gives the Taylor coefficients
  // at x = shift, lowest first.
  std::vector<Scalar> c = c_;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t k = n - 1; k > i; --k) c[k - 1] += shift * c[k];
  return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (degree() < divisor.degree()) return {Poly(), *this};
  std::vector<Scalar> rem = c_;
  const int dd = divisor.degree();
  std::vector<Scalar> quot(static_cast<std::size_t>(degree() - dd) + 1);
  const Scalar lead_inv = divisor.leading().inverse();
  for (int k = degree(); k >= dd; --k) {
    const Scalar q = rem[static_cast<std::size_t>(k)] * lead_inv;
    quot[static_cast<std::size_t>(k - dd)] = q;
    if (q.is_zero()) continue;
    for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k - dd + i)] -= q * divisor.c_[static_cast<std::size_t>(i)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

std::pair<Poly, Scalar> Poly::divide_linear(const Scalar& shift) const {
  if (c_.empty()) return {Poly(), Scalar(0)};
  // Synthetic division by x - root with root = -shift.
  const Scalar root = -shift;
  std::vector<Scalar> quot(c_.size() - 1);
  Scalar carry = c_.back();
  for (std::size_t k = c_.size() - 1; k-- > 0;) {
    quot[k] = carry;
    carry = c_[k] + carry * root;
  }
  return {Poly(std::move(quot)), carry};
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<Scalar> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly& Poly::operator/=(const Scalar& s) {
  if (s.is_zero()) throw ArithmeticError("polynomial divided by zero scalar");
  for (auto& c : c_) c /= s;
  return *this;
}

Poly operator-(Poly p) {
  for (auto& c : p.c_) c = -c;
  return p;
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a / a.leading();
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    if (!c.is_rational()) cs = "(" + cs + ")";
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << cs;
    } else {
      os << cs << "*" << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

// ---------------------------------------------------------------------------
// Hermite polynomials and basis transform

Poly hermite_closed_form(int n) {
  // h_n = sum_j n!/((n-2j)! j!) (-4)^-j x^(n-2j)
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
  mpz_class n_fact = 1;
  for (int i = 2; i <= n; ++i) n_fact *= i;
  for (int j = 0; 2 * j <= n; ++j) {
    mpz_class denom = 1;
    for (int i = 2; i <= n - 2 * j; ++i) denom *= i;
    for (int i = 2; i <= j; ++i) denom *= i;
    mpz_class four_j = 1;
    for (int i = 0; i < j; ++i) four_j *= 4;
    mpq_class term(n_fact, denom * four_j);
    term.canonicalize();
    if (j % 2 == 1) term = -term;
    c[static_cast<std::size_t>(n - 2 * j)] = Scalar(term);
  }
  return Poly(std::move(c));
}

std::vector<Poly> hermite_recurrence(int n_max) {
  std::vector<Poly> h;
  h.reserve(static_cast<std::size_t>(n_max) + 1);
  h.emplace_back(1);
  if (n_max >= 1) h.push_back(Poly::x());
  for (int n = 1; n < n_max; ++n) {
    h.push_back(Poly::x() * h[static_cast<std::size_t>(n)] -
                Scalar(n, 2) * h[static_cast<std::size_t>(n - 1)]);
  }
  return h;
}

Poly hermite_poly(int n) {
  Poly closed = hermite_closed_form(n);
  if (!(closed == hermite_recurrence(n).back()))
    throw ConsistencyError("Hermite closed form and recurrence disagree at n = " + std::to_string(n));
  return closed;
}

std::vector<Scalar> to_hermite_basis(const Poly& p) {
  if (p.is_zero()) return {};
  const auto h = hermite_recurrence(p.degree());
  std::vector<Scalar> a(static_cast<std::size_t>(p.degree()) + 1);
  Poly rest = p;
  for (int k = p.degree(); k >= 0; --k) {
    const Scalar top = rest.coeff(k);
    a[static_cast<std::size_t>(k)] = top;
    if (!top.is_zero()) rest -= top * h[static_cast<std::size_t>(k)];
  }
  return a;
}

Poly from_hermite_basis(std::span<const Scalar> a) {
  if (a.empty()) return Poly();
  const auto h = hermite_recurrence(static_cast<int>(a.size()) - 1);
  Poly out;
  for (std::size_t k = 0; k < a.size(); ++k) out += a[k] * h[k];
  return out;
}

}  // namespace krall
