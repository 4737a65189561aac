#include "krall/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "krall/errors.hpp"

namespace krall {

namespace {

mpq_class parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    const bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                    ((c == '-' || c == '+') && i == 0);
    if (!ok) throw std::invalid_argument("bad rational literal '" + text + "'");
  }
  std::string body = text.front() == '+' ? text.substr(1) : text;
  mpq_class q;
  if (q.set_str(body, 10) != 0) throw std::invalid_argument("bad rational literal '" + text + "'");
  if (sgn(q.get_den()) == 0) throw ArithmeticError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace

Scalar::Scalar(long num, long den) : rat_(num, 1) {
  if (den == 0) throw ArithmeticError("zero denominator");
  rat_ /= den;
  rat_.canonicalize();
}

Scalar::Scalar(mpq_class value) : rat_(std::move(value)) { rat_.canonicalize(); }

Scalar::Scalar(mpq_class rat, mpq_class surd, unsigned long radicand)
    : rat_(std::move(rat)), surd_(std::move(surd)), radicand_(radicand) {
  canonicalize();
}

void Scalar::canonicalize() {
  rat_.canonicalize();
  surd_.canonicalize();
  if (sgn(surd_) == 0 || radicand_ == 0) {
    surd_ = 0;
    radicand_ = 0;
  }
}

Scalar Scalar::sqrt_of(unsigned long n) {
  unsigned long outside = 1;
  unsigned long inside = 1;
  unsigned long rest = n;
  for (unsigned long p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      outside *= p;
      rest /= p * p;
    }
    if (rest % p == 0) {
      inside *= p;
      rest /= p;
    }
  }
  inside *= rest;
  if (n == 0) return Scalar(0);
  if (inside == 1) return Scalar(static_cast<long>(outside));
  return Scalar(mpq_class(0), mpq_class(outside), inside);
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  const auto root = s.find("sqrt(");
  if (root == std::string::npos) return Scalar(parse_rational(s));

  const auto close = s.find(')', root);
  if (close == std::string::npos || close + 1 != s.size())
    throw std::invalid_argument("bad surd literal '" + std::string(text) + "'");
  const std::string radicand_text = s.substr(root + 5, close - root - 5);
  if (radicand_text.empty() ||
      !std::all_of(radicand_text.begin(), radicand_text.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("bad radicand in '" + std::string(text) + "'");
  const unsigned long radicand = std::stoul(radicand_text);

  // Split "rational(+|-)coeff*" in front of sqrt(.
  std::string head = s.substr(0, root);
  if (!head.empty() && head.back() == '*') head.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
      split = i;
      break;
    }
  }
  std::string rational_text = split == std::string::npos ? "" : head.substr(0, split);
  std::string coeff_text = split == std::string::npos ? head : head.substr(split);
  mpq_class coeff(1);
  if (coeff_text == "-") {
    coeff = -1;
  } else if (!coeff_text.empty() && coeff_text != "+") {
    coeff = parse_rational(coeff_text);
  }
  Scalar out = Scalar(coeff) * sqrt_of(radicand);
  if (!rational_text.empty()) out += Scalar(parse_rational(rational_text));
  return out;
}

unsigned long Scalar::joint_radicand(const Scalar& a, const Scalar& b) {
  if (a.radicand_ != 0 && b.radicand_ != 0 && a.radicand_ != b.radicand_)
    throw ContextError("mixed quadratic extensions sqrt(" + std::to_string(a.radicand_) +
                       ") and sqrt(" + std::to_string(b.radicand_) + ")");
  return std::max(a.radicand_, b.radicand_);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  const unsigned long d = joint_radicand(*this, rhs);
  rat_ += rhs.rat_;
  surd_ += rhs.surd_;
  radicand_ = d;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  const unsigned long d = joint_radicand(*this, rhs);
  rat_ -= rhs.rat_;
  surd_ -= rhs.surd_;
  radicand_ = d;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  const unsigned long d = joint_radicand(*this, rhs);
  if (d == 0) {
    rat_ *= rhs.rat_;
    return *this;
  }
  mpq_class r = rat_ * rhs.rat_ + surd_ * rhs.surd_ * d;
  mpq_class s = rat_ * rhs.surd_ + surd_ * rhs.rat_;
  rat_ = std::move(r);
  surd_ = std::move(s);
  radicand_ = d;
  canonicalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (radicand_ == 0) return Scalar(mpq_class(1 / rat_));
  // (r + s sqrt d)^-1 = (r - s sqrt d) / (r^2 - s^2 d); the norm is nonzero
  // because d is not a perfect square.
  mpq_class norm = rat_ * rat_ - surd_ * surd_ * radicand_;
  return Scalar(mpq_class(rat_ / norm), mpq_class(-surd_ / norm), radicand_);
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by zero");
  if (rhs.radicand_ == 0) {
    rat_ /= rhs.rat_;
    surd_ /= rhs.rat_;
    canonicalize();
    return *this;
  }
  return *this *= rhs.inverse();
}

Scalar operator-(Scalar a) {
  a.rat_ = -a.rat_;
  a.surd_ = -a.surd_;
  return a;
}

double Scalar::to_double() const {
  double v = rat_.get_d();
  if (radicand_ != 0) v += surd_.get_d() * std::sqrt(static_cast<double>(radicand_));
  return v;
}

std::string Scalar::str() const {
  auto q = [](const mpq_class& v) { return v.get_num().get_str() + "/" + v.get_den().get_str(); };
  if (radicand_ == 0) return q(rat_);
  std::string s = q(rat_);
  s += sgn(surd_) < 0 ? "-" : "+";
  s += q(abs(surd_)) + "*sqrt(" + std::to_string(radicand_) + ")";
  return s;
}

Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar result(1);
  Scalar factor = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= factor;
    exponent >>= 1;
    if (exponent != 0) factor *= factor;
  }
  return result;
}

Scalar char_b(int j) {
  if (j < 1)
    throw UnsupportedParameter(
        "characteristic index j must be >= 1; b = 0 is the exceptional Hermite case");
  return Scalar::sqrt_of(2ul * static_cast<unsigned long>(j));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace krall
