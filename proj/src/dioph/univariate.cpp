#include "twodist/dioph/univariate.hpp"

#include <sstream>

#include "twodist/errors.hpp"

namespace twodist::dioph {

UPoly::UPoly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::z() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Rational();
}

Rational UPoly::eval(const Rational& at) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly out = *this;
  const Rational l = lead();
  for (auto& c : out.c_) c = c / l;
  return out;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return *this;
  Integer den_lcm = 1;
  for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  Integer content = 0;
  for (const auto& c : c_) {
    const Integer v = c.num() * (den_lcm / c.den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  if (lead().sign() < 0) content = -content;
  UPoly out;
  for (const auto& c : c_) out.c_.push_back(c * Rational(den_lcm) / Rational(content));
  return out;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
  trim();
  return *this;
}

UPoly operator-(const UPoly& a) {
  UPoly out = a;
  for (auto& c : out.c_) c = -c;
  return out;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(out));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  r = a;
  std::vector<Rational> qc(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    const Rational f = r.lead() / b.lead();
    qc[shift] = f;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[j + shift] = r.c_[j + shift] - f * b.c_[j];
    r.trim();
  }
  q = UPoly(std::move(qc));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q;
    UPoly r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
    first = false;
    if (i == 0 || mag != Rational(1)) {
      os << mag.str();
      if (i > 0) os << "*";
    }
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

RatFunc::RatFunc(const UPoly& p) : num_(p), den_(1) {}

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  const UPoly g = UPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    UPoly r;
    UPoly::divmod(UPoly(num_), g, num_, r);
    UPoly::divmod(UPoly(den_), g, den_, r);
  }
  const Rational l = den_.lead();
  if (l != Rational(1)) {
    num_ = num_ * UPoly(Rational(1) / l);
    den_ = den_.monic();
  }
}

Rational RatFunc::eval(const Rational& at) const {
  const Rational d = den_.eval(at);
  if (d.is_zero()) throw DomainError("rational function has a pole at " + at.str());
  return num_.eval(at) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw ArithmeticError("rational function division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc operator-(const RatFunc& a) {
  RatFunc out = a;
  out.num_ = -out.num_;
  return out;
}

std::string RatFunc::str(const std::string& var) const {
  if (den_ == UPoly(1)) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

QuadraticSolution solve_quadratic(const UPoly& p) {
  if (p.degree() != 2) throw DomainError("not a quadratic: " + p.str());
  QuadraticSolution out;
  out.primitive = p.primitive();
  const Integer a = out.primitive.coeff(2).num();
  const Integer b = out.primitive.coeff(1).num();
  const Integer c = out.primitive.coeff(0).num();
  out.discriminant = b * b - 4 * a * c;
  if (out.discriminant < 0) {
    out.squarefree_part = -exactnum::squarefree_split(Integer(-out.discriminant)).squarefree;
    return out;
  }
  if (out.discriminant == 0) {
    out.squarefree_part = 0;
    out.discriminant_is_square = true;
  } else {
    out.squarefree_part = exactnum::squarefree_split(out.discriminant).squarefree;
    out.discriminant_is_square = out.squarefree_part == 1;
  }
  const exactnum::QuadExt root = exactnum::sqrt_adjoin(Rational(out.discriminant));
  const exactnum::QuadExt two_a(Rational(Integer(2 * a)));
  const exactnum::QuadExt minus_b(Rational(Integer(-b)));
  out.roots.push_back((minus_b - root) / two_a);
  if (!root.is_zero()) out.roots.push_back((minus_b + root) / two_a);
  if (out.roots.front() > out.roots.back()) std::swap(out.roots.front(), out.roots.back());
  for (const auto& r : out.roots) {
    const auto q = r.as_rational();
    if (q && q->is_integer()) out.integer_roots.push_back(q->to_integer());
  }
  return out;
}

}  // namespace twodist::dioph
