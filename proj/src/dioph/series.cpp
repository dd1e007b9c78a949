#include "twodist/dioph/series.hpp"

#include <algorithm>

#include "twodist/errors.hpp"

namespace twodist::dioph {

namespace {
thread_local int g_terms = 8;
}

LaurentSeries::Terms::Terms(int n) : saved_(g_terms) {
  if (n < 1) throw DomainError("series precision must be positive");
  g_terms = n;
}

LaurentSeries::Terms::~Terms() { g_terms = saved_; }

LaurentSeries::LaurentSeries() : zero_precision_(g_terms) {}

LaurentSeries::LaurentSeries(const Rational& c) {
  if (c == 0) {
    zero_precision_ = g_terms;
    return;
  }
  c_.assign(static_cast<std::size_t>(g_terms), Rational());
  c_[0] = c;
}

LaurentSeries::LaurentSeries(int val, std::vector<Rational> c, int precision)
    : val_(val), c_(std::move(c)), zero_precision_(precision) {
  normalize();
}

LaurentSeries LaurentSeries::variable(const Rational& z0) {
  std::vector<Rational> c(static_cast<std::size_t>(g_terms) + 1);
  c[0] = z0;
  c[1] = Rational(1);
  return LaurentSeries(0, std::move(c), g_terms + 1);
}

void LaurentSeries::normalize() {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    zero_precision_ = val_ + static_cast<int>(c_.size());
    c_.clear();
    val_ = 0;
    return;
  }
  c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
  val_ += static_cast<int>(lead);
}

int LaurentSeries::precision() const {
  return c_.empty() ? zero_precision_ : val_ + static_cast<int>(c_.size());
}

std::optional<Rational> LaurentSeries::constant_term() const {
  if (c_.empty()) {
    if (zero_precision_ > 0) return Rational();
    return std::nullopt;
  }
  if (val_ < 0) throw DomainError("pole of order " + std::to_string(-val_));
  if (val_ > 0) return Rational();
  return c_[0];
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  const int prec = std::min(a.precision(), b.precision());
  int lo = prec;
  if (!a.is_zero()) lo = std::min(lo, a.val_);
  if (!b.is_zero()) lo = std::min(lo, b.val_);
  std::vector<Rational> c(static_cast<std::size_t>(prec - lo));
  for (const LaurentSeries* s : {&a, &b}) {
    for (std::size_t i = 0; i < s->c_.size(); ++i) {
      const int e = s->val_ + static_cast<int>(i);
      if (e < prec) c[static_cast<std::size_t>(e - lo)] += s->c_[i];
    }
  }
  // An empty vector still carries the precision through normalize.
  LaurentSeries out(lo, std::move(c), prec);
  return out;
}

LaurentSeries operator-(const LaurentSeries& a) {
  LaurentSeries out = a;
  for (auto& v : out.c_) v = -v;
  return out;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.is_zero() || b.is_zero()) {
    const int pa = a.is_zero() ? a.zero_precision_ : a.val_;
    const int pb = b.is_zero() ? b.zero_precision_ : b.val_;
    return LaurentSeries(pa + pb, {}, pa + pb);
  }
  const std::size_t len = std::min(a.c_.size(), b.c_.size());
  std::vector<Rational> c(len);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; i + j < len; ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return LaurentSeries(a.val_ + b.val_, std::move(c), 0);
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
  if (b.is_zero()) throw ArithmeticError("series division by a series with no known term");
  if (a.is_zero()) {
    const int p = a.zero_precision_ - b.val_;
    return LaurentSeries(p, {}, p);
  }
  const std::size_t len = std::min(a.c_.size(), b.c_.size());
  std::vector<Rational> inv(len);
  const Rational lead_inv = Rational(1) / b.c_[0];
  inv[0] = lead_inv;
  for (std::size_t i = 1; i < len; ++i) {
    Rational acc;
    for (std::size_t j = 1; j <= i; ++j) acc += b.c_[j] * inv[i - j];
    inv[i] = -acc * lead_inv;
  }
  std::vector<Rational> c(len);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; i + j < len; ++j) c[i + j] += a.c_[i] * inv[j];
  }
  return LaurentSeries(a.val_ - b.val_, std::move(c), 0);
}

}  // namespace twodist::dioph
