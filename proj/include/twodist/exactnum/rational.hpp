#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace twodist::exactnum {

/// Arbitrary-precision integer.
using Integer = mpz_class;

Integer parse_integer(std::string_view text);
std::string to_string(const Integer& v);

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Backed by GMP's mpq; the wrapper pins down the error behaviour (division
/// by zero throws ArithmeticError), the textual grammar "p" / "p/q" and a
/// total order usable with <=>.
class Rational {
 public:
  Rational() = default;
  template <std::signed_integral I>
  Rational(I v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  template <std::unsigned_integral I>
  Rational(I v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);

  /// Parses "p" or "p/q" (optional leading sign, no whitespace).
  static Rational parse(std::string_view text);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  /// Throws DomainError unless the value is an integer.
  Integer to_integer() const;
  double to_double() const { return value_.get_d(); }
  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}

  mpq_class value_;
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);
inline bool is_zero(const Rational& r) { return r.is_zero(); }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace twodist::exactnum
