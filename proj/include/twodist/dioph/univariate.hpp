#pragma once

#include <string>
#include <vector>

#include "twodist/exactnum/quadext.hpp"
#include "twodist/exactnum/rational.hpp"

namespace twodist::dioph {

using exactnum::Integer;
using exactnum::Rational;

/// Dense univariate polynomial over Q; coeffs[i] multiplies z^i, no trailing
/// zeros (the zero polynomial has no coefficients).
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  UPoly(I c) : UPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly z();

  const std::vector<Rational>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& lead() const { return c_.back(); }
  Rational coeff(int i) const;

  Rational eval(const Rational& at) const;
  UPoly monic() const;
  /// Scaled to integer coefficients with content 1 and positive lead.
  UPoly primitive() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(const UPoly& a);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// Quotient and remainder; divisor must be nonzero.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  static UPoly gcd(UPoly a, UPoly b);

  std::string str(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Reduced quotient of univariate polynomials with monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const UPoly& p);  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : RatFunc(UPoly(c)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  RatFunc(I c) : RatFunc(UPoly(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(UPoly num, UPoly den);

  static RatFunc z() { return RatFunc(UPoly::z()); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Value at a point; DomainError where the reduced denominator vanishes.
  Rational eval(const Rational& at) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a);
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  std::string str(const std::string& var = "z") const;

 private:
  void reduce();
  UPoly num_;
  UPoly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

/// Exact real roots of a degree-2 polynomial, after scaling it to a
/// primitive integer polynomial a z^2 + b z + c.
struct QuadraticSolution {
  UPoly primitive;
  Integer discriminant;  ///< b^2 - 4ac
  Integer squarefree_part;
  bool discriminant_is_square = false;
  std::vector<exactnum::QuadExt> roots;  ///< ascending; empty when D < 0
  std::vector<Integer> integer_roots;
};

/// DomainError unless the degree is exactly 2.
QuadraticSolution solve_quadratic(const UPoly& p);

}  // namespace twodist::dioph
