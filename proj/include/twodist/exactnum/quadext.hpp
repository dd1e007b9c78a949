#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twodist/exactnum/rational.hpp"

namespace twodist::exactnum {

/// n = root^2 * squarefree, for n >= 1.
struct SquarefreeSplit {
  Integer root;
  Integer squarefree;
};

/// Trial division up to the cube root of the cofactor, then a perfect-square
/// test on what is left (at most two prime factors remain).
SquarefreeSplit squarefree_split(const Integer& n);

/// Element of a multi-quadratic field Q(sqrt(d1), sqrt(d2)).
///
/// Stored as a sum of c * sqrt(r) with squarefree radicands r >= 1 in
/// ascending order (r = 1 is the rational part) and no zero coefficients, so
/// equality is structural. Every operation first checks that the radicands
/// of both operands are generated by at most two base radicands and throws
/// UnsupportedExtension otherwise.
class QuadExt {
 public:
  struct Term {
    Integer radicand;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  QuadExt() = default;
  QuadExt(const Rational& r);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  QuadExt(I v) : QuadExt(Rational(v)) {}  // NOLINT(google-explicit-constructor)

  /// coeff * sqrt(radicand); the radicand is reduced to its squarefree part.
  static QuadExt radical(const Rational& coeff, const Integer& radicand);
  /// Accepts the rendering grammar of str(), e.g. "1/2 - 3*sqrt(7) + sqrt(14)".
  static QuadExt parse(std::string_view text);

  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  std::optional<Rational> as_rational() const;
  /// Coefficient of sqrt(radicand) (radicand must already be squarefree).
  Rational coefficient(const Integer& radicand) const;
  /// Radicands other than 1, ascending.
  std::vector<Integer> radicands() const;

  /// Exact sign in {-1, 0, +1}.
  int sign() const;
  double to_double() const;
  std::string str() const;

  QuadExt inverse() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator/(const QuadExt& a, const QuadExt& b) { return a * b.inverse(); }
  friend QuadExt operator-(const QuadExt& a);

  friend bool operator==(const QuadExt& a, const QuadExt& b) { return a.terms_ == b.terms_; }
  /// Numeric order, decided exactly through sign(a - b).
  friend std::strong_ordering operator<=>(const QuadExt& a, const QuadExt& b);

 private:
  explicit QuadExt(std::vector<Term> terms);
  void normalize();

  std::vector<Term> terms_;
};

/// Lexicographic order on canonical terms; for keying containers only.
struct StructuralLess {
  bool operator()(const QuadExt& a, const QuadExt& b) const;
};

/// At most two squarefree generators whose products (mod squares) cover every
/// radicand given; throws UnsupportedExtension when more are needed.
std::vector<Integer> extension_generators(std::span<const Integer> radicands);

/// Exact square root of a nonnegative rational (DomainError when negative).
QuadExt sqrt_adjoin(const Rational& r);

/// Exact sign; see QuadExt::sign.
int quadext_sign(const QuadExt& a);

inline bool is_zero(const QuadExt& q) { return q.is_zero(); }

std::ostream& operator<<(std::ostream& os, const QuadExt& q);

}  // namespace twodist::exactnum
