#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twodist/exactnum/rational.hpp"

namespace twodist::dioph {

using exactnum::Integer;
using exactnum::Rational;

/// Multivariate polynomial with integer coefficients over an ordered list of
/// named variables. Terms are keyed by exponent vector (lexicographic), zero
/// coefficients are never stored, so equality is structural.
class IntPoly {
 public:
  using Exponents = std::vector<unsigned>;

  IntPoly() = default;
  explicit IntPoly(std::vector<std::string> vars);

  static IntPoly constant(std::vector<std::string> vars, const Integer& c);
  static IntPoly variable(std::vector<std::string> vars, std::string_view name);
  /// Integers, variable names, + - * ^ (nonnegative integer exponents) and
  /// parentheses. Unknown names are a ParseError.
  static IntPoly parse(std::string_view text, std::vector<std::string> vars);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  std::size_t index_of(std::string_view name) const;

  bool is_zero() const { return terms_.empty(); }
  unsigned degree_in(std::size_t var) const;
  unsigned total_degree() const;

  Integer eval(std::span<const Integer> values) const;
  Rational eval(std::span<const Rational> values) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(const IntPoly& a);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly pow(unsigned e) const;
  IntPoly scaled(const Integer& c) const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Terms in descending lexicographic exponent order, e.g. "S^4 - 2*S^2*m*x".
  std::string str() const;

 private:
  void require_same_vars(const IntPoly& o) const;
  void add_term(const Exponents& e, const Integer& c);

  std::vector<std::string> vars_;
  std::map<Exponents, Integer> terms_;
};

/// num / den, both over the same variables.
struct PolyFraction {
  IntPoly num;
  IntPoly den;
};

/// p(subst[0], ..., subst[k-1]) multiplied by prod_i den_i^(deg_i p), which
/// is a polynomial; it vanishes iff the substitution does (dens nonzero).
IntPoly compose_cleared(const IntPoly& p, std::span<const PolyFraction> subst);

}  // namespace twodist::dioph
