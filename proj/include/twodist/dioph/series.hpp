#pragma once

#include <concepts>
#include <optional>
#include <vector>

#include "twodist/exactnum/rational.hpp"

namespace twodist::dioph {

using exactnum::Rational;

/// Truncated Laurent series in e = z - z0 with exact coefficients:
/// sum_i c[i] e^(val + i) + O(e^(val + c.size())). The leading coefficient
/// is nonzero unless every known coefficient vanished, in which case the
/// series is "zero to the known precision".
class LaurentSeries {
 public:
  /// Relative precision given to exact constants built on this thread.
  class Terms {
   public:
    explicit Terms(int n);
    ~Terms();
    Terms(const Terms&) = delete;
    Terms& operator=(const Terms&) = delete;

   private:
    int saved_;
  };

  LaurentSeries();
  LaurentSeries(const Rational& c);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  LaurentSeries(I c) : LaurentSeries(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  /// z0 + e.
  static LaurentSeries variable(const Rational& z0);

  bool is_zero() const { return c_.empty(); }
  int valuation() const { return val_; }
  /// Exponent of the first unknown term.
  int precision() const;

  /// Coefficient of e^0, i.e. the limit at z0; empty when that coefficient
  /// is beyond the known precision. DomainError for a pole.
  std::optional<Rational> constant_term() const;

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a);

 private:
  LaurentSeries(int val, std::vector<Rational> c, int precision);
  void normalize();

  int val_ = 0;
  std::vector<Rational> c_;
  int zero_precision_ = 0;  ///< meaningful only when c_ is empty
};

inline bool is_zero(const LaurentSeries& s) { return s.is_zero(); }

}  // namespace twodist::dioph
