#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twodist/dioph/intpoly.hpp"
#include "twodist/dioph/univariate.hpp"

namespace twodist::dioph {

enum class PolyId { P1, P2, P3 };

std::string to_string(PolyId id);

/// The three polynomials in the variables (S, m, x, y).
const IntPoly& p_poly(PolyId id);

Integer eval_p(PolyId id, const Integer& S, const Integer& m, const Integer& x, const Integer& y);

/// S = x + z^2, m = (x + z^2 + z)^2 / x, y1 = x - z and the second root y2.
struct ZParam {
  Rational S;
  Rational m;
  Rational y1;
  Rational y2;
};

/// DomainError when x = 0.
ZParam z_parametrization(const Integer& x, const Integer& z);

/// z = (x (m + 1) - S (S + 1)) / (2 S); DomainError when S = 0.
Rational z_of(const Rational& S, const Rational& m, const Rational& x);

/// Numerator and denominator of y2 as polynomials in (x, z).
PolyFraction y2_fraction();

enum class Family { I, II, III };

std::string to_string(Family f);

struct FamilyPoint {
  Integer S;
  Integer m;
  Integer x;
  Integer y;
};

/// (i) S = z(3z+1)/2, m = 9z(z+1)/2, x = z(z+1)/2, y = z(z-1)/2;
/// (ii) S = m = x = y = z; (iii) S = z+1, m = z, x = z, y = z+1.
FamilyPoint family_points(Family family, const Integer& z);

/// Family (i) coordinates as polynomials in z.
struct FamilyCurve {
  UPoly S;
  UPoly m;
  UPoly x;
  UPoly y;
};
FamilyCurve family_i_curve();

struct IdentityResult {
  std::string name;
  bool zero = false;
  /// Cleared residue; "0" when the identity holds.
  std::string residue;
};

/// Every identity of the parametrization and of family (i), each reduced to
/// a residue that must be the zero polynomial. Does not throw on failure.
std::vector<IdentityResult> identity_residues();

/// identity_residues(), throwing IdentityFailure on the first nonzero residue.
std::vector<IdentityResult> verify_identities();

}  // namespace twodist::dioph
