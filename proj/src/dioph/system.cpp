#include "twodist/dioph/system.hpp"

#include <array>

#include "twodist/designs/parameters.hpp"
#include "twodist/errors.hpp"

namespace twodist::dioph {

namespace {

const std::vector<std::string> kSmxy = {"S", "m", "x", "y"};
const std::vector<std::string> kXZ = {"x", "z"};
const std::vector<std::string> kZ = {"z"};

const char* const kP1 =
    "S^4 - 2*S^2*x*m + x^2*m^2 - 2*S^3 + 2*S^2*x - 2*S*x*m + 2*x^2*m + S^2 - 2*S*x + x^2";
const char* const kP2 =
    "S^4 + 2*S^2*x*m - 4*S^2*y*m + x^2*m^2 - 4*x*y*m^2 + 4*y^2*m^2 - 2*S^3 + 2*S^2*x"
    " + 8*S^2*m - 6*S*x*m - 2*x^2*m - 4*S*y*m + 4*x*y*m - 4*S*m^2 + 4*x*m^2 + S^2 - 2*S*x"
    " + x^2";
const char* const kP3 =
    "S^2*x^2 - S*m*x^2 - 2*S^2*x*y + 2*S*m*x*y + S^2*y^2 - S*m*y^2 + S^2*m"
    " + 2*S^2*x - 2*S*m*x - 2*S*x^2 + m*x^2 - 2*S^2*y + 2*S*x*y + S^2 - 2*S*x + x^2";

const char* const kY2Num =
    "x^3 + 2*x^2*z^2 + x^2*z + x*z^4 + 2*x*z^3 + 3*x*z^2 + z^5 + 2*z^4 + z^3";
const char* const kY2Den = "(x + z^2 + z)^2";

PolyFraction frac(const char* num, const char* den, const std::vector<std::string>& vars) {
  return {IntPoly::parse(num, vars), IntPoly::parse(den, vars)};
}

IdentityResult check(std::string name, const IntPoly& residue) {
  return {std::move(name), residue.is_zero(), residue.str()};
}

}  // namespace

std::string to_string(PolyId id) {
  switch (id) {
    case PolyId::P1: return "p1";
    case PolyId::P2: return "p2";
    case PolyId::P3: return "p3";
  }
  return "?";
}

const IntPoly& p_poly(PolyId id) {
  static const std::array<IntPoly, 3> polys = {
      IntPoly::parse(kP1, kSmxy), IntPoly::parse(kP2, kSmxy), IntPoly::parse(kP3, kSmxy)};
  return polys[static_cast<std::size_t>(id)];
}

Integer eval_p(PolyId id, const Integer& S, const Integer& m, const Integer& x, const Integer& y) {
  const std::array<Integer, 4> v = {S, m, x, y};
  return p_poly(id).eval(std::span<const Integer>(v));
}

PolyFraction y2_fraction() { return frac(kY2Num, kY2Den, kXZ); }

ZParam z_parametrization(const Integer& x, const Integer& z) {
  if (x == 0) throw DomainError("z-parametrization needs x != 0");
  const Rational xq(x);
  const Rational zq(z);
  const Rational w = xq + zq * zq + zq;
  ZParam out;
  out.S = xq + zq * zq;
  out.m = w * w / xq;
  out.y1 = xq - zq;
  if (w.is_zero()) throw DomainError("x + z^2 + z = 0: y2 is undefined");
  const auto y2 = y2_fraction();
  const std::array<Rational, 2> at = {xq, zq};
  out.y2 = y2.num.eval(std::span<const Rational>(at)) / y2.den.eval(std::span<const Rational>(at));
  return out;
}

Rational z_of(const Rational& S, const Rational& m, const Rational& x) {
  if (S.is_zero()) throw DomainError("z is undefined for S = 0");
  return (x * (m + Rational(1)) - S * (S + Rational(1))) / (Rational(2) * S);
}

std::string to_string(Family f) {
  switch (f) {
    case Family::I: return "i";
    case Family::II: return "ii";
    case Family::III: return "iii";
  }
  return "?";
}

FamilyPoint family_points(Family family, const Integer& z) {
  FamilyPoint p;
  switch (family) {
    case Family::I: {
      // z(3z+1) and z(z+1) are always even
      p.S = z * (3 * z + 1) / 2;
      p.m = 9 * (z * (z + 1) / 2);
      p.x = z * (z + 1) / 2;
      p.y = z * (z - 1) / 2;
      break;
    }
    case Family::II:
      p.S = p.m = p.x = p.y = z;
      break;
    case Family::III:
      p.S = z + 1;
      p.m = z;
      p.x = z;
      p.y = z + 1;
      break;
  }
  return p;
}

FamilyCurve family_i_curve() {
  const Rational half(1, 2);
  FamilyCurve c;
  c.S = UPoly(std::vector<Rational>{Rational(0), half, Rational(3, 2)});
  c.m = UPoly(std::vector<Rational>{Rational(0), Rational(9, 2), Rational(9, 2)});
  c.x = UPoly(std::vector<Rational>{Rational(0), half, half});
  c.y = UPoly(std::vector<Rational>{Rational(0), -half, half});
  return c;
}

std::vector<IdentityResult> identity_residues() {
  std::vector<IdentityResult> out;

  // (S, m, x, y) in terms of (x, z)
  const PolyFraction S = frac("x + z^2", "1", kXZ);
  const PolyFraction m = frac("(x + z^2 + z)^2", "x", kXZ);
  const PolyFraction x = frac("x", "1", kXZ);
  const PolyFraction y1 = frac("x - z", "1", kXZ);
  const PolyFraction y2 = y2_fraction();
  {
    const std::array<PolyFraction, 4> s = {S, m, x, y1};
    out.push_back(check("p1(S(x,z), m(x,z), x, y1)", compose_cleared(p_poly(PolyId::P1), s)));
    out.push_back(check("p2(S(x,z), m(x,z), x, y1)", compose_cleared(p_poly(PolyId::P2), s)));
  }
  {
    const std::array<PolyFraction, 4> s = {S, m, x, y2};
    out.push_back(check("p2(S(x,z), m(x,z), x, y2)", compose_cleared(p_poly(PolyId::P2), s)));
  }

  // family (i), one variable
  const std::array<PolyFraction, 4> fam = {
      frac("3*z^2 + z", "2", kZ), frac("9*z^2 + 9*z", "2", kZ), frac("z^2 + z", "2", kZ),
      frac("z^2 - z", "2", kZ)};
  for (PolyId id : {PolyId::P1, PolyId::P2, PolyId::P3}) {
    out.push_back(check(to_string(id) + " on family (i)", compose_cleared(p_poly(id), fam)));
  }

  // n - m(m-1)/2 through the parameter calculus over Q(z)
  const FamilyCurve c = family_i_curve();
  const auto params = designs::parameter_calculus<RatFunc>(RatFunc(c.m), RatFunc(c.S),
                                                           RatFunc(c.x), RatFunc(c.y));
  const RatFunc mm(c.m);
  const RatFunc residue = params.n - mm * (mm - RatFunc(1)) / RatFunc(2);
  out.push_back({"n - m(m-1)/2 on family (i)", residue.is_zero(), residue.str()});
  return out;
}

std::vector<IdentityResult> verify_identities() {
  auto results = identity_residues();
  for (const auto& r : results) {
    if (!r.zero) throw IdentityFailure(r.name + " has nonzero residue " + r.residue);
  }
  return results;
}

}  // namespace twodist::dioph
