#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twodist/designs/parameters.hpp"
#include "twodist/dioph/intpoly.hpp"
#include "twodist/dioph/univariate.hpp"

namespace twodist::dioph {

/// g1 uses y = y1 = x - z; g2 uses y = y2.
///   g1 = 3 + x + 19z + 16z^2 + 3k + 3 Lambda - m - 4n - 18P + 21 z r
///   g2 = -72 Lambda + 13m + 13n + 99T - 45x + 32y - 14z - 13mz + 39nz
///        - 13Tz + 13xz - 33z^2 + 13z^3
enum class AuxG { G1, G2 };

std::string to_string(AuxG which);

struct AuxEvaluation {
  Rational g;
  /// Parameters at the point; empty when one of them has a pole there.
  std::optional<designs::ParameterSet<Rational>> params;
  /// True when direct substitution hit a vanishing denominator and the value
  /// came from the limit in z at fixed x.
  bool via_limit = false;
};

/// DomainError when x = 0 or when even the reduced function has a pole.
AuxEvaluation evaluate_aux(AuxG which, const Integer& x, const Integer& z);
/// Same limit taken from the fully reduced rational function of z at fixed x.
/// Slower; kept as the reference for the series route.
AuxEvaluation evaluate_aux_reduced(AuxG which, const Integer& x, const Integer& z);
Rational aux_g(AuxG which, const Integer& x, const Integer& z);

/// g1 restricted to x = z(z+1)/2 + t, as a rational function of z.
RatFunc g1_on_strip(const Integer& t);

struct Box {
  long zmin = -100;
  long zmax = 100;
  long xmax = 10000;
};

struct LatticeValue {
  long x = 0;
  long z = 0;
  Rational value;
};

struct RegionStats {
  std::string name;
  Rational lower;  ///< open interval (lower, upper)
  Rational upper;
  long points = 0;
  long via_limit = 0;
  std::optional<Rational> min;
  std::optional<Rational> max;
  long violation_count = 0;
  std::vector<LatticeValue> violations;  ///< first few, in (z, x) order
};

struct StripSolution {
  RatFunc g_minus_1;
  QuadraticSolution roots;
};

struct G1ScanReport {
  Box box;
  std::vector<RegionStats> regions;  ///< Region 1, 2, 3
  StripSolution strip;               ///< g1 = 1 on x = z(z+1)/2 - 1
  bool ok() const;
};

/// Exact check of the open-interval bounds of g1 at every lattice point of
/// the box inside each region, plus the strip equation.
G1ScanReport scan_g1(const Box& box);

struct P3CurveSearch {
  long points = 0;
  long on_curve_z0 = 0;  ///< lattice points of the line z = 0, which lies on the curve
  std::vector<LatticeValue> hits;  ///< points with z != 0; value is g2 there
};

struct G2ScanReport {
  Box box;
  std::vector<RegionStats> regions;  ///< x in {1,2} far from 0; x >= 3
  /// Integer values of g2 for x in {1,2}, z in [-14, 9].
  std::vector<LatticeValue> case1_integer_values;
  std::vector<LatticeValue> case1_undefined;
  Rational lambda_at_1_m1;  ///< Lambda at (x, z) = (1, -1)
  P3CurveSearch curve;      ///< p3 = 0 with y = y2, 3 <= x <= xmax
  bool ok() const;
};

G2ScanReport scan_g2(const Box& box);

/// p3(S, m, x, y2) with denominators cleared, as a polynomial in (x, z).
const IntPoly& p3_on_y2_cleared();

}  // namespace twodist::dioph
