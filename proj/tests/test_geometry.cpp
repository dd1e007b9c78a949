#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "twodist/coherent/configuration.hpp"
#include "twodist/coherent/idempotents.hpp"
#include "twodist/designs/incidence.hpp"
#include "twodist/errors.hpp"
#include "twodist/geometry/lisonek.hpp"
#include "twodist/geometry/spectrum.hpp"

using namespace twodist;
using namespace twodist::geometry;

namespace {

QuadExt rad(const Rational& c, long r) { return QuadExt::radical(c, Integer(r)); }

const coherent::ProjectorData& lisonek_projector() {
  static const auto pd =
      coherent::projector_and_gram(coherent::CoherentConfig::from_design(designs::lisonek_design()));
  return pd;
}

/// (S, m, alpha, beta) with 0 <= beta < alpha < S < m, in a fixed order.
std::vector<std::array<long, 4>> valid_grid(std::size_t count) {
  std::vector<std::array<long, 4>> out;
  for (long m = 4; out.size() < count; ++m) {
    for (long S = 2; S < m && out.size() < count; ++S) {
      for (long a = 1; a < S && out.size() < count; ++a) {
        for (long b = 0; b < a && out.size() < count; b += 2) out.push_back({S, m, a, b});
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("Lisonek coordinates") {
  const auto set = lisonek_coordinates();
  REQUIRE(set.X1.size() == 9);
  REQUIRE(set.X2.size() == 36);
  Point first(9, Rational(1, 3));
  first[0] = Rational(-2, 3);
  CHECK(set.X1[0] == first);
  const auto chk = check_lisonek_coordinates(set);
  CHECK(chk.point_count == 45);
  CHECK(chk.affine_dim == 8);
  CHECK(chk.on_hyperplane);
  CHECK(chk.squared_distances == std::set<Rational>{2, 4});
  CHECK(chk.x1_norm() == rad(Rational(2, 3), 3));
  CHECK(chk.x2_norm() == rad(1, 2));
  CHECK(chk.centroid == Point(9, Rational(2, 9)));
  CHECK(chk.x1_centroid_radius() == rad(Rational(2, 3), 2));
  CHECK(chk.x2_centroid_radius() == rad(Rational(1, 3), 14));
}

TEST_CASE("f and the closed-form spectrum") {
  CHECK(f(Rational(7)) == Rational(6, 7));
  CHECK_THROWS_AS(f(Rational(0)), DomainError);
  const auto s = theoretical_spectrum(2, 9, 1, 0, Branch::GammaAbove2);
  CHECK(s.R1 == rad(Rational(2, 3), 2));
  CHECK(s.R2 == rad(Rational(1, 3), 14));
  const std::array<QuadExt, 5> want = {2, 2, 4, 2, 4};
  CHECK(s.d_sq == want);
  CHECK(s.distinct_squared() == std::set<QuadExt>{2, 4});
  CHECK_THROWS_AS(theoretical_spectrum(9, 9, 1, 0, Branch::GammaAbove2), DomainError);
  CHECK_THROWS_AS(theoretical_spectrum(2, 9, 0, 1, Branch::GammaAbove2), DomainError);
}

TEST_CASE("spectrum from the Gram classes") {
  const auto& g = lisonek_projector().classes;
  const auto native = spectrum_from_gram(g, native_radius(g), Frame::Projector);
  CHECK(native.classes.at(PairClass::VV) == QuadExt(1));
  CHECK(native.classes.at(PairClass::BBAlpha) == QuadExt(Rational(1, 7)));
  CHECK(native.classes.at(PairClass::BBBeta) == QuadExt(Rational(2, 7)));
  CHECK(native.distinct_squared().size() <= 5);

  const auto theory = theoretical_spectrum(2, 9, 1, 0, Branch::GammaAbove2);
  const auto simplex = spectrum_from_gram(g, theory.R2, Frame::Simplex);
  CHECK(simplex.d_sq == theory.d_sq);
  CHECK(simplex.classes == theory.classes);
  CHECK(simplex.R1 == theory.R1);
  CHECK(two_distance_radius(g, Branch::GammaAbove2) == theory.R2);

  CHECK_THROWS_AS(spectrum_from_gram(g, QuadExt(0), Frame::Simplex), DomainError);
  CHECK_THROWS_AS(spectrum_from_gram(g, QuadExt(-1), Frame::Simplex), DomainError);
}

TEST_CASE("spectrum matches the coordinates class by class") {
  const auto set = lisonek_coordinates();
  const auto d = designs::lisonek_design();
  const auto theory = theoretical_spectrum(2, 9, 1, 0, Branch::GammaAbove2);
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t b = 0; b < 36; ++b) {
      const auto cls = d.contains(b, static_cast<int>(i)) ? PairClass::VBIn : PairClass::VBOut;
      REQUIRE(QuadExt(squared_distance(set.X1[i], set.X2[b])) == theory.classes.at(cls));
    }
  }
  for (std::size_t a = 0; a < 36; ++a) {
    for (std::size_t b = a + 1; b < 36; ++b) {
      const auto cls = designs::intersection_size(d.block(a), d.block(b)) == 1 ? PairClass::BBAlpha
                                                                                : PairClass::BBBeta;
      REQUIRE(QuadExt(squared_distance(set.X2[a], set.X2[b])) == theory.classes.at(cls));
    }
  }
}

TEST_CASE("two-distance classification") {
  const auto theory = theoretical_spectrum(2, 9, 1, 0, Branch::GammaAbove2);
  const auto c = two_distance_classify(theory);
  CHECK(c.two_distance);
  REQUIRE(c.gamma);
  CHECK(*c.gamma == QuadExt(4));
  REQUIRE(c.label);
  CHECK(c.label->iota == Iota::I1);
  CHECK(c.label->letter == 'A');
  CHECK(c.label->complement_letter == 'B');

  DistanceSpectrum three = theory;
  three.d_sq[4] = QuadExt(3);
  CHECK_FALSE(two_distance_classify(three).two_distance);

  DistanceSpectrum flat = theory;
  flat.d_sq.fill(QuadExt(2));
  for (auto& [cls, v] : flat.classes) v = QuadExt(2);
  CHECK_THROWS_AS(two_distance_classify(flat), DegeneracyError);
}

TEST_CASE("case letters") {
  CHECK(case_letter(Iota::I1, Branch::GammaAbove2) == 'A');
  CHECK(case_letter(Iota::I2, Branch::GammaAbove2) == 'B');
  CHECK(case_letter(Iota::I3, Branch::GammaAbove2) == 'C');
  CHECK(case_letter(Iota::I4, Branch::GammaAbove2) == 'D');
  CHECK(case_letter(Iota::I1, Branch::GammaBelow2) == 'E');
  CHECK(case_letter(Iota::I2, Branch::GammaBelow2) == 'F');
  CHECK(case_letter(Iota::I3, Branch::GammaBelow2) == 'G');
  CHECK(case_letter(Iota::I4, Branch::GammaBelow2) == 'H');
}

TEST_CASE("residuals and the geometric route") {
  const auto l = p_residuals(2, 9, 1, 0);
  CHECK(l.feasible_gt2());
  CHECK_FALSE(l.feasible_lt2());
  CHECK(l.lt2[0] == 4);
  CHECK(p_residuals(7, 27, 3, 1).feasible_gt2());
  const auto geo = geometric_conditions(2, 9, 1, 0, Branch::GammaAbove2);
  CHECK(geo == std::array<bool, 3>{true, true, true});

  // each exact geometric condition forces the matching residual to vanish
  for (const auto& [S, m, a, b] : valid_grid(100)) {
    const auto res = p_residuals(S, m, a, b);
    const auto gt = geometric_conditions(S, m, a, b, Branch::GammaAbove2);
    for (std::size_t i = 0; i < 3; ++i) {
      if (gt[i]) REQUIRE(res.gt2[i] == 0);
    }
  }
}

TEST_CASE("distance order and the branch root on a parameter grid") {
  const auto grid = valid_grid(100);
  REQUIRE(grid.size() == 100);
  for (const auto& [S, m, a, b] : grid) {
    for (Branch br : {Branch::GammaAbove2, Branch::GammaBelow2}) {
      const auto s = theoretical_spectrum(S, m, a, b, br);
      REQUIRE(s.squared(2) < s.squared(3));
      REQUIRE(s.squared(4) < s.squared(5));
      REQUIRE(s.squared(1) == QuadExt(2));
    }
    const auto gt = theoretical_spectrum(S, m, a, b, Branch::GammaAbove2);
    REQUIRE(gt.R2 * gt.R2 > gt.R1 * gt.R1);
  }
}

TEST_CASE("rescaling keeps the embedding conditions") {
  const auto& pd = lisonek_projector();
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(1, 40);
  std::uniform_int_distribution<long> den(1, 12);
  const long radicands[] = {1, 2, 3, 5, 7, 14};
  for (int i = 0; i < 20; ++i) {
    const QuadExt R2 = rad(Rational(Integer(num(rng)), Integer(den(rng))), radicands[i % 6]);
    const auto sets = embedding_distance_sets(pd.E, 9, R2, Frame::Simplex);
    REQUIRE(sets.conditions_hold());
    const auto s = spectrum_from_gram(pd.classes, R2, Frame::Simplex);
    CHECK(sets.vb == std::set<QuadExt>{s.classes.at(PairClass::VBIn), s.classes.at(PairClass::VBOut)});
    CHECK(sets.bb == std::set<QuadExt>{s.classes.at(PairClass::BBAlpha), s.classes.at(PairClass::BBBeta)});
  }
}

TEST_CASE("remark checks") {
  const auto r = remark_checks(2, 9);
  CHECK(r.D3 == sqrt_adjoin(Rational(8, 7)));
  CHECK(r.ok());
  const auto edge = remark_checks(9, 10);
  CHECK(edge.D2 == QuadExt(0));
  CHECK(edge.D3 == rad(1, 2));
  CHECK(edge.d3_equals_d1);
  for (long m = 3; m < 30; ++m) {
    for (long S = 1; S < m; ++S) {
      const auto c = remark_checks(S, m);
      REQUIRE(c.ok());
      REQUIRE(c.D3 * c.D3 - c.D2 * c.D2 == QuadExt(Rational(2, m - S)));
    }
  }
}
