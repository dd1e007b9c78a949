#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twodist/coherent/configuration.hpp"
#include "twodist/coherent/idempotents.hpp"
#include "twodist/designs/incidence.hpp"
#include "twodist/errors.hpp"

using namespace twodist;
using namespace twodist::coherent;
using exactnum::QuadExt;
using exactnum::Rational;

namespace {

QuadExt rad(const Rational& c, long r) { return QuadExt::radical(c, Integer(r)); }

Matrix<QuadExt> identity(std::size_t n) {
  Matrix<QuadExt> I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = QuadExt(1);
  return I;
}

}  // namespace

TEST_CASE("relations of the Lisonek configuration") {
  const auto cc = CoherentConfig::from_design(designs::lisonek_design());
  CHECK(cc.size() == 45);
  CHECK(cc.relation_size(3) == 72);
  CHECK(cc.relation_size(6) == 72);
  CHECK(cc.relation_size(4) == 504);
  CHECK(cc.relation_size(8) == cc.relation_size(6));

  Matrix<int> sum(cc.size(), cc.size());
  for (int i = 1; i <= kRelations; ++i) sum += cc.adjacency(i);
  bool all_ones = true;
  for (std::size_t x = 0; x < cc.size(); ++x) {
    for (std::size_t y = 0; y < cc.size(); ++y) all_ones = all_ones && sum(x, y) == 1;
  }
  CHECK(all_ones);
  CHECK(cc.adjacency(8) == cc.adjacency(6).transpose());
  CHECK(cc.adjacency(9) == cc.adjacency(7).transpose());
}

TEST_CASE("complement assigns relation 4 to the larger intersection") {
  const auto d = designs::complement(designs::lisonek_design());
  const auto cc = CoherentConfig::from_design(d);
  CHECK(cc.params().alpha == 6);
  CHECK(cc.params().beta == 5);
  const std::size_t m = 9;
  for (std::size_t a = 0; a < d.block_count(); ++a) {
    for (std::size_t b = 0; b < d.block_count(); ++b) {
      if (a == b) continue;
      const int meet = designs::intersection_size(d.block(a), d.block(b));
      REQUIRE((cc.label(m + a, m + b) == 4) == (meet == 6));
    }
  }
}

TEST_CASE("not quasi-symmetric") {
  const designs::IncidenceDesign d(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(CoherentConfig::from_design(d), StructureError);
}

TEST_CASE("axioms and intersection constants") {
  const auto cc = CoherentConfig::from_design(designs::lisonek_design());
  const auto rep = verify_axioms(cc);
  REQUIRE(rep.ok);
  CHECK(rep.constant(3, 3, 3) == 7);
  CHECK(rep.constant(4, 4, 4) == 7);
  CHECK(rep.constant(4, 4, 2) == 14);
  CHECK(rep.transpose[6] == 8);
  CHECK(rep.transpose[4] == 4);
  CHECK(verify_axioms(CoherentConfig::from_design(designs::complement(designs::lisonek_design()))).ok);
}

TEST_CASE("idempotent basis for Lisonek") {
  const auto cc = CoherentConfig::from_design(designs::lisonek_design());
  const auto b = idempotent_basis(cc.params());
  CHECK(b.alpha1 == QuadExt(4));
  CHECK(b.beta1 == rad(1, 7));
  CHECK(b.beta2 == -b.beta1);
  CHECK(b.alpha2 == QuadExt(14));
  CHECK(b.eps11[0] == QuadExt(Rational(8, 9)));
  CHECK(b.eps11[2] == QuadExt(Rational(-1, 9)));
  // The B-diagonal of E is half of this coefficient, and equals 1/9.
  CHECK(b.eps22[1] == QuadExt(Rational(2, 9)));
}

TEST_CASE("epsilon products as matrices") {
  for (const auto& d : {designs::lisonek_design(), designs::complement(designs::lisonek_design())}) {
    const auto cc = CoherentConfig::from_design(d);
    const auto b = idempotent_basis(cc.params());
    std::array<std::array<Matrix<QuadExt>, 2>, 2> eps;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) eps[i][j] = assemble(cc, b.eps(i + 1, j + 1));
    }
    const Matrix<QuadExt> zero(cc.size(), cc.size());
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
          for (int l = 0; l < 2; ++l) {
            const Matrix<QuadExt> want = j == k ? eps[i][l] : zero;
            REQUIRE(eps[i][j] * eps[k][l] == want);
          }
        }
      }
    }
  }
}

TEST_CASE("projector and Gram classes") {
  const auto cc = CoherentConfig::from_design(designs::lisonek_design());
  const auto pd = projector_and_gram(cc);
  const auto& g = pd.classes;
  CHECK(g.vv_diag == QuadExt(Rational(4, 9)));
  CHECK(g.vv_off == QuadExt(Rational(-1, 18)));
  CHECK(g.vb_in == rad(Rational(-1, 18), 7));
  CHECK(g.vb_out == rad(Rational(1, 63), 7));
  CHECK(g.bb_diag == QuadExt(Rational(1, 9)));
  CHECK(g.bb_alpha == QuadExt(Rational(5, 126)));
  CHECK(g.bb_beta == QuadExt(Rational(-2, 63)));

  CHECK(pd.E == pd.E.transpose());
  CHECK(pd.E * pd.E == pd.E);
  CHECK(pd.E.trace() == QuadExt(8));
  for (std::size_t x = 0; x < cc.size(); ++x) {
    for (std::size_t y = 0; y < cc.size(); ++y) {
      REQUIRE(pd.E(x, y) == g.for_relation(cc.label(x, y)));
    }
  }

  // E kills both fibre indicators.
  Matrix<QuadExt> ind(cc.size(), 2);
  for (std::size_t x = 0; x < cc.size(); ++x) ind(x, x < 9 ? 0 : 1) = QuadExt(1);
  CHECK(pd.E * ind == Matrix<QuadExt>(cc.size(), 2));

  // E is a projector of rank m - 1: I - E is idempotent as well.
  Matrix<QuadExt> comp = identity(cc.size());
  for (std::size_t x = 0; x < cc.size(); ++x) {
    for (std::size_t y = 0; y < cc.size(); ++y) comp(x, y) -= pd.E(x, y);
  }
  CHECK(comp * comp == comp);
}

TEST_CASE("projector of the complement") {
  const auto cc = CoherentConfig::from_design(designs::complement(designs::lisonek_design()));
  const auto pd = projector_and_gram(cc);
  CHECK(pd.E.trace() == QuadExt(8));
  CHECK(pd.E * pd.E == pd.E);
  CHECK(pd.classes.vv_diag == QuadExt(Rational(4, 9)));
}
