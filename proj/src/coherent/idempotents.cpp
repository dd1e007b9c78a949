#include "twodist/coherent/idempotents.hpp"

#include "twodist/errors.hpp"

namespace twodist::coherent {

using exactnum::Rational;
using exactnum::sqrt_adjoin;

const AlgebraElement& IdempotentCoefficients::eps(int i, int j) const {
  if (i == 1) return j == 1 ? eps11 : eps12;
  return j == 1 ? eps21 : eps22;
}

IdempotentCoefficients idempotent_basis(const designs::DesignParameters& p) {
  const auto& d = p.derived;
  const Rational m(p.m);
  const Rational S(p.S);
  if ((S * d.T).sign() < 0 || (d.T - d.Lambda).sign() < 0) {
    throw DegenerateRepresentation("S T or T - Lambda is negative");
  }
  if (d.P.is_zero()) throw DegenerateRepresentation("P = 0");

  IdempotentCoefficients out;
  out.alpha1 = sqrt_adjoin(S * d.T);
  out.alpha2 = QuadExt((d.k - d.N) / d.P) * out.alpha1;
  out.beta1 = sqrt_adjoin(d.T - d.Lambda);
  out.beta2 = -out.beta1;

  const QuadExt cross = out.alpha1 * out.beta2 - out.alpha2 * out.beta1;
  if (cross.is_zero()) throw DegenerateRepresentation("alpha1 beta2 - alpha2 beta1 = 0");
  const Rational srg_den = d.n * (d.r - d.s);
  if (srg_den.is_zero()) throw DegenerateRepresentation("n (r - s) = 0");

  out.eps11[0] = (m - Rational(1)) / m;
  out.eps11[2] = Rational(-1) / m;

  out.eps12[5] = out.alpha2 / cross;
  out.eps12[6] = -out.alpha1 / cross;
  out.eps21[7] = out.eps12[5];
  out.eps21[8] = out.eps12[6];

  const Rational& n = d.n;
  const Rational& k = d.k;
  const Rational& s = d.s;
  out.eps22[1] = -((n - k - Rational(1)) * s + k * s + k) / srg_den;
  out.eps22[3] = (n - k + s) / srg_den;
  out.eps22[4] = (s - k) / srg_den;
  return out;
}

Matrix<QuadExt> assemble(const CoherentConfig& cc, const AlgebraElement& coeffs) {
  Matrix<QuadExt> out(cc.size(), cc.size());
  for (std::size_t x = 0; x < cc.size(); ++x) {
    for (std::size_t y = 0; y < cc.size(); ++y) out(x, y) = coeffs[cc.label(x, y) - 1];
  }
  return out;
}

const QuadExt& GramClasses::for_relation(int relation) const {
  switch (relation) {
    case 1: return vv_diag;
    case 2: return bb_diag;
    case 3: return vv_off;
    case 4: return bb_alpha;
    case 5: return bb_beta;
    case 6:
    case 8: return vb_in;
    case 7:
    case 9: return vb_out;
    default: throw DomainError("relation label out of range: " + std::to_string(relation));
  }
}

GramClasses gram_classes(const designs::DesignParameters& p) {
  const auto basis = idempotent_basis(p);
  const auto& d = p.derived;
  const Rational m(p.m);
  const QuadExt cross2 = QuadExt(2) * (basis.alpha1 * basis.beta2 - basis.alpha2 * basis.beta1);
  const Rational srg2 = Rational(2) * d.n * (d.r - d.s);

  GramClasses g;
  g.m = p.m;
  g.S = p.S;
  g.vv_diag = (m - Rational(1)) / (Rational(2) * m);
  g.vv_off = Rational(-1) / (Rational(2) * m);
  g.vb_in = basis.alpha2 / cross2;
  g.vb_out = -basis.alpha1 / cross2;
  g.bb_diag = -((d.n - d.k - Rational(1)) * d.s + d.k * d.s + d.k) / srg2;
  g.bb_alpha = (d.n - d.k + d.s) / srg2;
  g.bb_beta = (d.s - d.k) / srg2;
  return g;
}

ProjectorData projector_and_gram(const CoherentConfig& cc) {
  const auto basis = idempotent_basis(cc.params());
  Matrix<QuadExt> E = assemble(cc, basis.eps11) + assemble(cc, basis.eps12) +
                      assemble(cc, basis.eps21) + assemble(cc, basis.eps22);
  const QuadExt half(Rational(1, 2));
  for (std::size_t x = 0; x < E.rows(); ++x) {
    for (std::size_t y = 0; y < E.cols(); ++y) E(x, y) = E(x, y) * half;
  }

  ProjectorData out{std::move(E), gram_classes(cc.params())};
  const auto& M = out.E;
  const std::size_t N = M.rows();
  const auto m = static_cast<std::size_t>(cc.point_count());

  for (std::size_t x = 0; x < N; ++x) {
    for (std::size_t y = 0; y < N; ++y) {
      if (M(x, y) != out.classes.for_relation(cc.label(x, y))) {
        throw ConsistencyError("E(" + std::to_string(x) + "," + std::to_string(y) + ") = " +
                               M(x, y).str() + " differs from its closed-form class value " +
                               out.classes.for_relation(cc.label(x, y)).str());
      }
      if (M(x, y) != M(y, x)) throw ConsistencyError("E is not symmetric");
    }
  }
  if (M.trace() != QuadExt(exactnum::Rational(Integer(cc.params().m - 1)))) {
    throw ConsistencyError("trace(E) = " + M.trace().str() + ", expected m - 1");
  }
  for (std::size_t x = 0; x < N; ++x) {
    QuadExt on_points;
    QuadExt on_blocks;
    for (std::size_t y = 0; y < N; ++y) (y < m ? on_points : on_blocks) += M(x, y);
    if (!on_points.is_zero() || !on_blocks.is_zero()) {
      throw ConsistencyError("E does not annihilate the fibre indicators (row " +
                             std::to_string(x) + ")");
    }
  }
  if (M * M != M) throw ConsistencyError("E^2 != E");
  return out;
}

}  // namespace twodist::coherent
