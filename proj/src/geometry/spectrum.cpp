#include "twodist/geometry/spectrum.hpp"

#include "twodist/designs/parameters.hpp"
#include "twodist/dioph/system.hpp"
#include "twodist/errors.hpp"

namespace twodist::geometry {

using exactnum::sqrt_adjoin;

std::string to_string(Branch b) { return b == Branch::GammaAbove2 ? "gt2" : "lt2"; }
std::string to_string(Frame f) { return f == Frame::Projector ? "projector" : "simplex"; }
std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::VV: return "point-point";
    case PairClass::VBIn: return "point-block incident";
    case PairClass::VBOut: return "point-block non-incident";
    case PairClass::BBAlpha: return "block-block alpha";
    case PairClass::BBBeta: return "block-block beta";
  }
  return "?";
}

Rational f(const Rational& x) {
  if (x.is_zero()) throw DomainError("f(0) is undefined");
  return (x - Rational(1)) / x;
}

std::set<QuadExt> DistanceSpectrum::distinct_squared() const {
  return std::set<QuadExt>(d_sq.begin(), d_sq.end());
}

namespace {

struct Radicals {
  Rational fm;
  QuadExt ra;  ///< sqrt(2 - f(m - S))
  QuadExt rb;  ///< sqrt(f(m) - f(m - S))
  QuadExt rc;  ///< sqrt(f(m) - f(S))
};

Radicals radicals(const Integer& S, const Integer& m) {
  if (S < 1 || m <= S) throw DomainError("need 1 <= S < m");
  Radicals r;
  r.fm = f(Rational(m));
  const Rational fms = f(Rational(Integer(m - S)));
  r.ra = sqrt_adjoin(Rational(2) - fms);
  r.rb = sqrt_adjoin(r.fm - fms);
  r.rc = sqrt_adjoin(r.fm - f(Rational(S)));
  return r;
}

QuadExt branch_root(const Radicals& r, Branch branch) {
  return branch == Branch::GammaAbove2 ? r.ra + r.rb : r.ra - r.rb;
}

DistanceSpectrum spectrum_at(const Integer& S, const Integer& m, const Integer& alpha,
                             const Integer& beta, const QuadExt& R2, Branch branch,
                             const Radicals& r) {
  DistanceSpectrum out;
  out.frame = Frame::Simplex;
  out.S = S;
  out.m = m;
  out.R1 = sqrt_adjoin(r.fm);
  out.R2 = R2;
  const Rational Sq(S);
  const Rational mq(m);
  const Rational base = Rational(2) * mq / ((mq - Sq) * Sq);
  const QuadExt R2sq = R2 * R2;
  const QuadExt fm(r.fm);
  out.d_sq[0] = QuadExt(2);
  out.d_sq[1] = R2sq * QuadExt(base * (Sq - Rational(alpha)));
  out.d_sq[2] = R2sq * QuadExt(base * (Sq - Rational(beta)));
  const QuadExt two_r2 = QuadExt(2) * R2;
  if (branch == Branch::GammaAbove2) {
    out.d_sq[3] = R2sq - two_r2 * r.rb + fm;
    out.d_sq[4] = R2sq + two_r2 * r.rc + fm;
    out.classes[PairClass::VBOut] = out.d_sq[3];
    out.classes[PairClass::VBIn] = out.d_sq[4];
  } else {
    out.d_sq[3] = R2sq - two_r2 * r.rc + fm;
    out.d_sq[4] = R2sq + two_r2 * r.rb + fm;
    out.classes[PairClass::VBIn] = out.d_sq[3];
    out.classes[PairClass::VBOut] = out.d_sq[4];
  }
  out.classes[PairClass::VV] = out.d_sq[0];
  out.classes[PairClass::BBAlpha] = out.d_sq[1];
  out.classes[PairClass::BBBeta] = out.d_sq[2];
  return out;
}

void require_ordering(const Integer& S, const Integer& m, const Integer& alpha,
                      const Integer& beta) {
  if (!designs::ordering_holds(m, S, alpha, beta)) {
    throw DomainError("need 0 <= beta < alpha < S < m");
  }
}

}  // namespace

DistanceSpectrum theoretical_spectrum(const Integer& S, const Integer& m, const Integer& alpha,
                                      const Integer& beta, Branch branch) {
  require_ordering(S, m, alpha, beta);
  const Radicals r = radicals(S, m);
  return spectrum_at(S, m, alpha, beta, branch_root(r, branch), branch, r);
}

QuadExt native_radius(const coherent::GramClasses& g) {
  if (g.bb_diag.sign() <= 0) throw DomainError("block vectors have nonpositive norm");
  const auto rho_sq = g.bb_diag.as_rational();
  if (!rho_sq) throw DomainError("block norm is irrational");
  return sqrt_adjoin(*rho_sq);
}

QuadExt two_distance_radius(const coherent::GramClasses& g, Branch branch) {
  const QuadExt& other = branch == Branch::GammaAbove2 ? g.bb_alpha : g.bb_beta;
  const auto ratio = (g.bb_diag / (g.bb_diag - other)).as_rational();
  if (!ratio) throw DomainError("block Gram classes are irrational");
  return sqrt_adjoin(*ratio);
}

DistanceSpectrum spectrum_from_gram(const coherent::GramClasses& g, const QuadExt& R2,
                                    Frame frame) {
  if (R2.sign() <= 0) throw DomainError("R2 must be positive, got " + R2.str());
  const QuadExt rho = native_radius(g);
  const QuadExt lambda = frame == Frame::Simplex ? sqrt_adjoin(Rational(2)) : QuadExt(1);
  const QuadExt lambda_sq = frame == Frame::Simplex ? QuadExt(2) : QuadExt(1);
  const QuadExt R2sq = R2 * R2;

  DistanceSpectrum out;
  out.frame = frame;
  out.S = g.S;
  out.m = g.m;
  out.R1 = sqrt_adjoin(*(lambda_sq * g.vv_diag).as_rational());
  out.R2 = R2;

  auto bb = [&](const QuadExt& cls) {
    return R2sq * QuadExt(2) * (g.bb_diag - cls) / g.bb_diag;
  };
  // keep the radical count at two: lambda * c / rho is a single radical
  auto vb = [&](const QuadExt& cls) {
    const QuadExt single = lambda * cls / rho;
    return lambda_sq * g.vv_diag + R2sq - QuadExt(2) * (single * R2);
  };
  out.classes[PairClass::VV] = lambda_sq * QuadExt(2) * (g.vv_diag - g.vv_off);
  out.classes[PairClass::BBAlpha] = bb(g.bb_alpha);
  out.classes[PairClass::BBBeta] = bb(g.bb_beta);
  out.classes[PairClass::VBIn] = vb(g.vb_in);
  out.classes[PairClass::VBOut] = vb(g.vb_out);

  const QuadExt& in = out.classes[PairClass::VBIn];
  const QuadExt& outside = out.classes[PairClass::VBOut];
  out.d_sq[0] = out.classes[PairClass::VV];
  out.d_sq[1] = out.classes[PairClass::BBAlpha];
  out.d_sq[2] = out.classes[PairClass::BBBeta];
  out.d_sq[3] = in < outside ? in : outside;
  out.d_sq[4] = in < outside ? outside : in;
  return out;
}

EmbeddingDistanceSets embedding_distance_sets(const coherent::Matrix<QuadExt>& E,
                                              int point_count, const QuadExt& R2, Frame frame) {
  if (R2.sign() <= 0) throw DomainError("R2 must be positive, got " + R2.str());
  const auto m = static_cast<std::size_t>(point_count);
  if (m == 0 || m >= E.rows()) throw DomainError("need points and blocks");
  const QuadExt rho_sq = E(m, m);
  const auto rho_sq_q = rho_sq.as_rational();
  if (!rho_sq_q || rho_sq.sign() <= 0) throw DomainError("bad block norm " + rho_sq.str());
  const QuadExt rho = sqrt_adjoin(*rho_sq_q);

  const QuadExt vv_scale = frame == Frame::Simplex ? QuadExt(2) : QuadExt(1);
  const QuadExt bb_scale = R2 * R2 / rho_sq;
  const QuadExt lambda = frame == Frame::Simplex ? sqrt_adjoin(Rational(2)) : QuadExt(1);
  const QuadExt lambda_over_rho = lambda / rho;

  EmbeddingDistanceSets out;
  const std::size_t N = E.rows();
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i + 1; j < N; ++j) {
      if (j < m) {
        out.vv.insert(vv_scale * (E(i, i) + E(j, j) - QuadExt(2) * E(i, j)));
      } else if (i >= m) {
        out.bb.insert(bb_scale * (E(i, i) + E(j, j) - QuadExt(2) * E(i, j)));
      } else {
        const QuadExt cross = (lambda_over_rho * E(i, j)) * R2;
        out.vb.insert(vv_scale * E(i, i) + bb_scale * E(j, j) - QuadExt(2) * cross);
      }
    }
  }
  return out;
}

char case_letter(Iota iota, Branch branch) {
  const int base = branch == Branch::GammaAbove2 ? 'A' : 'E';
  return static_cast<char>(base + static_cast<int>(iota) - 1);
}

Classification two_distance_classify(const DistanceSpectrum& spec) {
  Classification out;
  const auto d1 = spec.d_sq[0].as_rational();
  if (!d1 || d1->sign() <= 0) throw DomainError("d1^2 must be a positive rational");
  const QuadExt scale(Rational(2) / *d1);

  std::set<QuadExt> values;
  for (const auto& d : spec.d_sq) values.insert(d * scale);

  const Radicals r = radicals(spec.S, spec.m);
  out.root_gt2 = branch_root(r, Branch::GammaAbove2);
  out.root_lt2 = branch_root(r, Branch::GammaBelow2);
  // Both roots are positive (ra > rb), so compare squares: the roots and R1
  // together can need three independent radicals, their squares at most two.
  out.root_gt2_exceeds_R1 = out.root_gt2 * out.root_gt2 > QuadExt(r.fm);
  out.root_lt2_below_R1 = out.root_lt2 * out.root_lt2 < QuadExt(r.fm);

  if (values.size() == 1) {
    throw DegeneracyError("every distance equals sqrt(2): gamma = 2 is excluded");
  }
  if (values.size() != 2 || !values.contains(QuadExt(2))) {
    out.reason = std::to_string(values.size()) + " distinct distances";
    return out;
  }
  out.two_distance = true;
  const QuadExt gamma = *values.begin() == QuadExt(2) ? *values.rbegin() : *values.begin();
  out.gamma = gamma;
  const Branch branch = gamma > QuadExt(2) ? Branch::GammaAbove2 : Branch::GammaBelow2;

  const auto in_it = spec.classes.find(PairClass::VBIn);
  const auto out_it = spec.classes.find(PairClass::VBOut);
  if (in_it == spec.classes.end() || out_it == spec.classes.end()) {
    out.reason = "point-block classes missing";
    return out;
  }
  const int sphere = spec.R1 <=> spec.R2 == std::strong_ordering::less      ? -1
                     : spec.R1 <=> spec.R2 == std::strong_ordering::greater ? 1
                                                                             : 0;
  const int side = in_it->second <=> out_it->second == std::strong_ordering::less      ? -1
                   : in_it->second <=> out_it->second == std::strong_ordering::greater ? 1
                                                                                       : 0;
  if (sphere == 0 || side == 0) {
    out.reason = sphere == 0 ? "R1 = R2" : "incident and non-incident points are equidistant";
    return out;
  }
  // points on the smaller sphere: iota 1, 2; non-incident points closer: iota 1, 4
  Iota iota;
  if (sphere < 0) {
    iota = side > 0 ? Iota::I1 : Iota::I2;
  } else {
    iota = side > 0 ? Iota::I4 : Iota::I3;
  }
  static constexpr Iota kComplement[] = {Iota::I2, Iota::I1, Iota::I4, Iota::I3};
  CaseLabel label;
  label.iota = iota;
  label.branch = branch;
  label.letter = case_letter(iota, branch);
  label.complement_letter = case_letter(kComplement[static_cast<int>(iota) - 1], branch);
  out.label = label;

  if ((label.letter == 'D' && out.root_gt2_exceeds_R1) ||
      (label.letter == 'F' && out.root_lt2_below_R1)) {
    throw ConsistencyError(std::string("classified as the impossible case (") + label.letter +
                           ")");
  }
  return out;
}

bool PResiduals::feasible_gt2() const {
  return gt2[0] == 0 && gt2[1] == 0 && gt2[2] == 0;
}
bool PResiduals::feasible_lt2() const {
  return lt2[0] == 0 && lt2[1] == 0 && lt2[2] == 0;
}

PResiduals p_residuals(const Integer& S, const Integer& m, const Integer& alpha,
                       const Integer& beta) {
  require_ordering(S, m, alpha, beta);
  using dioph::PolyId;
  PResiduals out;
  const PolyId ids[] = {PolyId::P1, PolyId::P2, PolyId::P3};
  for (std::size_t i = 0; i < 3; ++i) {
    out.gt2[i] = dioph::eval_p(ids[i], S, m, alpha, beta);
    out.lt2[i] = dioph::eval_p(ids[i], S, m, beta, alpha);
  }
  return out;
}

std::array<bool, 3> geometric_conditions(const Integer& S, const Integer& m, const Integer& alpha,
                                         const Integer& beta, Branch branch) {
  require_ordering(S, m, alpha, beta);
  const Radicals r = radicals(S, m);
  const Rational Sq(S);
  const Rational mq(m);
  const Rational sa = Sq - Rational(alpha);
  const Rational sb = Sq - Rational(beta);
  const Rational pinned = branch == Branch::GammaAbove2 ? sa : sb;
  const QuadExt R2_pinned = sqrt_adjoin((mq - Sq) * Sq / (pinned * mq));
  const auto at_pinned = spectrum_at(S, m, alpha, beta, R2_pinned, branch, r);
  const auto at_root = spectrum_at(S, m, alpha, beta, branch_root(r, branch), branch, r);
  const QuadExt two(2);

  std::array<bool, 3> out{};
  if (branch == Branch::GammaAbove2) {
    out[0] = at_pinned.squared(4) == two;
    out[1] = at_pinned.squared(3) == at_pinned.squared(5);
    out[2] = two * QuadExt(sb) == at_root.squared(5) * QuadExt(sa);
  } else {
    out[0] = at_pinned.squared(5) == two;
    out[1] = at_pinned.squared(2) == at_pinned.squared(4);
    out[2] = at_root.squared(4) * QuadExt(sb) == two * QuadExt(sa);
  }
  return out;
}

RemarkReport remark_checks(const Integer& S, const Integer& m) {
  if (S < 1 || m <= S) throw DomainError("need m > S >= 1");
  const Rational gap(Integer(m - S));
  RemarkReport out;
  const Rational d2_sq = f(gap);
  const Rational d3_sq = (gap + Rational(1)) / gap;
  out.D1 = sqrt_adjoin(Rational(2));
  out.D2 = sqrt_adjoin(d2_sq);
  out.D3 = sqrt_adjoin(d3_sq);
  out.d3_exceeds_1 = d3_sq > Rational(1);
  out.d3_exceeds_d2 = out.D3 > out.D2;
  out.gap_is_2_over_m_minus_S = d3_sq - d2_sq == Rational(2) / gap;
  out.d3_equals_d1 = d3_sq == Rational(2);
  return out;
}

}  // namespace twodist::geometry
