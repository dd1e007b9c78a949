#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "twodist/coherent/idempotents.hpp"
#include "twodist/exactnum/quadext.hpp"

namespace twodist::geometry {

using exactnum::Integer;
using exactnum::QuadExt;
using exactnum::Rational;

enum class Branch { GammaAbove2, GammaBelow2 };

/// Projector frame: the rows of E as they are, so distinct points are at
/// distance 1. Simplex frame: point vectors scaled by sqrt(2), so distinct
/// points are at distance sqrt(2) and lie on a sphere of radius sqrt(f(m)).
enum class Frame { Projector, Simplex };

enum class PairClass { VV, VBIn, VBOut, BBAlpha, BBBeta };

std::string to_string(Branch b);
std::string to_string(Frame f);
std::string to_string(PairClass c);

/// f(x) = (x - 1) / x.
Rational f(const Rational& x);

/// Radii and squared distances. d1 is the point-point distance, d2 < d3
/// the block-block distances (alpha, beta), d4 < d5 the point-block ones.
struct DistanceSpectrum {
  Frame frame = Frame::Simplex;
  Integer S;
  Integer m;
  QuadExt R1;
  QuadExt R2;
  std::array<QuadExt, 5> d_sq;
  std::map<PairClass, QuadExt> classes;
  std::optional<QuadExt> gamma;

  /// 1-based.
  const QuadExt& squared(int i) const { return d_sq.at(static_cast<std::size_t>(i - 1)); }
  std::set<QuadExt> distinct_squared() const;
};

/// Radius and distance formulas in the simplex frame. Requires
/// 0 <= beta < alpha < S < m (DomainError otherwise).
DistanceSpectrum theoretical_spectrum(const Integer& S, const Integer& m, const Integer& alpha,
                                      const Integer& beta, Branch branch);

/// sqrt(E_bb): the radius of the block vectors in the projector frame.
QuadExt native_radius(const coherent::GramClasses& g);

/// Block radius (simplex frame) that makes d2 = sqrt(2) (gamma > 2) or
/// d3 = sqrt(2) (gamma < 2).
QuadExt two_distance_radius(const coherent::GramClasses& g, Branch branch);

/// Converts the Gram classes to the requested frame, rescales the block
/// vectors to radius R2 and returns the squared distance of every pair class.
DistanceSpectrum spectrum_from_gram(const coherent::GramClasses& g, const QuadExt& R2,
                                    Frame frame);

/// Distinct distances between the fibres, read entry by entry from E.
struct EmbeddingDistanceSets {
  std::set<QuadExt> vv;
  std::set<QuadExt> vb;
  std::set<QuadExt> bb;
  /// |A(V,V)| = 1, |A(V,B)| <= 2, |A(B,B)| <= 2.
  bool conditions_hold() const { return vv.size() == 1 && vb.size() <= 2 && bb.size() <= 2; }
};

EmbeddingDistanceSets embedding_distance_sets(const coherent::Matrix<QuadExt>& E,
                                              int point_count, const QuadExt& R2, Frame frame);

enum class Iota { I1 = 1, I2 = 2, I3 = 3, I4 = 4 };

struct CaseLabel {
  Iota iota = Iota::I1;
  Branch branch = Branch::GammaAbove2;
  char letter = 'A';
  /// Letter of the complementary design's embedding (iota 1 <-> 2, 3 <-> 4).
  char complement_letter = 'B';
};

char case_letter(Iota iota, Branch branch);

struct Classification {
  bool two_distance = false;
  /// Squared second distance after normalising d1 to sqrt(2).
  std::optional<QuadExt> gamma;
  std::optional<CaseLabel> label;
  std::string reason;
  /// Positive roots of the quadratics for R2 in each branch and their
  /// comparison with R1 (both in the simplex frame).
  QuadExt root_gt2;
  QuadExt root_lt2;
  bool root_gt2_exceeds_R1 = false;
  bool root_lt2_below_R1 = false;
};

/// Two-distance iff the normalised squared distances are exactly {2, gamma}
/// with gamma != 2. Throws DegeneracyError when every distance is sqrt(2) and
/// ConsistencyError if the geometry lands in case (D) or (F).
Classification two_distance_classify(const DistanceSpectrum& spec);

struct PResiduals {
  std::array<Integer, 3> gt2;  ///< p_i(S, m, alpha, beta)
  std::array<Integer, 3> lt2;  ///< p_i(S, m, beta, alpha)
  bool feasible_gt2() const;
  bool feasible_lt2() const;
};

PResiduals p_residuals(const Integer& S, const Integer& m, const Integer& alpha,
                       const Integer& beta);

/// The three exact conditions the residuals come from, evaluated on the
/// distances directly. gamma > 2: with d2^2 = 2, check d4^2 = 2 and
/// d3 = d5; with R2 the branch root, check 2 / d5^2 = (S - alpha)/(S - beta).
/// gamma < 2: with d3^2 = 2, check d5^2 = 2 and d2 = d4; with R2 the branch
/// root, check d4^2 / 2 = (S - alpha)/(S - beta).
std::array<bool, 3> geometric_conditions(const Integer& S, const Integer& m, const Integer& alpha,
                                         const Integer& beta, Branch branch);

/// The i(b) = q exclusion: D1 = sqrt(2), D2 = sqrt(f(m - S)),
/// D3 = sqrt((m - S + 1)/(m - S)).
struct RemarkReport {
  QuadExt D1;
  QuadExt D2;
  QuadExt D3;
  bool d3_exceeds_1 = false;
  bool d3_exceeds_d2 = false;
  bool gap_is_2_over_m_minus_S = false;
  /// D3 = D1 forces m - S = 1 and D2 = 0.
  bool d3_equals_d1 = false;
  bool ok() const { return d3_exceeds_1 && d3_exceeds_d2 && gap_is_2_over_m_minus_S; }
};

RemarkReport remark_checks(const Integer& S, const Integer& m);

}  // namespace twodist::geometry
