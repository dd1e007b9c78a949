#pragma once

#include <array>

#include "twodist/coherent/configuration.hpp"
#include "twodist/exactnum/quadext.hpp"

namespace twodist::coherent {

using exactnum::Integer;
using exactnum::QuadExt;

/// Coefficient vector (c1..c9) of an element c1 A1 + ... + c9 A9.
using AlgebraElement = std::array<QuadExt, kRelations>;

/// Matrix units of the second irreducible block of the adjacency algebra.
struct IdempotentCoefficients {
  QuadExt alpha1;  ///< sqrt(S T)
  QuadExt alpha2;  ///< (k - N) / P * sqrt(S T)
  QuadExt beta1;   ///< sqrt(T - Lambda)
  QuadExt beta2;   ///< -beta1
  AlgebraElement eps11;
  AlgebraElement eps12;
  AlgebraElement eps21;
  AlgebraElement eps22;

  const AlgebraElement& eps(int i, int j) const;
};

/// Throws DegenerateRepresentation when alpha1 beta2 - alpha2 beta1 or
/// n (r - s) vanishes, or a radicand is negative.
IdempotentCoefficients idempotent_basis(const designs::DesignParameters& p);

/// Expands an algebra element into the |V u B| square matrix.
Matrix<QuadExt> assemble(const CoherentConfig& cc, const AlgebraElement& coeffs);

/// The seven inner-product values of the embedding x -> E e_x.
struct GramClasses {
  QuadExt vv_diag;
  QuadExt vv_off;
  QuadExt vb_in;   ///< point inside the block
  QuadExt vb_out;  ///< point outside the block
  QuadExt bb_diag;
  QuadExt bb_alpha;  ///< blocks meeting in alpha points
  QuadExt bb_beta;   ///< blocks meeting in beta points
  Integer m;
  Integer S;

  /// Value for a relation label 1..9.
  const QuadExt& for_relation(int relation) const;
};

/// Closed-form Gram values from the design parameters alone.
GramClasses gram_classes(const designs::DesignParameters& p);

struct ProjectorData {
  Matrix<QuadExt> E;
  GramClasses classes;
};

/// E = (eps11 + eps12 + eps21 + eps22) / 2 assembled as a matrix. Verifies
/// symmetry, E^2 = E, trace m - 1, that E kills both fibre indicators, and
/// that every entry equals the closed-form value of its relation; throws
/// ConsistencyError naming the first failure.
ProjectorData projector_and_gram(const CoherentConfig& cc);

}  // namespace twodist::coherent
