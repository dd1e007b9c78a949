#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twodist/coherent/matrix.hpp"
#include "twodist/designs/incidence.hpp"
#include "twodist/designs/parameters.hpp"

namespace twodist::coherent {

/// Number of relations of a type (2,2;3) configuration.
inline constexpr int kRelations = 9;

/// Relation labels over the ordered set V u B (points first, then blocks):
///  1 diagonal of V, 2 diagonal of B, 3 distinct points,
///  4 blocks meeting in alpha points, 5 blocks meeting in beta points,
///  6 (point, block) incident, 7 (point, block) not incident,
///  8 and 9 the transposes of 6 and 7.
class CoherentConfig {
 public:
  /// Requires exactly two block-intersection sizes (StructureError otherwise);
  /// relation 4 is the larger one.
  static CoherentConfig from_design(const designs::IncidenceDesign& d);

  int point_count() const { return m_; }
  int block_count() const { return n_; }
  std::size_t size() const { return static_cast<std::size_t>(m_ + n_); }

  int label(std::size_t x, std::size_t y) const { return labels_[x * size() + y]; }
  /// 0/1 adjacency matrix of relation i (1-based).
  Matrix<int> adjacency(int relation) const;
  long relation_size(int relation) const;

  const designs::DesignParameters& params() const { return params_; }
  const designs::IncidenceDesign& design() const { return design_; }

 private:
  CoherentConfig(designs::IncidenceDesign d, designs::DesignParameters p);

  designs::IncidenceDesign design_;
  designs::DesignParameters params_;
  int m_;
  int n_;
  std::vector<std::uint8_t> labels_;
};

struct AxiomReport {
  bool ok = true;
  /// Description of the first violated condition.
  std::string violation;
  /// p[i][j][k] for 1-based relation indices; empty when relation k is empty.
  std::array<std::array<std::array<std::optional<long>, kRelations + 1>, kRelations + 1>,
             kRelations + 1>
      constants{};
  /// Transpose map i -> i*.
  std::array<int, kRelations + 1> transpose{};

  long constant(int i, int j, int k) const { return constants[i][j][k].value_or(-1); }
};

/// Exhaustive check of the four coherent-configuration axioms.
AxiomReport verify_axioms(const CoherentConfig& cc);

}  // namespace twodist::coherent
