#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twodist/exactnum/rational.hpp"

namespace twodist::designs {

using Block = std::vector<int>;

/// Points 0..m-1 and a list of equal-size blocks, each strictly ascending.
class IncidenceDesign {
 public:
  /// Throws StructureError when a block is unsorted, out of range, or of a
  /// different size than the first block.
  IncidenceDesign(int m, std::vector<Block> blocks);

  int point_count() const { return m_; }
  int block_size() const { return blocks_.empty() ? 0 : static_cast<int>(blocks_.front().size()); }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_[i]; }

  bool contains(std::size_t block, int point) const;

  friend bool operator==(const IncidenceDesign&, const IncidenceDesign&) = default;

 private:
  int m_;
  std::vector<Block> blocks_;
};

/// Size of the intersection of two sorted blocks (merge walk).
int intersection_size(const Block& a, const Block& b);

struct TDesignResult {
  bool is_design = false;
  std::optional<exactnum::Integer> Lambda;
  /// First t-subset whose count disagrees, when not a design.
  std::string discrepancy;
};

/// Counts the blocks through every t-subset of points.
TDesignResult verify_t_design(const IncidenceDesign& d, int t);

struct IntersectionNumbers {
  std::set<int> values;
  bool quasi_symmetric = false;
  /// Larger and smaller value when quasi-symmetric.
  std::optional<int> alpha;
  std::optional<int> beta;
};

IntersectionNumbers intersection_numbers(const IncidenceDesign& d);

/// The 2-(9,2,1) design: all 2-subsets of 9 points in lexicographic order.
IncidenceDesign lisonek_design();

/// Replaces every block by its complement in the point set.
IncidenceDesign complement(const IncidenceDesign& d);

}  // namespace twodist::designs
