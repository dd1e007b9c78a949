#pragma once

#include <string>
#include <vector>

#include "twodist/dioph/solver.hpp"
#include "twodist/dioph/univariate.hpp"

namespace twodist::dioph {

struct ClassifyReport {
  long zmax = 0;
  std::vector<SolutionCertificate> family_i;  ///< one per z in 1..zmax
  /// Families (ii) and (iii) at z = 1..zmax, each expected to fail ordering.
  std::vector<SolutionCertificate> other_families;
  long acceptances() const;
  /// Exactly one acceptance, at z = 1, and no other family point accepted.
  bool ok() const;
};

/// Gates per family (i) point: ordering, integrality, then the S-range
/// branch (S = 2 accepted; 4 <= S <= m - 4 must be the tight 4-(23,7,1)
/// design or its complement; S = 3 and S >= m - 3 have no integer z).
ClassifyReport classify(long zmax);

struct QuadraticCase {
  std::string name;
  UPoly equation;  ///< in z, along family (i)
  QuadraticSolution solution;
  /// Informational cases are listed but do not take part in the verdict.
  bool informational = false;
};

struct ExclusionReport {
  std::vector<QuadraticCase> cases;
  /// S = 2 roots are exactly {-4/3, 1}; every other non-informational
  /// discriminant is a non-square, so z = 1 is the only integer root.
  bool ok() const;
};

ExclusionReport quadratic_exclusions();

}  // namespace twodist::dioph
