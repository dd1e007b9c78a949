#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twodist/exactnum/rational.hpp"

namespace twodist::dioph {

using exactnum::Integer;
using exactnum::Rational;

struct Gate {
  std::string name;
  bool pass = false;
  /// Exact value that decided the gate.
  std::string witness;
};

/// A candidate (S, m, x, y, z) and the gates it went through, in order.
/// Rejected certificates stop at the first failing gate.
struct SolutionCertificate {
  Integer S;
  Integer m;
  Integer x;
  Integer y;
  std::optional<Integer> z;
  std::vector<Gate> gates;
  bool accepted = false;
  std::string reason;  ///< "accepted", or the failing gate and its witness
};

struct BruteReport {
  long Smax = 0;
  long mmax = 0;
  bool gate = true;
  long candidates = 0;  ///< (S, m, x, y) tuples with p1 = 0 reached the y loop for
  std::vector<SolutionCertificate> survivors;  ///< lexicographic in (S, m, x, y)
  bool all_on_family_i() const;
  /// z = (x(m + 1) - S(S + 1)) / (2S) is an integer for every survivor.
  bool all_integer_z() const;
};

/// Every integer 0 <= y < x < S < m <= mmax, S <= Smax with p1 = p2 = p3 = 0;
/// with the gate on, also the integrality gate. Each survivor then goes
/// through "integer z" and "family (i)"; only the latter decides acceptance.
/// DomainError when a bound is below 2
/// or mmax exceeds 10^6 (128-bit evaluation range).
BruteReport brute_solver(long Smax, long mmax, bool enforce_gate);

}  // namespace twodist::dioph
