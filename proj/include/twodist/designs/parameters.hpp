#pragma once

#include <string>
#include <vector>

#include "twodist/errors.hpp"
#include "twodist/exactnum/rational.hpp"

namespace twodist::designs {

using exactnum::Integer;
using exactnum::Rational;

/// Quantities determined by (m, S, alpha, beta) for a quasi-symmetric
/// 2-design and its block graph, over any field F.
template <class F>
struct ParameterSet {
  F Lambda;  ///< blocks through a pair of points
  F T;       ///< blocks through a point
  F N;       ///< alpha-neighbours of a block through a point inside it
  F P;       ///< alpha-neighbours of a block through a point outside it
  F r;       ///< block-graph eigenvalues k > r > s
  F k;
  F n;  ///< number of blocks
  F s;
};

namespace detail {
template <class F>
F nonzero(F value, const char* what) {
  if (is_zero(value)) throw DegenerateParameters(std::string("zero denominator: ") + what);
  return value;
}
}  // namespace detail

/// Closed-form block-graph parameters in terms of (m, S, alpha, beta).
///
/// Total over the field: no ordering or integrality is enforced here. Throws
/// DegenerateParameters when a denominator vanishes.
template <class F>
ParameterSet<F> parameter_calculus(const F& m, const F& S, const F& alpha, const F& beta) {
  using detail::nonzero;
  const F one(1);
  const F two(2);
  const F S2 = S * S;
  const F lambda_den = S2 * S2 - two * S2 * S -
                       ((alpha + beta - one) * (m - one) - one) * S2 +
                       alpha * beta * m * (m - one);
  const F ld = nonzero(lambda_den, "Lambda (S^4 - 2S^3 - ...)");
  const F s_minus_1 = nonzero<F>(S - one, "S - 1");
  const F a_minus_b = nonzero<F>(alpha - beta, "alpha - beta");
  const F s_minus_a = nonzero<F>(S - alpha, "S - alpha");
  const F s_nz = nonzero(S, "S");

  ParameterSet<F> p;
  p.Lambda = S * s_minus_1 * s_minus_a * (S - beta) / ld;
  p.T = (m - one) * p.Lambda / s_minus_1;
  const F pair_term = S * s_minus_1 - beta * (m - one);
  p.N = alpha * (m - S) * pair_term * p.Lambda / (s_nz * a_minus_b * s_minus_a * s_minus_1);
  p.P = pair_term * p.Lambda / (a_minus_b * s_minus_1);
  p.r = ((m - S) * p.Lambda / s_minus_1 - (S - beta)) / a_minus_b;
  p.k = (m - S) * pair_term * p.Lambda / (a_minus_b * s_minus_a * s_minus_1);
  p.n = m * p.T / s_nz;
  p.s = (beta - S) / a_minus_b;
  return p;
}

/// (m, S, alpha, beta) together with the exact derived quantities.
struct DesignParameters {
  Integer m;
  Integer S;
  Integer alpha;
  Integer beta;
  ParameterSet<Rational> derived;

  /// Block-graph common-neighbour counts: mu = k + r s, lambda = mu + r + s.
  Rational mu() const { return derived.k + derived.r * derived.s; }
  Rational lambda() const { return mu() + derived.r + derived.s; }
};

/// Checks 0 <= beta < alpha < S < m (DomainError otherwise) and evaluates
/// the parameter calculus exactly.
DesignParameters derive_parameters(const Integer& m, const Integer& S, const Integer& alpha,
                                   const Integer& beta);

bool ordering_holds(const Integer& m, const Integer& S, const Integer& alpha,
                    const Integer& beta);

struct GateReport {
  bool pass = true;
  /// Every violated condition, e.g. "T = 795/2 is not an integer".
  std::vector<std::string> violations;
};

/// Lambda a positive integer; T, N, P, k, n nonnegative integers; r, s
/// integers; and the feasibility ordering.
GateReport integrality_gate(const DesignParameters& p);

}  // namespace twodist::designs
