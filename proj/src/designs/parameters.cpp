#include "twodist/designs/parameters.hpp"

namespace twodist::designs {

bool ordering_holds(const Integer& m, const Integer& S, const Integer& alpha,
                    const Integer& beta) {
  return 0 <= beta && beta < alpha && alpha < S && S < m;
}

DesignParameters derive_parameters(const Integer& m, const Integer& S, const Integer& alpha,
                                   const Integer& beta) {
  if (!ordering_holds(m, S, alpha, beta)) {
    throw DomainError("parameters violate 0 <= beta < alpha < S < m: (m,S,alpha,beta) = (" +
                      exactnum::to_string(m) + "," + exactnum::to_string(S) + "," +
                      exactnum::to_string(alpha) + "," + exactnum::to_string(beta) + ")");
  }
  DesignParameters out{m, S, alpha, beta, {}};
  out.derived = parameter_calculus<Rational>(Rational(m), Rational(S), Rational(alpha),
                                             Rational(beta));
  return out;
}

GateReport integrality_gate(const DesignParameters& p) {
  GateReport report;
  auto fail = [&](std::string why) {
    report.pass = false;
    report.violations.push_back(std::move(why));
  };
  const auto& d = p.derived;
  if (!ordering_holds(p.m, p.S, p.alpha, p.beta)) fail("ordering 0 <= beta < alpha < S < m");

  if (!d.Lambda.is_integer()) {
    fail("Lambda = " + d.Lambda.str() + " is not an integer");
  } else if (d.Lambda < Rational(1)) {
    fail("Lambda = " + d.Lambda.str() + " is not positive");
  }
  const std::pair<const char*, const Rational*> nonneg[] = {
      {"T", &d.T}, {"N", &d.N}, {"P", &d.P}, {"k", &d.k}, {"n", &d.n}};
  for (const auto& [name, value] : nonneg) {
    if (!value->is_integer()) {
      fail(std::string(name) + " = " + value->str() + " is not an integer");
    } else if (value->sign() < 0) {
      fail(std::string(name) + " = " + value->str() + " is negative");
    }
  }
  const std::pair<const char*, const Rational*> ints[] = {{"r", &d.r}, {"s", &d.s}};
  for (const auto& [name, value] : ints) {
    if (!value->is_integer()) fail(std::string(name) + " = " + value->str() + " is not an integer");
  }
  return report;
}

}  // namespace twodist::designs
