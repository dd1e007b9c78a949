#include "twodist/dioph/classify.hpp"

#include <gmp.h>

#include "twodist/designs/parameters.hpp"
#include "twodist/dioph/auxiliary.hpp"
#include "twodist/dioph/system.hpp"
#include "twodist/errors.hpp"

namespace twodist::dioph {

namespace {

std::string tuple_str(const FamilyPoint& p) {
  return "(S, m, x, y) = (" + p.S.get_str() + ", " + p.m.get_str() + ", " + p.x.get_str() + ", " +
         p.y.get_str() + ")";
}

SolutionCertificate start(const FamilyPoint& p, long z) {
  SolutionCertificate c;
  c.S = p.S;
  c.m = p.m;
  c.x = p.x;
  c.y = p.y;
  c.z = Integer(z);
  return c;
}

/// Appends the gate; returns false (and finalises the certificate) on failure.
bool gate(SolutionCertificate& c, std::string name, bool pass, std::string witness) {
  c.gates.push_back({std::move(name), pass, std::move(witness)});
  if (!pass) {
    c.accepted = false;
    c.reason = "rejected: " + c.gates.back().name + " (" + c.gates.back().witness + ")";
  }
  return pass;
}

bool ordering_gate(SolutionCertificate& c, const FamilyPoint& p) {
  const bool ok = designs::ordering_holds(p.m, p.S, p.x, p.y);
  return gate(c, "ordering 0 <= y < x < S < m", ok, tuple_str(p));
}

SolutionCertificate classify_family_i(long z) {
  const FamilyPoint p = family_points(Family::I, Integer(z));
  SolutionCertificate c = start(p, z);
  if (!ordering_gate(c, p)) return c;

  designs::DesignParameters params;
  try {
    params = designs::derive_parameters(p.m, p.S, p.x, p.y);
  } catch (const DegenerateParameters& e) {
    gate(c, "integrality", false, e.what());
    return c;
  }
  const auto report = designs::integrality_gate(params);
  if (!gate(c, "integrality", report.pass,
            report.pass ? "all parameters integral" : report.violations.front())) {
    return c;
  }

  const Integer& S = p.S;
  const Integer& m = p.m;
  if (S == 2) {
    gate(c, "S = 2 branch", true, "Lisonek parameters (S, m) = (2, " + m.get_str() + ")");
  } else if (S == 3) {
    gate(c, "S = 3 branch", false, "3z^2 + z - 6 = 0 has discriminant 73");
  } else if (S >= 4 && S <= m - 4) {
    const Rational pairs = Rational(m) * Rational(Integer(m - 1)) / Rational(2);
    if (!gate(c, "block count n = m(m-1)/2", params.derived.n == pairs,
              "n = " + params.derived.n.str())) {
      return c;
    }
    if (S != 7 && S != 16) {
      gate(c, "tight 4-(23,7,1) design", false,
           "S = " + S.get_str() + " != 7 (or its complement 16)");
    } else if (m != 23) {
      gate(c, "tight 4-(23,7,1) design", false, "m = " + m.get_str() + " != 23");
    } else {
      gate(c, "tight 4-(23,7,1) design", true, "(m, S) = (23, " + S.get_str() + ")");
    }
  } else {
    const Integer gap = m - S;
    gate(c, "S = m - " + gap.get_str() + " branch", false,
         "no integer z with m - S = " + gap.get_str());
  }
  if (c.gates.back().pass) {
    c.accepted = true;
    c.reason = "accepted";
  }
  return c;
}

}  // namespace

long ClassifyReport::acceptances() const {
  long n = 0;
  for (const auto& c : family_i) n += c.accepted ? 1 : 0;
  for (const auto& c : other_families) n += c.accepted ? 1 : 0;
  return n;
}

bool ClassifyReport::ok() const {
  if (acceptances() != 1) return false;
  for (const auto& c : family_i) {
    if (c.accepted) return c.z && *c.z == 1;
  }
  return false;
}

ClassifyReport classify(long zmax) {
  if (zmax < 1) throw DomainError("zmax must be at least 1");
  ClassifyReport report;
  report.zmax = zmax;
  for (long z = 1; z <= zmax; ++z) report.family_i.push_back(classify_family_i(z));
  for (Family fam : {Family::II, Family::III}) {
    for (long z = 1; z <= zmax; ++z) {
      const FamilyPoint p = family_points(fam, Integer(z));
      SolutionCertificate c = start(p, z);
      if (ordering_gate(c, p)) {
        c.accepted = true;
        c.reason = "accepted";
      } else {
        c.reason = "rejected: family (" + to_string(fam) + ") gives S = alpha or m < S (" +
                   tuple_str(p) + ")";
      }
      report.other_families.push_back(std::move(c));
    }
  }
  return report;
}

bool ExclusionReport::ok() const {
  bool saw_s2 = false;
  for (const auto& c : cases) {
    if (c.informational) continue;
    const auto& s = c.solution;
    if (c.name == "S = 2") {
      saw_s2 = true;
      const std::vector<exactnum::QuadExt> expected = {exactnum::QuadExt(Rational(-4, 3)),
                                                       exactnum::QuadExt(1)};
      if (s.roots != expected) return false;
      continue;
    }
    if (s.discriminant_is_square || !s.integer_roots.empty()) return false;
    if (mpz_perfect_square_p(s.discriminant.get_mpz_t()) != 0) return false;
  }
  return saw_s2;
}

ExclusionReport quadratic_exclusions() {
  const FamilyCurve fam = family_i_curve();
  const UPoly gap = fam.m - fam.S;
  ExclusionReport report;
  auto add = [&](std::string name, const UPoly& eq, bool info) {
    report.cases.push_back({std::move(name), eq, solve_quadratic(eq), info});
  };
  add("S = 2", fam.S - UPoly(2), false);
  add("S = 3", fam.S - UPoly(3), false);
  add("S = 7", fam.S - UPoly(7), true);
  add("S = m - 3", gap - UPoly(3), false);
  add("S = m - 2", gap - UPoly(2), false);
  add("S = m - 1", gap - UPoly(1), false);
  add("g1 = 1 on x = z(z+1)/2 - 1", (g1_on_strip(-1) - RatFunc(1)).num(), false);
  return report;
}

}  // namespace twodist::dioph
