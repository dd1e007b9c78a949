#include <gmpxx.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "twodist/cli/commands.hpp"
#include "twodist/coherent/configuration.hpp"
#include "twodist/coherent/idempotents.hpp"
#include "twodist/designs/incidence.hpp"
#include "twodist/designs/parameters.hpp"
#include "twodist/dioph/auxiliary.hpp"
#include "twodist/dioph/classify.hpp"
#include "twodist/dioph/solver.hpp"
#include "twodist/dioph/system.hpp"
#include "twodist/errors.hpp"
#include "twodist/geometry/lisonek.hpp"
#include "twodist/geometry/spectrum.hpp"

using namespace twodist;
using exactnum::Integer;
using exactnum::QuadExt;
using exactnum::Rational;

namespace {

QuadExt rad(const Rational& c, long r) { return QuadExt::radical(c, Integer(r)); }

class Checks {
 public:
  void operator()(bool ok, const std::string& what) {
    if (!ok) failed_.push_back(what);
  }
  const std::vector<std::string>& failed() const { return failed_; }

 private:
  std::vector<std::string> failed_;
};

int failures = 0;

void criterion(int n, const std::string& title, double limit_s, const std::function<void(Checks&)>& body) {
  Checks c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) c(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  const bool pass = c.failed().empty();
  failures += pass ? 0 : 1;
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2f s", secs);
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << timing << ")";
  for (const auto& f : c.failed()) std::cout << "\n    " << f;
  std::cout << std::endl;
}

std::string row(const cli::CommandReport& r, const std::string& title, const std::string& name) {
  for (const auto& s : r.sections) {
    if (s.title != title) continue;
    for (const auto& rw : s.rows) {
      if (rw.name == name) return rw.value;
    }
  }
  return "";
}

int float_sign(const QuadExt& q) {
  mpf_class acc(0, 512);
  for (const auto& t : q.terms()) acc += mpf_class(t.coeff.raw(), 512) * sqrt(mpf_class(t.radicand, 512));
  return sgn(acc);
}

void lisonek_golden(Checks& c) {
  const auto rep = cli::verify_lisonek_report();
  c(rep.ok(), "verify lisonek report status");
  c(row(rep, "Coordinates", "points") == "45", "45 points");
  c(row(rep, "Coordinates", "distances") == "{sqrt(2), 2}", "distance set {sqrt(2), 2}");
  const auto chk = geometry::check_lisonek_coordinates(geometry::lisonek_coordinates());
  c(chk.point_count == 45, "point count");
  c(chk.squared_distances == std::set<Rational>{2, 4}, "squared distances {2, 4}");
  c(chk.x1_norm() == QuadExt(2) / sqrt_adjoin(Rational(3)), "X1 radius 2/sqrt(3)");
  c(chk.x2_norm() == sqrt_adjoin(Rational(2)), "X2 radius sqrt(2)");
}

void gram_table(Checks& c) {
  const auto cc = coherent::CoherentConfig::from_design(designs::lisonek_design());
  const auto pd = coherent::projector_and_gram(cc);
  const auto& g = pd.classes;
  const QuadExt s7 = sqrt_adjoin(Rational(7));
  c(g.vv_diag == QuadExt(Rational(4, 9)), "4/9");
  c(g.vv_off == QuadExt(Rational(-1, 18)), "-1/18");
  c(g.vb_in == -s7 / QuadExt(18), "-sqrt(7)/18");
  c(g.vb_out == s7 / QuadExt(63), "sqrt(7)/63");
  c(g.bb_diag == QuadExt(Rational(1, 9)), "1/9");
  c(g.bb_alpha == QuadExt(Rational(5, 126)), "5/126");
  c(g.bb_beta == QuadExt(Rational(-2, 63)), "-2/63");
  bool entries = true;
  for (std::size_t x = 0; x < cc.size(); ++x) {
    for (std::size_t y = 0; y < cc.size(); ++y) entries = entries && pd.E(x, y) == g.for_relation(cc.label(x, y));
  }
  c(entries, "every entry of E is its class value");
  c(pd.E * pd.E == pd.E, "E^2 = E");
  c(pd.E.transpose() == pd.E, "E^T = E");
  c(pd.E.trace() == QuadExt(8), "trace 8");
}

void parameter_calculus(Checks& c) {
  const auto p = designs::derive_parameters(9, 2, 1, 0).derived;
  const std::vector<Rational> got = {p.Lambda, p.T, p.N, p.P, p.r, p.k, p.n, p.s};
  const std::vector<Rational> want = {1, 8, 7, 2, 5, 14, 36, -2};
  c(got == want, "(Lambda, T, N, P, r, k, n, s) = (1, 8, 7, 2, 5, 14, 36, -2)");
}

void spectrum_equivalence(Checks& c) {
  using geometry::Branch;
  const auto theory = geometry::theoretical_spectrum(2, 9, 1, 0, Branch::GammaAbove2);
  c(theory.R2 == rad(Rational(1, 3), 14), "R2 = sqrt(14)/3");
  c(theory.squared(2) == QuadExt(2) && theory.squared(3) == QuadExt(4) &&
        theory.squared(4) == QuadExt(2) && theory.squared(5) == QuadExt(4),
    "(d2, d3, d4, d5) = (sqrt(2), 2, sqrt(2), 2)");
  const auto pd =
      coherent::projector_and_gram(coherent::CoherentConfig::from_design(designs::lisonek_design()));
  const auto gram = geometry::spectrum_from_gram(pd.classes, theory.R2, geometry::Frame::Simplex);
  c(gram.R1 == theory.R1, "R1 from the Gram route");
  c(gram.d_sq == theory.d_sq, "distances from the Gram route");
  c(gram.classes == theory.classes, "pair classes from the Gram route");
  c(geometry::two_distance_radius(pd.classes, Branch::GammaAbove2) == theory.R2, "branch radius");
}

void identities(Checks& c) {
  const auto r = dioph::identity_residues();
  c(r.size() >= 7, "identity count");
  for (const auto& id : r) c(id.zero && id.residue == "0", id.name + " residue " + id.residue);
  bool threw = false;
  try {
    dioph::verify_identities();
  } catch (const IdentityFailure&) {
    threw = true;
  }
  c(!threw, "verify_identities does not throw");
}

void brute_force(Checks& c) {
  const auto br = dioph::brute_solver(30, 400, true);
  std::vector<std::array<long, 5>> got;
  for (const auto& s : br.survivors) {
    got.push_back({s.S.get_si(), s.m.get_si(), s.x.get_si(), s.y.get_si(), s.z ? s.z->get_si() : -999});
  }
  const std::vector<std::array<long, 5>> want = {{2, 9, 1, 0, 1}, {7, 27, 3, 1, 2}, {26, 90, 10, 6, 4}};
  c(got == want, "solutions {(2,9,1,0), (7,27,3,1), (26,90,10,6)} with z {1, 2, 4}");
  c(br.all_integer_z() && br.all_on_family_i(), "integer z on family (i)");

  const auto cl = dioph::classify(10);
  c(cl.ok() && cl.acceptances() == 1 && cl.family_i.at(0).accepted, "only z = 1 accepted");
  const std::string tight = "tight 4-(23,7,1) design";
  c(cl.family_i.at(1).gates.back().name == tight, "z = 2 rejected by the tight-design filter");
  c(cl.family_i.at(3).gates.back().name == tight, "z = 4 rejected by the tight-design filter");
  for (std::size_t i = 2; i < cl.family_i.size(); ++i) {
    const auto& g = cl.family_i[i].gates.back();
    c(!cl.family_i[i].accepted && !g.pass && (g.name == tight || g.name == "integrality"),
      "z = " + std::to_string(i + 1) + " rejected by integrality or the filter");
  }
  for (const auto& o : cl.other_families) c(!o.accepted, "families (ii), (iii) rejected");
}

void regions(Checks& c) {
  using dioph::AuxG;
  const dioph::Box box;
  c(box.zmin == -100 && box.zmax == 100 && box.xmax == 10000, "default box");
  const auto g1 = dioph::scan_g1(box);
  c(g1.ok(), "g1 scan");
  const std::vector<std::pair<Rational, Rational>> g1_bounds = {{0, 1}, {0, 2}, {0, 1}};
  c(g1.regions.size() == 3, "three g1 regions");
  for (std::size_t i = 0; i < g1.regions.size() && i < 3; ++i) {
    const auto& r = g1.regions[i];
    c(r.lower == g1_bounds[i].first && r.upper == g1_bounds[i].second, r.name + " bounds");
    c(r.points > 0 && r.violation_count == 0, r.name + " violations " + std::to_string(r.violation_count));
  }
  const auto sq41 = sqrt_adjoin(Rational(41));
  c(g1.strip.roots.roots == std::vector<QuadExt>{(QuadExt(-1) - sq41) / QuadExt(2), (QuadExt(-1) + sq41) / QuadExt(2)},
    "strip roots (-1 +- sqrt(41))/2");
  c(g1.strip.roots.integer_roots.empty(), "no integer strip root");

  const auto g2 = dioph::scan_g2(box);
  c(g2.ok(), "g2 scan");
  const std::vector<std::pair<Rational, Rational>> g2_bounds = {{31, 33}, {-1, 38}};
  c(g2.regions.size() == 2, "two g2 regions");
  for (std::size_t i = 0; i < g2.regions.size() && i < 2; ++i) {
    const auto& r = g2.regions[i];
    c(r.lower == g2_bounds[i].first && r.upper == g2_bounds[i].second, r.name + " bounds");
    c(r.points > 0 && r.violation_count == 0, r.name + " violations " + std::to_string(r.violation_count));
  }
  c(dioph::aux_g(AuxG::G2, 1, -1) == 136, "g2(1, -1) = 136");
  c(dioph::aux_g(AuxG::G2, 1, 0) == 0, "g2(1, 0) = 0");
  c(dioph::aux_g(AuxG::G2, 2, 0) == 0, "g2(2, 0) = 0");
  c(g2.lambda_at_1_m1 == -1, "Lambda(1, -1) = -1");
  c(g2.curve.hits.empty(), "no integral point on p3 = 0 off z = 0");
}

void exclusions(Checks& c) {
  const auto ex = dioph::quadratic_exclusions();
  c(ex.ok(), "exclusion report");
  std::set<long> sf;
  for (const auto& q : ex.cases) {
    if (q.informational || q.name == "S = 2") continue;
    sf.insert(q.solution.squarefree_part.get_si());
    c(mpz_perfect_square_p(q.solution.discriminant.get_mpz_t()) == 0, q.name + " discriminant non-square");
  }
  c(sf == std::set<long>{7, 10, 13, 41, 73}, "discriminants {7, 10, 13, 41, 73}");
  for (long d : {7L, 10L, 13L, 41L, 73L}) {
    const Integer D(d);
    c(mpz_perfect_square_p(D.get_mpz_t()) == 0, std::to_string(d) + " non-square");
  }
  c(ex.cases.front().name == "S = 2" &&
        ex.cases.front().solution.roots == std::vector<QuadExt>{QuadExt(Rational(-4, 3)), QuadExt(1)},
    "S = 2 roots {1, -4/3}");
}

void properties(Checks& c) {
  // field axioms and sign against a 512-bit evaluation
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> num(-12, 12), den(1, 9);
  const long sqfree[] = {2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 21};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(sqfree) - 1);
  auto coeff = [&] { return Rational(Integer(num(rng)), Integer(den(rng))); };
  bool axioms = true, signs = true;
  for (int i = 0; i < 10000; ++i) {
    const long d1 = sqfree[pick(rng)];
    long d2 = sqfree[pick(rng)];
    while (d2 == d1) d2 = sqfree[pick(rng)];
    auto elem = [&] { return QuadExt(coeff()) + rad(coeff(), d1) + rad(coeff(), d2) + rad(coeff(), d1 * d2); };
    const QuadExt a = elem(), b = elem(), e = elem();
    axioms = axioms && (a + b) + e == a + (b + e) && (a * b) * e == a * (b * e) &&
             a * (b + e) == a * b + a * e && a * b == b * a;
    if (!a.is_zero()) axioms = axioms && a * a.inverse() == QuadExt(1);
    signs = signs && quadext_sign(a) == float_sign(a);
  }
  c(axioms, "field axioms on 10^4 samples");
  c(signs, "sign oracle on 10^4 samples");

  // epsilon products and fibre annihilation
  const auto cc = coherent::CoherentConfig::from_design(designs::lisonek_design());
  const auto basis = coherent::idempotent_basis(cc.params());
  coherent::Matrix<QuadExt> eps[2][2];
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) eps[i][j] = coherent::assemble(cc, basis.eps(i + 1, j + 1));
  }
  const coherent::Matrix<QuadExt> zero(cc.size(), cc.size());
  bool products = true;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) products = products && eps[i][j] * eps[k][l] == (j == k ? eps[i][l] : zero);
      }
    }
  }
  c(products, "eps_ij eps_kl = delta_jk eps_il");
  const auto pd = coherent::projector_and_gram(cc);
  coherent::Matrix<QuadExt> ind(cc.size(), 2);
  for (std::size_t x = 0; x < cc.size(); ++x) ind(x, x < 9 ? 0 : 1) = QuadExt(1);
  c(pd.E * ind == coherent::Matrix<QuadExt>(cc.size(), 2), "E kills both fibre indicators");

  // distance order on 100 valid parameter tuples
  int tuples = 0;
  bool order = true;
  for (long m = 4; tuples < 100; ++m) {
    for (long S = 2; S < m && tuples < 100; ++S) {
      for (long a = 1; a < S && tuples < 100; ++a) {
        for (long b = 0; b < a && tuples < 100; b += 2, ++tuples) {
          for (auto br : {geometry::Branch::GammaAbove2, geometry::Branch::GammaBelow2}) {
            const auto s = geometry::theoretical_spectrum(S, m, a, b, br);
            order = order && s.squared(2) < s.squared(3) && s.squared(4) < s.squared(5);
          }
        }
      }
    }
  }
  c(tuples == 100 && order, "d2 < d3 and d4 < d5 on 100 tuples");

  // rescaling
  std::uniform_int_distribution<long> rn(1, 40), rd(1, 12);
  const long radicands[] = {1, 2, 3, 5, 7, 14};
  bool rescale = true;
  for (int i = 0; i < 20; ++i) {
    const QuadExt R2 = rad(Rational(Integer(rn(rng)), Integer(rd(rng))), radicands[i % 6]);
    rescale = rescale && geometry::embedding_distance_sets(pd.E, 9, R2, geometry::Frame::Simplex).conditions_hold();
  }
  c(rescale, "distance-set conditions for 20 values of R2");
}

}  // namespace

int main() {
  criterion(1, "Lisonek golden test", 5, lisonek_golden);
  criterion(2, "Gram table of the 2-(9,2,1) projector", 5, gram_table);
  criterion(3, "parameter calculus for (9, 2, 1, 0)", 5, parameter_calculus);
  criterion(4, "closed-form and Gram spectra agree", 5, spectrum_equivalence);
  criterion(5, "polynomial identities", 10, identities);
  criterion(6, "brute-force solutions and classification", 120, brute_force);
  criterion(7, "region bounds on the default boxes", 300, regions);
  criterion(8, "quadratic exclusions", 5, exclusions);
  criterion(9, "property suites", 300, properties);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
