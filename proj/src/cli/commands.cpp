#include "twodist/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <map>
#include <ostream>
#include <set>

#include "twodist/coherent/configuration.hpp"
#include "twodist/coherent/idempotents.hpp"
#include "twodist/designs/design_io.hpp"
#include "twodist/designs/parameters.hpp"
#include "twodist/dioph/classify.hpp"
#include "twodist/dioph/solver.hpp"
#include "twodist/dioph/system.hpp"
#include "twodist/errors.hpp"
#include "twodist/geometry/lisonek.hpp"

namespace twodist::cli {

using exactnum::Integer;
using exactnum::QuadExt;
using exactnum::Rational;
using geometry::Branch;
using geometry::Frame;
using geometry::PairClass;

namespace {

std::string yes(bool b) { return b ? "true" : "false"; }

template <class Range, class Render>
std::string set_str(const Range& values, Render render) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += ", ";
    out += render(v);
    first = false;
  }
  return out + "}";
}

/// sqrt of a squared distance, in the scalar grammar when it stays inside
/// the supported fields.
std::string distance_str(const QuadExt& sq) {
  if (const auto r = sq.as_rational(); r && *r >= 0) return exactnum::sqrt_adjoin(*r).str();
  return "sqrt(" + sq.str() + ")";
}

std::string distance_set(const std::set<QuadExt>& squared) {
  return set_str(squared, distance_str);
}

void expect(CommandReport& rep, bool cond, const std::string& what) {
  if (!cond) rep.fail(what);
}

void add_parameters(Section& sec, const designs::ParameterSet<Rational>& p) {
  sec.add("Lambda", p.Lambda.str())
      .add("T", p.T.str())
      .add("N", p.N.str())
      .add("P", p.P.str())
      .add("r", p.r.str())
      .add("k", p.k.str())
      .add("n", p.n.str())
      .add("s", p.s.str());
}

const std::array<std::pair<PairClass, const char*>, 5> kPairNames = {{
    {PairClass::VV, "V-V"},
    {PairClass::BBAlpha, "B-B alpha"},
    {PairClass::BBBeta, "B-B beta"},
    {PairClass::VBIn, "V-B incident"},
    {PairClass::VBOut, "V-B not incident"},
}};

void add_gram(Section& sec, const coherent::GramClasses& g) {
  sec.add("V-V diagonal", g.vv_diag.str())
      .add("V-V off diagonal", g.vv_off.str())
      .add("V-B incident", g.vb_in.str())
      .add("V-B not incident", g.vb_out.str())
      .add("B-B diagonal", g.bb_diag.str())
      .add("B-B alpha", g.bb_alpha.str())
      .add("B-B beta", g.bb_beta.str());
}

void add_spectrum(Section& sec, const geometry::DistanceSpectrum& s) {
  sec.add("frame", geometry::to_string(s.frame)).add("R1", s.R1.str()).add("R2", s.R2.str());
  for (int i = 1; i <= 5; ++i) sec.add("d" + std::to_string(i) + "^2", s.squared(i).str());
  for (const auto& [cls, name] : kPairNames) sec.add(std::string(name) + " d^2", s.classes.at(cls).str());
  sec.add("distances", distance_set(s.distinct_squared()));
}

void add_classification(CommandReport& rep, const geometry::DistanceSpectrum& spec) {
  auto& sec = rep.section("Classification");
  try {
    const auto c = geometry::two_distance_classify(spec);
    sec.add("two-distance", yes(c.two_distance));
    if (c.gamma) sec.add("gamma", c.gamma->str());
    if (c.label) {
      sec.add("iota", std::to_string(static_cast<int>(c.label->iota)))
          .add("branch", geometry::to_string(c.label->branch))
          .add("case", std::string(1, c.label->letter))
          .add("complement case", std::string(1, c.label->complement_letter));
    }
    sec.add("root gt2", c.root_gt2.str())
        .add("root gt2 > R1", yes(c.root_gt2_exceeds_R1))
        .add("root lt2", c.root_lt2.str())
        .add("root lt2 < R1", yes(c.root_lt2_below_R1));
    if (!c.reason.empty()) sec.add("reason", c.reason);
  } catch (const DegeneracyError& e) {
    sec.add("two-distance", "false").add("reason", e.what());
    rep.fail(std::string("degenerate spectrum: ") + e.what());
  }
}

std::string triple(const std::array<Integer, 3>& t) {
  return "(" + t[0].get_str() + ", " + t[1].get_str() + ", " + t[2].get_str() + ")";
}

/// Squared distances between the explicit coordinates, grouped by pair class.
std::map<PairClass, std::set<Rational>> coordinate_classes(const geometry::LisonekSet& set,
                                                           const designs::IncidenceDesign& d) {
  std::map<PairClass, std::set<Rational>> out;
  for (std::size_t i = 0; i < set.X1.size(); ++i) {
    for (std::size_t j = i + 1; j < set.X1.size(); ++j) {
      out[PairClass::VV].insert(geometry::squared_distance(set.X1[i], set.X1[j]));
    }
    for (std::size_t b = 0; b < set.X2.size(); ++b) {
      const auto cls = d.contains(b, static_cast<int>(i)) ? PairClass::VBIn : PairClass::VBOut;
      out[cls].insert(geometry::squared_distance(set.X1[i], set.X2[b]));
    }
  }
  for (std::size_t a = 0; a < set.X2.size(); ++a) {
    for (std::size_t b = a + 1; b < set.X2.size(); ++b) {
      const int meet = designs::intersection_size(d.block(a), d.block(b));
      out[meet == 1 ? PairClass::BBAlpha : PairClass::BBBeta].insert(
          geometry::squared_distance(set.X2[a], set.X2[b]));
    }
  }
  return out;
}

}  // namespace

CommandReport verify_lisonek_report() {
  CommandReport rep;
  rep.command = "verify lisonek";
  const QuadExt sqrt2 = QuadExt::radical(Rational(1), Integer(2));

  const auto set = geometry::lisonek_coordinates();
  const auto chk = geometry::check_lisonek_coordinates(set);
  {
    auto& sec = rep.section("Coordinates");
    std::string centroid = "(";
    for (std::size_t i = 0; i < chk.centroid.size(); ++i) {
      centroid += (i ? ", " : "") + chk.centroid[i].str();
    }
    centroid += ")";
    std::set<QuadExt> sq(chk.squared_distances.begin(), chk.squared_distances.end());
    sec.add("points", std::to_string(chk.point_count))
        .add("X1 points", std::to_string(set.X1.size()))
        .add("X2 points", std::to_string(set.X2.size()))
        .add("affine dimension", std::to_string(chk.affine_dim))
        .add("coordinate sum 2", yes(chk.on_hyperplane))
        .add("distances", distance_set(sq))
        .add("X1 radius from origin", chk.x1_norm().str())
        .add("X2 radius from origin", chk.x2_norm().str())
        .add("centroid", centroid)
        .add("X1 radius about centroid", chk.x1_centroid_radius().str())
        .add("X2 radius about centroid", chk.x2_centroid_radius().str());
    expect(rep, chk.point_count == 45, "45 points");
    expect(rep, set.X1.size() == 9 && set.X2.size() == 36, "9 + 36 points");
    expect(rep, chk.affine_dim == 8, "affine dimension 8");
    expect(rep, chk.on_hyperplane, "points on the hyperplane sum = 2");
    expect(rep, chk.squared_distances == std::set<Rational>{Rational(2), Rational(4)},
           "distance set {sqrt(2), 2}");
    expect(rep, chk.x1_norm() == QuadExt::radical(Rational(2, 3), Integer(3)), "X1 radius 2/sqrt(3)");
    expect(rep, chk.x2_norm() == sqrt2, "X2 radius sqrt(2)");
  }

  const auto design = designs::lisonek_design();
  const auto t2 = designs::verify_t_design(design, 2);
  const auto inter = designs::intersection_numbers(design);
  {
    auto& sec = rep.section("Design");
    sec.add("points", std::to_string(design.point_count()))
        .add("blocks", std::to_string(design.block_count()))
        .add("block size", std::to_string(design.block_size()))
        .add("2-design", yes(t2.is_design))
        .add("lambda", t2.Lambda ? t2.Lambda->get_str() : "-")
        .add("intersection numbers",
             set_str(inter.values, [](int v) { return std::to_string(v); }));
    expect(rep, design.point_count() == 9 && design.block_count() == 36 && design.block_size() == 2,
           "2-(9,2,1) design shape");
    expect(rep, t2.is_design && t2.Lambda && *t2.Lambda == 1, "2-design with lambda 1");
    expect(rep, inter.alpha == 1 && inter.beta == 0, "intersection numbers alpha 1, beta 0");
    bool aligned = true;
    for (std::size_t b = 0; b < design.block_count(); ++b) {
      for (int i = 0; i < 9; ++i) {
        const Rational want(design.contains(b, i) ? 1 : 0);
        aligned = aligned && set.X2[b][static_cast<std::size_t>(i)] == want;
      }
    }
    sec.add("X2 matches blocks", yes(aligned));
    expect(rep, aligned, "X2[b] is the indicator of block b");
  }

  const auto cc = coherent::CoherentConfig::from_design(design);
  const auto axioms = coherent::verify_axioms(cc);
  {
    auto& sec = rep.section("Coherent configuration");
    std::string sizes;
    for (int i = 1; i <= coherent::kRelations; ++i) {
      sizes += (i > 1 ? ", " : "") + std::to_string(cc.relation_size(i));
    }
    sec.add("order", std::to_string(cc.size()))
        .add("relation sizes", sizes)
        .add("axioms", axioms.ok ? "hold" : axioms.violation);
    expect(rep, axioms.ok, "coherent configuration axioms");
  }

  const auto& p = cc.params().derived;
  add_parameters(rep.section("Parameters"), p);
  {
    const std::array<Rational, 8> got = {p.Lambda, p.T, p.N, p.P, p.r, p.k, p.n, p.s};
    const std::array<long, 8> want = {1, 8, 7, 2, 5, 14, 36, -2};
    bool same = true;
    for (std::size_t i = 0; i < 8; ++i) same = same && got[i] == Rational(want[i]);
    expect(rep, same, "(Lambda, T, N, P, r, k, n, s) = (1, 8, 7, 2, 5, 14, 36, -2)");
  }

  const auto pd = coherent::projector_and_gram(cc);
  const auto& g = pd.classes;
  add_gram(rep.section("Gram classes"), g);
  {
    const std::array<QuadExt, 7> got = {g.vv_diag, g.vv_off,   g.vb_in,  g.vb_out,
                                        g.bb_diag, g.bb_alpha, g.bb_beta};
    const std::array<QuadExt, 7> want = {
        Rational(4, 9),  Rational(-1, 18), QuadExt::radical(Rational(-1, 18), Integer(7)),
        QuadExt::radical(Rational(1, 63), Integer(7)), Rational(1, 9), Rational(5, 126),
        Rational(-2, 63)};
    expect(rep, got == want,
           "Gram classes 4/9, -1/18, -sqrt(7)/18, sqrt(7)/63, 1/9, 5/126, -2/63");
  }
  {
    auto& sec = rep.section("Projector");
    const bool symmetric = pd.E.transpose() == pd.E;
    const bool idempotent = pd.E * pd.E == pd.E;
    const QuadExt trace = pd.E.trace();
    sec.add("size", std::to_string(pd.E.rows()))
        .add("symmetric", yes(symmetric))
        .add("idempotent", yes(idempotent))
        .add("trace", trace.str());
    expect(rep, symmetric && idempotent, "E symmetric and idempotent");
    expect(rep, trace == QuadExt(8), "trace E = 8");
  }

  const auto theory = geometry::theoretical_spectrum(2, 9, 1, 0, Branch::GammaAbove2);
  const auto gram = geometry::spectrum_from_gram(g, theory.R2, Frame::Simplex);
  add_spectrum(rep.section("Spectrum"), theory);
  {
    const std::array<QuadExt, 5> want = {2, 2, 4, 2, 4};
    expect(rep, theory.R1 == QuadExt::radical(Rational(2, 3), Integer(2)), "R1 = 2/3*sqrt(2)");
    expect(rep, theory.R2 == QuadExt::radical(Rational(1, 3), Integer(14)), "R2 = sqrt(14)/3");
    expect(rep, theory.d_sq == want, "(d1, ..., d5) = (sqrt(2), sqrt(2), 2, sqrt(2), 2)");

    auto& sec = rep.section("Spectrum cross-checks");
    const bool gram_same =
        gram.d_sq == theory.d_sq && gram.R1 == theory.R1 && gram.classes == theory.classes;
    sec.add("Gram route agrees", yes(gram_same));
    expect(rep, gram_same, "spectrum from the Gram classes equals the closed form");

    const auto coords = coordinate_classes(set, design);
    bool coords_same = true;
    for (const auto& [cls, name] : kPairNames) {
      const auto it = coords.find(cls);
      const bool one = it != coords.end() && it->second.size() == 1 &&
                       QuadExt(*it->second.begin()) == theory.classes.at(cls);
      coords_same = coords_same && one;
    }
    sec.add("coordinates agree", yes(coords_same));
    expect(rep, coords_same, "pair-class distances of the coordinates equal the closed form");

    const auto native =
        geometry::spectrum_from_gram(g, geometry::native_radius(g), Frame::Projector);
    const std::set<QuadExt> vv = {native.classes.at(PairClass::VV)};
    const std::set<QuadExt> bb = {native.classes.at(PairClass::BBAlpha),
                                  native.classes.at(PairClass::BBBeta)};
    sec.add("native A(EV,EV)", distance_set(vv))
        .add("native A(EB,EB)", distance_set(bb))
        .add("native distinct distances", std::to_string(native.distinct_squared().size()));
    expect(rep, vv == std::set<QuadExt>{QuadExt(1)}, "native A(EV,EV) = {1}");
    expect(rep, bb == std::set<QuadExt>{QuadExt(Rational(1, 7)), QuadExt(Rational(2, 7))},
           "native A(EB,EB) = {sqrt(1/7), sqrt(2/7)}");
    expect(rep, native.distinct_squared().size() <= 5, "native embedding has at most 5 distances");
  }

  add_classification(rep, gram);
  {
    const auto c = geometry::two_distance_classify(gram);
    expect(rep, c.two_distance && c.gamma && *c.gamma == QuadExt(4), "two-distance with gamma 4");
    expect(rep, c.label && c.label->letter == 'A' && c.label->complement_letter == 'B',
           "case A, complement case B");
    const auto res = geometry::p_residuals(2, 9, 1, 0);
    rep.section("Residuals").add("p gt2", triple(res.gt2)).add("p lt2", triple(res.lt2));
    expect(rep, res.feasible_gt2(), "p1 = p2 = p3 = 0 at (2, 9, 1, 0)");
  }
  return rep;
}

CommandReport params_report(long m, long S, long alpha, long beta) {
  CommandReport rep;
  rep.command = "params";
  const auto dp = designs::derive_parameters(m, S, alpha, beta);
  rep.section("Input")
      .add("m", std::to_string(m))
      .add("S", std::to_string(S))
      .add("alpha", std::to_string(alpha))
      .add("beta", std::to_string(beta));
  add_parameters(rep.section("Parameters"), dp.derived);
  rep.section("Block graph").add("mu", dp.mu().str()).add("lambda", dp.lambda().str());
  const auto gate = designs::integrality_gate(dp);
  auto& sec = rep.section("Integrality gate");
  sec.add("pass", yes(gate.pass));
  for (const auto& v : gate.violations) sec.add("violation", v);
  const auto res = geometry::p_residuals(S, m, alpha, beta);
  rep.section("Residuals")
      .add("p gt2", triple(res.gt2))
      .add("p lt2", triple(res.lt2))
      .add("feasible gt2", yes(res.feasible_gt2()))
      .add("feasible lt2", yes(res.feasible_lt2()));
  expect(rep, gate.pass, "integrality gate");
  return rep;
}

CommandReport embed_report(const designs::IncidenceDesign& design, const EmbedOptions& opts) {
  CommandReport rep;
  rep.command = "embed";
  const auto t2 = designs::verify_t_design(design, 2);
  const auto inter = designs::intersection_numbers(design);
  {
    auto& sec = rep.section("Design");
    sec.add("points", std::to_string(design.point_count()))
        .add("blocks", std::to_string(design.block_count()))
        .add("block size", std::to_string(design.block_size()))
        .add("2-design", yes(t2.is_design))
        .add("intersection numbers",
             set_str(inter.values, [](int v) { return std::to_string(v); }));
  }
  if (!t2.is_design) {
    rep.fail("not a 2-design: " + t2.discrepancy);
    return rep;
  }
  if (!inter.quasi_symmetric) {
    rep.fail("not quasi-symmetric");
    return rep;
  }

  const auto cc = coherent::CoherentConfig::from_design(design);
  const auto& dp = cc.params();
  rep.sections.front().add("alpha", dp.alpha.get_str()).add("beta", dp.beta.get_str());
  add_parameters(rep.section("Parameters"), dp.derived);

  const auto pd = coherent::projector_and_gram(cc);
  add_gram(rep.section("Gram classes"), pd.classes);
  if (opts.dump_gram) {
    auto& sec = rep.section("Projector E");
    for (std::size_t r = 0; r < pd.E.rows(); ++r) {
      std::string row;
      for (std::size_t c = 0; c < pd.E.cols(); ++c) row += (c ? ", " : "") + pd.E(r, c).str();
      sec.add("row " + std::to_string(r), row);
    }
  }

  const QuadExt R2 = opts.r2 ? *opts.r2 : geometry::two_distance_radius(pd.classes, opts.branch);
  const auto spec = geometry::spectrum_from_gram(pd.classes, R2, Frame::Simplex);
  auto& ssec = rep.section("Spectrum");
  ssec.add("R2 source", opts.r2 ? "given" : "branch " + geometry::to_string(opts.branch));
  add_spectrum(ssec, spec);
  if (!opts.r2) {
    const auto theory =
        geometry::theoretical_spectrum(dp.S, dp.m, dp.alpha, dp.beta, opts.branch);
    // The closed-form radius comes from the point-block condition, so the two
    // coincide only when the branch really gives a two-distance set.
    ssec.add("closed form agrees", yes(theory.R2 == spec.R2 && theory.d_sq == spec.d_sq));
  }

  const auto sets = geometry::embedding_distance_sets(pd.E, design.point_count(), R2, Frame::Simplex);
  rep.section("Distance sets")
      .add("A(V,V)", distance_set(sets.vv))
      .add("A(V,B)", distance_set(sets.vb))
      .add("A(B,B)", distance_set(sets.bb))
      .add("conditions hold", yes(sets.conditions_hold()));
  expect(rep, sets.conditions_hold(), "|A(V,V)| = 1, |A(V,B)| <= 2, |A(B,B)| <= 2");

  add_classification(rep, spec);
  return rep;
}

namespace {

void add_certificate(Section& sec, const dioph::SolutionCertificate& c) {
  sec.add("S", c.S.get_str()).add("m", c.m.get_str()).add("x", c.x.get_str()).add("y", c.y.get_str());
  if (c.z) sec.add("z", c.z->get_str());
  for (const auto& gate : c.gates) {
    sec.add("gate " + gate.name, std::string(gate.pass ? "pass" : "fail") + " (" + gate.witness + ")");
  }
  sec.add("verdict", c.reason);
}

void add_region(Section& sec, const dioph::RegionStats& r) {
  sec.add("bounds", "(" + r.lower.str() + ", " + r.upper.str() + ")")
      .add("points", std::to_string(r.points))
      .add("limit points", std::to_string(r.via_limit))
      .add("min", r.min ? r.min->str() : "-")
      .add("max", r.max ? r.max->str() : "-")
      .add("violations", std::to_string(r.violation_count));
  for (const auto& v : r.violations) {
    sec.add("violation", "g(" + std::to_string(v.x) + ", " + std::to_string(v.z) + ") = " + v.value.str());
  }
}

std::string box_str(const dioph::Box& b) {
  return "z in [" + std::to_string(b.zmin) + ", " + std::to_string(b.zmax) + "], 1 <= x <= " +
         std::to_string(b.xmax);
}

std::string roots_str(const dioph::QuadraticSolution& s) {
  return set_str(s.roots, [](const QuadExt& q) { return q.str(); });
}

}  // namespace

CommandReport solve_report(long smax, long mmax, bool gate) {
  CommandReport rep;
  rep.command = "solve";
  const auto br = dioph::brute_solver(smax, mmax, gate);
  rep.section("Search")
      .add("S max", std::to_string(smax))
      .add("m max", std::to_string(mmax))
      .add("integrality gate", yes(gate))
      .add("candidates", std::to_string(br.candidates))
      .add("certificates", std::to_string(br.survivors.size()));
  for (std::size_t i = 0; i < br.survivors.size(); ++i) {
    add_certificate(rep.section("Certificate " + std::to_string(i + 1)), br.survivors[i]);
  }
  expect(rep, br.all_integer_z(), "z is an integer at every solution");
  if (gate) expect(rep, br.all_on_family_i(), "every gated solution lies on family (i)");
  return rep;
}

CommandReport classify_report(long zmax) {
  CommandReport rep;
  rep.command = "classify";
  const auto cr = dioph::classify(zmax);
  auto& fam = rep.section("Family (i)");
  fam.add("z max", std::to_string(zmax)).add("acceptances", std::to_string(cr.acceptances()));
  for (const auto& c : cr.family_i) {
    fam.add("z = " + c.z->get_str(), "(" + c.S.get_str() + ", " + c.m.get_str() + ", " +
                                         c.x.get_str() + ", " + c.y.get_str() + ") " + c.reason);
  }
  auto& other = rep.section("Families (ii) and (iii)");
  for (std::size_t i = 0; i < cr.other_families.size(); ++i) {
    const auto& c = cr.other_families[i];
    const std::string fam_name = i < cr.other_families.size() / 2 ? "ii" : "iii";
    other.add("(" + fam_name + ") z = " + c.z->get_str(), c.reason);
  }
  expect(rep, cr.ok(), "exactly one acceptance, at z = 1");

  const auto ex = dioph::quadratic_exclusions();
  auto& qs = rep.section("Quadratic exclusions");
  for (const auto& q : ex.cases) {
    const auto& s = q.solution;
    std::string v = "discriminant " + s.discriminant.get_str() + ", squarefree part " +
                    s.squarefree_part.get_str() + ", roots " + roots_str(s) + ", integer roots " +
                    set_str(s.integer_roots, [](const Integer& z) { return z.get_str(); });
    if (q.informational) v += ", informational";
    qs.add(q.name, v);
  }
  expect(rep, ex.ok(), "quadratic exclusions");
  return rep;
}

CommandReport regions_report(dioph::AuxG which, const dioph::Box& box) {
  CommandReport rep;
  rep.command = "regions " + dioph::to_string(which);
  rep.section("Box").add("box", box_str(box));
  if (which == dioph::AuxG::G1) {
    const auto r = dioph::scan_g1(box);
    for (const auto& reg : r.regions) add_region(rep.section(reg.name), reg);
    rep.section("Strip")
        .add("g1 - 1 on x = z(z+1)/2 - 1", r.strip.g_minus_1.str())
        .add("roots", roots_str(r.strip.roots))
        .add("integer roots",
             set_str(r.strip.roots.integer_roots, [](const Integer& z) { return z.get_str(); }));
    expect(rep, r.ok(), "g1 region bounds and strip roots");
  } else {
    const auto r = dioph::scan_g2(box);
    for (const auto& reg : r.regions) add_region(rep.section(reg.name), reg);
    auto& c1 = rep.section("x in {1, 2}, -14 <= z <= 9");
    for (const auto& v : r.case1_integer_values) {
      c1.add("g2(" + std::to_string(v.x) + ", " + std::to_string(v.z) + ")", v.value.str());
    }
    for (const auto& v : r.case1_undefined) {
      c1.add("g2(" + std::to_string(v.x) + ", " + std::to_string(v.z) + ")", "undefined");
    }
    c1.add("Lambda(1, -1)", r.lambda_at_1_m1.str());
    auto& cv = rep.section("p3 = 0 with y = y2, x >= 3");
    cv.add("points", std::to_string(r.curve.points))
        .add("on z = 0", std::to_string(r.curve.on_curve_z0))
        .add("other hits", std::to_string(r.curve.hits.size()));
    for (const auto& h : r.curve.hits) {
      cv.add("hit (" + std::to_string(h.x) + ", " + std::to_string(h.z) + ")", "g2 = " + h.value.str());
    }
    expect(rep, r.ok(), "g2 region bounds, exceptional values and curve search");
  }
  return rep;
}

CommandReport identities_report() {
  CommandReport rep;
  rep.command = "identities";
  auto& sec = rep.section("Residues");
  bool all = true;
  for (const auto& r : dioph::identity_residues()) {
    sec.add(r.name, r.residue);
    all = all && r.zero;
  }
  expect(rep, all, "every residue is the zero polynomial");
  return rep;
}

Outcome run(const std::vector<std::string>& args) {
  Outcome out;
  CLI::App app{"Exact two-distance embeddings of quasi-symmetric 2-designs", "twodist"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", out.json, "Print the report as JSON");

  auto* verify = app.add_subcommand("verify", "Run a golden verification pipeline");
  std::string target;
  verify->add_option("target", target, "Pipeline to run")->required()->check(CLI::IsMember({"lisonek"}));

  auto* params = app.add_subcommand("params", "Block-graph parameters of (m, S, alpha, beta)");
  long m = 0, S = 0, alpha = 0, beta = 0;
  params->add_option("m", m)->required();
  params->add_option("S", S)->required();
  params->add_option("alpha", alpha)->required();
  params->add_option("beta", beta)->required();

  auto* embed = app.add_subcommand("embed", "Spectrum of the embedding of a design file");
  std::string path, r2_text, branch = "gt2";
  bool dump_gram = false;
  embed->add_option("design", path, "Design JSON file")->required();
  embed->add_option("--r2", r2_text, "Block radius in the simplex frame");
  embed->add_option("--branch", branch, "gt2 or lt2")->check(CLI::IsMember({"gt2", "lt2"}));
  embed->add_flag("--dump-gram", dump_gram, "Also print every entry of E");

  auto* solve = app.add_subcommand("solve", "Brute-force the integer system");
  long smax = 30, mmax = 400;
  bool no_gate = false;
  solve->add_option("--smax", smax)->capture_default_str();
  solve->add_option("--mmax", mmax)->capture_default_str();
  solve->add_flag("--no-gate", no_gate, "Skip the integrality gate");

  auto* classify = app.add_subcommand("classify", "Gate family (i) for z = 1..zmax");
  long zmax = 10;
  classify->add_option("--zmax", zmax)->capture_default_str();

  auto* regions = app.add_subcommand("regions", "Exact lattice scan of g1 or g2");
  std::string which;
  dioph::Box box;
  regions->add_option("--which", which)->required()->check(CLI::IsMember({"g1", "g2"}));
  regions->add_option("--zmin", box.zmin)->capture_default_str();
  regions->add_option("--zmax", box.zmax)->capture_default_str();
  regions->add_option("--xmax", box.xmax)->capture_default_str();

  auto* identities = app.add_subcommand("identities", "Check the polynomial identities");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out.message = app.help();
    return out;
  } catch (const CLI::ParseError& e) {
    out.exit_code = kExitUsage;
    out.message = std::string(e.what()) + "\n\n" + app.help();
    return out;
  }

  try {
    if (verify->parsed()) {
      out.report = verify_lisonek_report();
    } else if (params->parsed()) {
      out.report = params_report(m, S, alpha, beta);
    } else if (embed->parsed()) {
      EmbedOptions opts;
      if (!r2_text.empty()) {
        opts.r2 = QuadExt::parse(r2_text);
        if (opts.r2->sign() <= 0) throw DomainError("--r2 must be positive");
      }
      opts.branch = branch == "gt2" ? Branch::GammaAbove2 : Branch::GammaBelow2;
      opts.dump_gram = dump_gram;
      out.report = embed_report(designs::load_design(path), opts);
    } else if (solve->parsed()) {
      out.report = solve_report(smax, mmax, !no_gate);
    } else if (classify->parsed()) {
      out.report = classify_report(zmax);
    } else if (regions->parsed()) {
      if (box.zmin > box.zmax || box.xmax < 1) throw DomainError("empty region box");
      out.report = regions_report(which == "g1" ? dioph::AuxG::G1 : dioph::AuxG::G2, box);
    } else if (identities->parsed()) {
      out.report = identities_report();
    }
  } catch (const ParseError& e) {
    out.exit_code = kExitUsage;
    out.message = e.what();
    return out;
  } catch (const StructureError& e) {
    out.exit_code = kExitUsage;
    out.message = e.what();
    return out;
  } catch (const DomainError& e) {
    out.exit_code = kExitUsage;
    out.message = e.what();
    return out;
  } catch (const std::filesystem::filesystem_error& e) {
    out.exit_code = kExitUsage;
    out.message = e.what();
    return out;
  } catch (const Error& e) {
    out.exit_code = kExitFailure;
    out.message = e.what();
    return out;
  }
  out.exit_code = out.report->ok() ? kExitOk : kExitFailure;
  return out;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const Outcome o = run(args);
  if (o.report) {
    if (o.json) {
      out << o.report->json().dump(2) << "\n";
    } else {
      out << o.report->text();
    }
  }
  if (!o.message.empty()) (o.exit_code == kExitOk ? out : err) << o.message << "\n";
  return o.exit_code;
}

}  // namespace twodist::cli
