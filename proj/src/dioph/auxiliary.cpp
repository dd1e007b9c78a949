#include "twodist/dioph/auxiliary.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <exception>

#include "twodist/dioph/parallel.hpp"
#include "twodist/dioph/series.hpp"
#include "twodist/dioph/system.hpp"
#include "twodist/errors.hpp"

namespace twodist::dioph {

using designs::ParameterSet;

std::string to_string(AuxG which) { return which == AuxG::G1 ? "g1" : "g2"; }

namespace {

constexpr std::size_t kMaxSamples = 20;

template <class F>
struct Substituted {
  F S;
  F m;
  F y;
};

template <class F>
Substituted<F> substitute(AuxG which, const F& x, const F& z) {
  const F z2 = z * z;
  const F w = x + z2 + z;
  Substituted<F> s;
  s.S = x + z2;
  s.m = w * w / x;
  if (which == AuxG::G1) {
    s.y = x - z;
  } else {
    const F x2 = x * x;
    const F z3 = z2 * z;
    const F z4 = z3 * z;
    const F num = x2 * x + F(2) * x2 * z2 + x2 * z + x * z4 + F(2) * x * z3 + F(3) * x * z2 +
                  z4 * z + F(2) * z4 + z3;
    s.y = num / (w * w);
  }
  return s;
}

template <class F>
F g_formula(AuxG which, const ParameterSet<F>& p, const F& x, const F& y, const F& z,
            const F& m) {
  if (which == AuxG::G1) {
    return F(3) + x + F(19) * z + F(16) * z * z + F(3) * p.k + F(3) * p.Lambda - m -
           F(4) * p.n - F(18) * p.P + F(21) * z * p.r;
  }
  return F(-72) * p.Lambda + F(13) * m + F(13) * p.n + F(99) * p.T - F(45) * x + F(32) * y -
         F(14) * z - F(13) * m * z + F(39) * p.n * z - F(13) * p.T * z + F(13) * x * z -
         F(33) * z * z + F(13) * z * z * z;
}

template <class F>
std::pair<F, ParameterSet<F>> g_over(AuxG which, const F& x, const F& z) {
  const auto s = substitute(which, x, z);
  auto params = designs::parameter_calculus<F>(s.m, s.S, x, s.y);
  F g = g_formula(which, params, x, s.y, z, s.m);
  return {std::move(g), std::move(params)};
}

bool in_open(const Rational& v, const Rational& lo, const Rational& hi) { return lo < v && v < hi; }

void record(RegionStats& st, long x, long z, const AuxEvaluation& ev) {
  ++st.points;
  if (ev.via_limit) ++st.via_limit;
  if (!st.min || ev.g < *st.min) st.min = ev.g;
  if (!st.max || ev.g > *st.max) st.max = ev.g;
  if (!in_open(ev.g, st.lower, st.upper)) {
    ++st.violation_count;
    if (st.violations.size() < kMaxSamples) st.violations.push_back({x, z, ev.g});
  }
}

void merge(RegionStats& into, const RegionStats& from) {
  into.points += from.points;
  into.via_limit += from.via_limit;
  if (from.min && (!into.min || *from.min < *into.min)) into.min = from.min;
  if (from.max && (!into.max || *from.max > *into.max)) into.max = from.max;
  into.violation_count += from.violation_count;
  for (const auto& v : from.violations) {
    if (into.violations.size() < kMaxSamples) into.violations.push_back(v);
  }
}

using detail::over_slabs;

long tri(long z) { return z * (z + 1) / 2; }

/// Limit at z through truncated Laurent series in (z' - z); false when the
/// precision ran out, leaving the decision to the rational-function route.
bool limit_by_series(AuxG which, const Integer& x, const Integer& z, AuxEvaluation& out) {
  for (int terms : {8, 16, 32}) {
    const LaurentSeries::Terms scope(terms);
    std::pair<LaurentSeries, ParameterSet<LaurentSeries>> s;
    try {
      s = g_over<LaurentSeries>(which, LaurentSeries(Rational(x)),
                                LaurentSeries::variable(Rational(z)));
    } catch (const DegenerateParameters&) {
      continue;
    }
    const auto g = s.first.constant_term();
    if (!g) continue;
    const auto& p = s.second;
    std::optional<ParameterSet<Rational>> params;
    try {
      std::array<std::optional<Rational>, 8> v = {
          p.Lambda.constant_term(), p.T.constant_term(), p.N.constant_term(),
          p.P.constant_term(),      p.r.constant_term(), p.k.constant_term(),
          p.n.constant_term(),      p.s.constant_term()};
      if (std::any_of(v.begin(), v.end(), [](const auto& o) { return !o; })) continue;
      params = ParameterSet<Rational>{*v[0], *v[1], *v[2], *v[3], *v[4], *v[5], *v[6], *v[7]};
    } catch (const DomainError&) {
    }
    out.g = *g;
    out.params = std::move(params);
    return true;
  }
  return false;
}

}  // namespace

AuxEvaluation evaluate_aux(AuxG which, const Integer& x, const Integer& z) {
  if (x == 0) throw DomainError("auxiliary g needs x != 0");
  AuxEvaluation out;
  try {
    auto [g, params] = g_over<Rational>(which, Rational(x), Rational(z));
    out.g = std::move(g);
    out.params = std::move(params);
    return out;
  } catch (const DegenerateParameters&) {
  }

  out.via_limit = true;
  if (limit_by_series(which, x, z, out)) return out;
  return evaluate_aux_reduced(which, x, z);
}

AuxEvaluation evaluate_aux_reduced(AuxG which, const Integer& x, const Integer& z) {
  if (x == 0) throw DomainError("auxiliary g needs x != 0");
  AuxEvaluation out;
  out.via_limit = true;
  std::pair<RatFunc, ParameterSet<RatFunc>> rf;
  try {
    rf = g_over<RatFunc>(which, RatFunc(Rational(x)), RatFunc::z());
  } catch (const DegenerateParameters& e) {
    throw DomainError(to_string(which) + " is undefined along x = " + x.get_str() + ": " +
                      e.what());
  }
  const Rational at(z);
  out.g = rf.first.eval(at);
  try {
    const auto& p = rf.second;
    out.params = ParameterSet<Rational>{p.Lambda.eval(at), p.T.eval(at), p.N.eval(at),
                                        p.P.eval(at),      p.r.eval(at), p.k.eval(at),
                                        p.n.eval(at),      p.s.eval(at)};
  } catch (const DomainError&) {
    out.params.reset();
  }
  return out;
}

Rational aux_g(AuxG which, const Integer& x, const Integer& z) {
  return evaluate_aux(which, x, z).g;
}

RatFunc g1_on_strip(const Integer& t) {
  const RatFunc Z = RatFunc::z();
  const RatFunc X = (Z * Z + Z) / RatFunc(2) + RatFunc(Rational(t));
  return g_over<RatFunc>(AuxG::G1, X, Z).first;
}

bool G1ScanReport::ok() const {
  for (const auto& r : regions) {
    if (r.violation_count != 0) return false;
  }
  return strip.roots.integer_roots.empty() && !strip.roots.discriminant_is_square;
}

G1ScanReport scan_g1(const Box& box) {
  G1ScanReport report;
  report.box = box;
  const std::array<RegionStats, 3> blank = {
      RegionStats{"Region 1: z <= -2 or z >= 1, x >= z(z+1)/2 + 1", 0, 1, 0, 0, {}, {}, 0, {}},
      RegionStats{"Region 2: x = z(z+1)/2 - 1", 0, 2, 0, 0, {}, {}, 0, {}},
      RegionStats{"Region 3: x <= z(z+1)/2 - 2", 0, 1, 0, 0, {}, {}, 0, {}}};

  auto work = [&](long zlo, long zhi) {
    auto st = blank;
    for (long z = zlo; z <= zhi; ++z) {
      const long c = tri(z);
      const Integer zi(z);
      if (z <= -2 || z >= 1) {
        for (long x = std::max(1L, c + 1); x <= box.xmax; ++x) {
          record(st[0], x, z, evaluate_aux(AuxG::G1, Integer(x), zi));
        }
      }
      if (c - 1 >= 1 && c - 1 <= box.xmax) {
        record(st[1], c - 1, z, evaluate_aux(AuxG::G1, Integer(c - 1), zi));
      }
      for (long x = 1; x <= std::min(box.xmax, c - 2); ++x) {
        record(st[2], x, z, evaluate_aux(AuxG::G1, Integer(x), zi));
      }
    }
    return st;
  };
  const auto parts = over_slabs<std::array<RegionStats, 3>>(box.zmin, box.zmax, work);
  report.regions.assign(blank.begin(), blank.end());
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < 3; ++i) merge(report.regions[i], part[i]);
  }

  report.strip.g_minus_1 = g1_on_strip(-1) - RatFunc(1);
  report.strip.roots = solve_quadratic(report.strip.g_minus_1.num());
  return report;
}

const IntPoly& p3_on_y2_cleared() {
  static const IntPoly poly = [] {
    const std::vector<std::string> xz = {"x", "z"};
    const std::array<PolyFraction, 4> subst = {
        PolyFraction{IntPoly::parse("x + z^2", xz), IntPoly::parse("1", xz)},
        PolyFraction{IntPoly::parse("(x + z^2 + z)^2", xz), IntPoly::parse("x", xz)},
        PolyFraction{IntPoly::parse("x", xz), IntPoly::parse("1", xz)}, y2_fraction()};
    return compose_cleared(p_poly(PolyId::P3), subst);
  }();
  return poly;
}

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t reduce(const Integer& v) {
  Integer r = v % Integer(kPrime);  // NOLINT
  if (r < 0) r += Integer(kPrime);
  return static_cast<std::uint64_t>(mpz_get_ui(r.get_mpz_t()));
}

std::uint64_t reduce(long v) {
  long r = v % static_cast<long>(kPrime);
  if (r < 0) r += static_cast<long>(kPrime);
  return static_cast<std::uint64_t>(r);
}

/// Integer points of p3 = 0 (y = y2) in the box with x >= 3: the cleared
/// polynomial is evaluated mod a 61-bit prime, hits confirmed exactly.
P3CurveSearch search_p3_curve(const Box& box) {
  const IntPoly& poly = p3_on_y2_cleared();
  const unsigned dx = poly.degree_in(0);
  struct Term {
    unsigned ex;
    unsigned ez;
    std::uint64_t c;
  };
  std::vector<Term> terms;
  for (const auto& [e, c] : poly.terms()) terms.push_back({e[0], e[1], reduce(c)});
  const unsigned dz = poly.degree_in(1);

  auto work = [&](long zlo, long zhi) {
    P3CurveSearch part;
    std::vector<std::uint64_t> coeff(dx + 1);
    std::vector<std::uint64_t> zpow(dz + 1);
    for (long z = zlo; z <= zhi; ++z) {
      zpow[0] = 1;
      for (unsigned k = 1; k <= dz; ++k) zpow[k] = mulmod(zpow[k - 1], reduce(z));
      std::fill(coeff.begin(), coeff.end(), 0);
      for (const auto& t : terms) coeff[t.ex] = (coeff[t.ex] + mulmod(t.c, zpow[t.ez])) % kPrime;
      for (long x = 3; x <= box.xmax; ++x) {
        ++part.points;
        const std::uint64_t xr = reduce(x);
        std::uint64_t acc = 0;
        for (unsigned j = dx + 1; j-- > 0;) acc = (mulmod(acc, xr) + coeff[j]) % kPrime;
        if (acc != 0) continue;
        const std::array<Integer, 2> at = {Integer(x), Integer(z)};
        if (poly.eval(std::span<const Integer>(at)) != 0) continue;
        if (z == 0) {
          ++part.on_curve_z0;
        } else {
          part.hits.push_back({x, z, aux_g(AuxG::G2, Integer(x), Integer(z))});
        }
      }
    }
    return part;
  };
  P3CurveSearch out;
  for (const auto& part : over_slabs<P3CurveSearch>(box.zmin, box.zmax, work)) {
    out.points += part.points;
    out.on_curve_z0 += part.on_curve_z0;
    out.hits.insert(out.hits.end(), part.hits.begin(), part.hits.end());
  }
  return out;
}

}  // namespace

bool G2ScanReport::ok() const {
  for (const auto& r : regions) {
    if (r.violation_count != 0) return false;
  }
  const std::vector<std::array<long, 3>> expected = {{1, -1, 136}, {1, 0, 0}, {2, 0, 0}};
  if (case1_integer_values.size() != expected.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& v = case1_integer_values[i];
    if (v.x != expected[i][0] || v.z != expected[i][1] || v.value != Rational(expected[i][2])) {
      return false;
    }
  }
  return lambda_at_1_m1 == Rational(-1) && curve.hits.empty();
}

G2ScanReport scan_g2(const Box& box) {
  G2ScanReport report;
  report.box = box;
  const std::array<RegionStats, 2> blank = {
      RegionStats{"x in {1, 2}, z <= -15 or z >= 10", 31, 33, 0, 0, {}, {}, 0, {}},
      RegionStats{"x >= 3", -1, 38, 0, 0, {}, {}, 0, {}}};

  auto work = [&](long zlo, long zhi) {
    auto st = blank;
    for (long z = zlo; z <= zhi; ++z) {
      const Integer zi(z);
      if (z <= -15 || z >= 10) {
        for (long x = 1; x <= std::min(2L, box.xmax); ++x) {
          record(st[0], x, z, evaluate_aux(AuxG::G2, Integer(x), zi));
        }
      }
      for (long x = 3; x <= box.xmax; ++x) {
        record(st[1], x, z, evaluate_aux(AuxG::G2, Integer(x), zi));
      }
    }
    return st;
  };
  report.regions.assign(blank.begin(), blank.end());
  for (const auto& part : over_slabs<std::array<RegionStats, 2>>(box.zmin, box.zmax, work)) {
    for (std::size_t i = 0; i < 2; ++i) merge(report.regions[i], part[i]);
  }

  for (long x = 1; x <= 2; ++x) {
    for (long z = -14; z <= 9; ++z) {
      try {
        const Rational g = aux_g(AuxG::G2, Integer(x), Integer(z));
        if (g.is_integer()) report.case1_integer_values.push_back({x, z, g});
      } catch (const DomainError&) {
        report.case1_undefined.push_back({x, z, Rational()});
      }
    }
  }
  const auto at = evaluate_aux(AuxG::G2, Integer(1), Integer(-1));
  if (!at.params) throw ConsistencyError("parameters undefined at (x, z) = (1, -1)");
  report.lambda_at_1_m1 = at.params->Lambda;

  report.curve = search_p3_curve(box);
  return report;
}

}  // namespace twodist::dioph
