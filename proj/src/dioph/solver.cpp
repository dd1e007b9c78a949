#include "twodist/dioph/solver.hpp"

#include <algorithm>
#include <array>

#include "twodist/designs/parameters.hpp"
#include "twodist/dioph/parallel.hpp"
#include "twodist/dioph/system.hpp"
#include "twodist/errors.hpp"

namespace twodist::dioph {

namespace {

using i128 = __int128;

/// p(S, m, x, y) with machine coefficients for the enumeration loop.
class Compiled {
 public:
  explicit Compiled(const IntPoly& p) {
    for (const auto& [e, c] : p.terms()) {
      if (!c.fits_slong_p()) throw DomainError("coefficient too large for compiled polynomial");
      terms_.push_back({c.get_si(), {e[0], e[1], e[2], e[3]}});
    }
  }

  i128 operator()(long S, long m, long x, long y) const {
    const std::array<long, 4> v = {S, m, x, y};
    i128 acc = 0;
    for (const auto& t : terms_) {
      i128 term = t.coeff;
      for (std::size_t i = 0; i < 4; ++i) {
        for (unsigned k = 0; k < t.exp[i]; ++k) term *= v[i];
      }
      acc += term;
    }
    return acc;
  }

 private:
  struct Term {
    long coeff;
    std::array<unsigned, 4> exp;
  };
  std::vector<Term> terms_;
};

std::string tuple_str(long S, long m, long x, long y) {
  return "(S, m, x, y) = (" + std::to_string(S) + ", " + std::to_string(m) + ", " +
         std::to_string(x) + ", " + std::to_string(y) + ")";
}

struct Slab {
  long candidates = 0;
  std::vector<SolutionCertificate> survivors;
};

}  // namespace

bool BruteReport::all_on_family_i() const {
  for (const auto& c : survivors) {
    if (c.gates.empty() || c.gates.back().name != "family (i)" || !c.gates.back().pass) {
      return false;
    }
  }
  return true;
}

bool BruteReport::all_integer_z() const {
  return std::all_of(survivors.begin(), survivors.end(),
                     [](const SolutionCertificate& c) { return c.z.has_value(); });
}

BruteReport brute_solver(long Smax, long mmax, bool enforce_gate) {
  if (Smax < 2 || mmax < 2) throw DomainError("solver bounds must be at least 2");
  if (mmax > 1000000) throw DomainError("mmax above 10^6 exceeds the 128-bit evaluation range");
  const Compiled p1(p_poly(PolyId::P1));
  const Compiled p2(p_poly(PolyId::P2));
  const Compiled p3(p_poly(PolyId::P3));

  auto work = [&](long Slo, long Shi) {
    Slab slab;
    for (long S = Slo; S <= Shi; ++S) {
      for (long m = S + 1; m <= mmax; ++m) {
        for (long x = 1; x < S; ++x) {
          if (p1(S, m, x, 0) != 0) continue;
          for (long y = 0; y < x; ++y) {
            ++slab.candidates;
            if (p2(S, m, x, y) != 0 || p3(S, m, x, y) != 0) continue;

            SolutionCertificate cert;
            cert.S = S;
            cert.m = m;
            cert.x = x;
            cert.y = y;
            cert.gates.push_back({"p1 = p2 = p3 = 0", true, tuple_str(S, m, x, y)});
            if (enforce_gate) {
              try {
                const auto params = designs::derive_parameters(cert.m, cert.S, cert.x, cert.y);
                if (!designs::integrality_gate(params).pass) continue;
              } catch (const DegenerateParameters&) {
                continue;
              }
              cert.gates.push_back({"integrality", true, "all parameters integral"});
            }
            const Rational z = z_of(Rational(cert.S), Rational(cert.m), Rational(cert.x));
            const bool integral = z.is_integer();
            cert.gates.push_back({"integer z", integral, "z = " + z.str()});
            if (integral) {
              cert.z = z.to_integer();
              const auto fp = family_points(Family::I, *cert.z);
              const bool on_family =
                  fp.S == cert.S && fp.m == cert.m && fp.x == cert.x && fp.y == cert.y;
              const std::string witness =
                  on_family ? "z = " + z.str()
                            : "family (i) at z = " + z.str() + " is (" + fp.S.get_str() + ", " +
                                  fp.m.get_str() + ", " + fp.x.get_str() + ", " +
                                  fp.y.get_str() + ")";
              cert.gates.push_back({"family (i)", on_family, witness});
            }
            const Gate& last = cert.gates.back();
            cert.accepted = last.pass;
            cert.reason = last.pass ? "accepted" : last.name + ": " + last.witness;
            slab.survivors.push_back(std::move(cert));
          }
        }
      }
    }
    return slab;
  };

  BruteReport report;
  report.Smax = Smax;
  report.mmax = mmax;
  report.gate = enforce_gate;
  const long Stop = std::min(Smax, mmax - 1);
  for (auto& slab : detail::over_slabs<Slab>(2, Stop, work)) {
    report.candidates += slab.candidates;
    for (auto& c : slab.survivors) report.survivors.push_back(std::move(c));
  }
  return report;
}

}  // namespace twodist::dioph
