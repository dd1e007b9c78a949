#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>

#include "twodist/designs/design_io.hpp"
#include "twodist/designs/incidence.hpp"
#include "twodist/designs/parameters.hpp"
#include "twodist/errors.hpp"

using namespace twodist;
using namespace twodist::designs;

namespace {

const std::filesystem::path kData = TWODIST_TEST_DATA;

void check_params(const DesignParameters& p, std::array<Rational, 8> want) {
  const auto& d = p.derived;
  CHECK(d.Lambda == want[0]);
  CHECK(d.T == want[1]);
  CHECK(d.N == want[2]);
  CHECK(d.P == want[3]);
  CHECK(d.r == want[4]);
  CHECK(d.k == want[5]);
  CHECK(d.n == want[6]);
  CHECK(d.s == want[7]);
}

}  // namespace

TEST_CASE("derive_parameters") {
  const auto l = derive_parameters(9, 2, 1, 0);
  check_params(l, {1, 8, 7, 2, 5, 14, 36, -2});
  CHECK(l.mu() == 4);
  CHECK(l.lambda() == 7);
  check_params(derive_parameters(27, 7, 3, 1), {21, 91, 60, 28, 32, 140, 351, -3});
  const auto bad = derive_parameters(54, 15, 6, 3);
  CHECK(bad.derived.Lambda == 105);
  CHECK(bad.derived.T == Rational(795, 2));
  CHECK_THROWS_AS(derive_parameters(9, 2, 0, 1), DomainError);
  CHECK_THROWS_AS(derive_parameters(9, 2, 2, 0), DomainError);
  CHECK_THROWS_AS(derive_parameters(9, 1, 0, 0), DomainError);
  // total over the field: S = alpha hits a zero denominator
  CHECK_THROWS_AS(parameter_calculus<Rational>(9, 2, 2, 0), DegenerateParameters);
}

TEST_CASE("integrality gate") {
  CHECK(integrality_gate(derive_parameters(9, 2, 1, 0)).pass);
  const auto fail = integrality_gate(derive_parameters(54, 15, 6, 3));
  CHECK_FALSE(fail.pass);
  REQUIRE_FALSE(fail.violations.empty());
  CHECK(fail.violations.front().find("T = 795/2") != std::string::npos);
  const auto p90 = derive_parameters(90, 26, 10, 6);
  CHECK(integrality_gate(p90).pass);
  check_params(p90, {325, 1157, 580, 377, 203, 1508, 4005, -5});
}

TEST_CASE("lisonek design") {
  const auto d = lisonek_design();
  CHECK(d.point_count() == 9);
  CHECK(d.block_count() == 36);
  CHECK(d.block_size() == 2);
  const auto t = verify_t_design(d, 2);
  CHECK(t.is_design);
  CHECK(t.Lambda == Integer(1));
  const auto in = intersection_numbers(d);
  CHECK(in.values == std::set<int>{0, 1});
  CHECK(in.quasi_symmetric);
  CHECK(in.alpha == 1);
  CHECK(in.beta == 0);
  CHECK_THROWS_AS(verify_t_design(d, 3), DomainError);
  CHECK_THROWS_AS(verify_t_design(d, 0), DomainError);
}

TEST_CASE("complement") {
  const auto d = lisonek_design();
  const auto c = complement(d);
  CHECK(c.block_count() == 36);
  CHECK(c.block_size() == 7);
  CHECK(intersection_numbers(c).values == std::set<int>{5, 6});
  const auto t = verify_t_design(c, 2);
  CHECK(t.is_design);
  CHECK(t.Lambda == Integer(21));
  CHECK(complement(c) == d);
  for (std::size_t a = 0; a < d.block_count(); ++a) {
    for (std::size_t b = a + 1; b < d.block_count(); ++b) {
      REQUIRE(intersection_size(c.block(a), c.block(b)) ==
              9 - 2 * 2 + intersection_size(d.block(a), d.block(b)));
    }
  }
}

TEST_CASE("not quasi-symmetric") {
  const IncidenceDesign d(4, {{0, 1}, {2, 3}});
  const auto in = intersection_numbers(d);
  CHECK(in.values == std::set<int>{0});
  CHECK_FALSE(in.quasi_symmetric);
  CHECK_THROWS_AS(intersection_numbers(IncidenceDesign(4, {{0, 1}})), DomainError);
  CHECK_THROWS_AS(IncidenceDesign(4, {{1, 0}}), StructureError);
  CHECK_THROWS_AS(IncidenceDesign(4, {{0, 1}, {1, 2, 3}}), StructureError);
  CHECK_THROWS_AS(IncidenceDesign(4, {{0, 4}}), StructureError);
}

TEST_CASE("double counting on 2-designs") {
  for (const auto& d : {lisonek_design(), complement(lisonek_design()),
                        load_design(kData / "witt_4_23_7.json")}) {
    const auto t = verify_t_design(d, 2);
    REQUIRE(t.is_design);
    const Integer n(static_cast<long>(d.block_count()));
    const Integer S(d.block_size());
    const Integer m(d.point_count());
    CHECK(n * S * (S - 1) == *t.Lambda * m * (m - 1));
    const auto in = intersection_numbers(d);
    const auto p = derive_parameters(m, S, *in.alpha, *in.beta);
    CHECK(p.derived.n == Rational(n));
    CHECK(p.derived.Lambda == Rational(*t.Lambda));
    CHECK(p.derived.T * Rational(Integer(S - 1)) == p.derived.Lambda * Rational(Integer(m - 1)));
    CHECK(p.mu().is_integer());
    CHECK(p.lambda().is_integer());
  }
}

TEST_CASE("design files") {
  const auto l = load_design(kData / "lisonek.json");
  CHECK(l == lisonek_design());

  const auto tmp = std::filesystem::temp_directory_path() / "twodist_roundtrip.json";
  save_design(l, tmp);
  CHECK(load_design(tmp) == l);
  std::filesystem::remove(tmp);

  const auto w = load_design(kData / "witt_4_23_7.json");
  CHECK(w.point_count() == 23);
  CHECK(w.block_count() == 253);
  CHECK(w.block_size() == 7);
  const auto t4 = verify_t_design(w, 4);
  CHECK(t4.is_design);
  CHECK(t4.Lambda == Integer(1));
  CHECK(intersection_numbers(w).values == std::set<int>{1, 3});

  CHECK_THROWS_WITH_AS(load_design(kData / "bad_unequal_sizes.json"),
                       doctest::Contains("blocks[1]"), ParseError);
  CHECK_THROWS_WITH_AS(load_design(kData / "bad_unsorted.json"),
                       doctest::Contains("blocks[0][1]"), ParseError);
  CHECK_THROWS_WITH_AS(load_design(kData / "bad_malformed.json"), doctest::Contains("line 2"),
                       ParseError);
  CHECK_THROWS_AS(load_design(kData / "missing.json"), ParseError);
  CHECK_THROWS_WITH_AS(parse_design(R"({"m": 3})"), doctest::Contains("blocks"), ParseError);
  CHECK_THROWS_WITH_AS(parse_design(R"({"m": 3, "blocks": [[0, 5]]})"),
                       doctest::Contains("blocks[0][1]"), ParseError);
  CHECK_THROWS_AS(parse_design(R"({"m": -3, "blocks": []})"), ParseError);
}

TEST_CASE("t-design discrepancy") {
  const IncidenceDesign d(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto t = verify_t_design(d, 2);
  CHECK_FALSE(t.is_design);
  CHECK_FALSE(t.Lambda.has_value());
  CHECK_FALSE(t.discrepancy.empty());
}
