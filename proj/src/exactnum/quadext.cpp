#include "twodist/exactnum/quadext.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>

#include "twodist/errors.hpp"

namespace twodist::exactnum {
namespace {

// Squarefree "product modulo squares" of two squarefree integers.
Integer square_class_product(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return (a / g) * (b / g);
}

void collect_radicands(const std::vector<QuadExt::Term>& terms, std::vector<Integer>& out) {
  for (const auto& t : terms) {
    if (t.radicand != 1 && std::find(out.begin(), out.end(), t.radicand) == out.end()) {
      out.push_back(t.radicand);
    }
  }
}

void require_compatible(const std::vector<QuadExt::Term>& a, const std::vector<QuadExt::Term>& b) {
  std::vector<Integer> rads;
  collect_radicands(a, rads);
  collect_radicands(b, rads);
  if (rads.size() > 2) extension_generators(rads);
}

Integer floor_sqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Interval evaluation with rational endpoints at `bits` bits of precision.
// Nonzero canonical elements are nonzero reals, so doubling the precision
// eventually separates the interval from zero.
int refine_sign(std::span<const QuadExt::Term> terms) {
  for (unsigned bits = 64;; bits *= 2) {
    Integer scale(1);
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
    Rational lo, hi;
    for (const auto& t : terms) {
      if (t.radicand == 1) {
        lo += t.coeff;
        hi += t.coeff;
        continue;
      }
      const Integer s = floor_sqrt(t.radicand * scale * scale);
      const Rational below(s, scale);
      const Rational above(s + 1, scale);
      if (t.coeff.sign() > 0) {
        lo += t.coeff * below;
        hi += t.coeff * above;
      } else {
        lo += t.coeff * above;
        hi += t.coeff * below;
      }
    }
    if (lo.sign() > 0) return 1;
    if (hi.sign() < 0) return -1;
  }
}

}  // namespace

SquarefreeSplit squarefree_split(const Integer& n) {
  if (n < 1) throw DomainError("squarefree_split requires n >= 1, got " + to_string(n));
  Integer rest = n;
  Integer root(1);
  Integer free(1);
  auto strip = [&](unsigned long p) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p * p) != 0) {
      rest /= p * p;
      root *= p;
    }
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      rest /= p;
      free *= p;
    }
  };
  for (unsigned long p = 2;; p += (p == 2 ? 1 : 2)) {
    const Integer cube = Integer(p) * p * p;
    if (cube > rest) break;
    strip(p);
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
      root *= floor_sqrt(rest);
    } else {
      free *= rest;
    }
  }
  return {root, free};
}

std::vector<Integer> extension_generators(std::span<const Integer> radicands) {
  std::vector<Integer> gens;
  std::vector<Integer> span;  // non-trivial classes reachable from gens
  for (const auto& r : radicands) {
    if (r == 1 || std::find(span.begin(), span.end(), r) != span.end()) continue;
    if (gens.size() == 2) {
      throw UnsupportedExtension("more than two independent square roots: sqrt(" +
                                 to_string(gens[0]) + "), sqrt(" + to_string(gens[1]) +
                                 "), sqrt(" + to_string(r) + ")");
    }
    if (gens.empty()) {
      span.push_back(r);
    } else {
      span.push_back(r);
      span.push_back(square_class_product(gens[0], r));
    }
    gens.push_back(r);
  }
  return gens;
}

QuadExt::QuadExt(const Rational& r) {
  if (!r.is_zero()) terms_.push_back({Integer(1), r});
}

QuadExt::QuadExt(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }

void QuadExt::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.radicand < b.radicand; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().radicand == t.radicand) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
  terms_ = std::move(merged);
}

QuadExt QuadExt::radical(const Rational& coeff, const Integer& radicand) {
  if (radicand < 1) throw DomainError("radicand must be >= 1, got " + to_string(radicand));
  if (coeff.is_zero()) return {};
  const auto split = squarefree_split(radicand);
  return QuadExt(std::vector<Term>{{split.squarefree, coeff * Rational(split.root)}});
}

bool QuadExt::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1);
}

std::optional<Rational> QuadExt::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

Rational QuadExt::coefficient(const Integer& radicand) const {
  for (const auto& t : terms_) {
    if (t.radicand == radicand) return t.coeff;
  }
  return Rational(0);
}

std::vector<Integer> QuadExt::radicands() const {
  std::vector<Integer> out;
  collect_radicands(terms_, out);
  return out;
}

int QuadExt::sign() const { return quadext_sign(*this); }

double QuadExt::to_double() const {
  long double acc = 0;
  for (const auto& t : terms_) {
    acc += static_cast<long double>(t.coeff.to_double()) *
           std::sqrt(static_cast<long double>(t.radicand.get_d()));
  }
  return static_cast<double>(acc);
}

std::string QuadExt::str() const {
  if (terms_.empty()) return "0";
  auto render = [](const Term& t) -> std::string {
    if (t.radicand == 1) return t.coeff.str();
    const std::string root = "sqrt(" + to_string(t.radicand) + ")";
    if (t.coeff == Rational(1)) return root;
    return t.coeff.str() + "*" + root;
  };
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    if (i == 0) {
      if (t.radicand != 1 && t.coeff == Rational(-1)) {
        out = "-" + render({t.radicand, Rational(1)});
      } else {
        out = render(t);
      }
      continue;
    }
    if (t.coeff.sign() < 0) {
      out += " - " + render({t.radicand, -t.coeff});
    } else {
      out += " + " + render(t);
    }
  }
  return out;
}

QuadExt QuadExt::parse(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("cannot parse scalar '" + std::string(text) + "' at offset " +
                      std::to_string(pos) + ": " + what);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto digits = [&]() -> std::string_view {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  };
  auto try_sqrt = [&]() -> std::optional<Integer> {
    if (text.substr(pos, 5) != "sqrt(") return std::nullopt;
    pos += 5;
    skip_ws();
    const auto d = digits();
    if (d.empty()) throw fail("expected radicand");
    skip_ws();
    if (pos >= text.size() || text[pos] != ')') throw fail("expected ')'");
    ++pos;
    return parse_integer(d);
  };

  std::vector<Term> terms;
  skip_ws();
  bool first = true;
  while (true) {
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    Rational coeff(1);
    Integer radicand(1);
    if (auto r = try_sqrt()) {
      radicand = *r;
    } else {
      const auto num = digits();
      if (num.empty()) throw fail("expected number");
      Integer den(1);
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        const auto d = digits();
        if (d.empty()) throw fail("expected denominator");
        den = parse_integer(d);
        if (den == 0) throw fail("zero denominator");
      }
      coeff = Rational(parse_integer(num), den);
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
        auto r = try_sqrt();
        if (!r) throw fail("expected sqrt(...) after '*'");
        radicand = *r;
      }
    }
    if (radicand < 1) throw fail("radicand must be positive");
    const QuadExt piece = QuadExt::radical(sign < 0 ? -coeff : coeff, radicand);
    for (const auto& t : piece.terms_) terms.push_back(t);
    first = false;
    skip_ws();
    if (pos == text.size()) break;
  }
  QuadExt out(std::move(terms));
  std::vector<Integer> rads = out.radicands();
  extension_generators(rads);
  return out;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  require_compatible(terms_, o.terms_);
  for (const auto& t : o.terms_) terms_.push_back(t);
  normalize();
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  require_compatible(terms_, o.terms_);
  for (const auto& t : o.terms_) terms_.push_back({t.radicand, -t.coeff});
  normalize();
  return *this;
}

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
  if (a.is_zero() || b.is_zero()) return {};
  require_compatible(a.terms_, b.terms_);
  std::vector<QuadExt::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      if (ta.radicand == 1) {
        out.push_back({tb.radicand, ta.coeff * tb.coeff});
      } else if (tb.radicand == 1) {
        out.push_back({ta.radicand, ta.coeff * tb.coeff});
      } else {
        Integer g;
        mpz_gcd(g.get_mpz_t(), ta.radicand.get_mpz_t(), tb.radicand.get_mpz_t());
        out.push_back({(ta.radicand / g) * (tb.radicand / g), ta.coeff * tb.coeff * Rational(g)});
      }
    }
  }
  return QuadExt(std::move(out));
}

QuadExt& QuadExt::operator*=(const QuadExt& o) { return *this = *this * o; }
QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this = *this / o; }

QuadExt operator-(const QuadExt& a) {
  QuadExt out = a;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (auto r = as_rational()) return QuadExt(Rational(1) / *r);
  const std::vector<Integer> rads = radicands();
  const std::vector<Integer> gens = extension_generators(rads);
  // sigma fixes sqrt(keep) and negates every other radical; b * sigma(b) is
  // then sigma-invariant, i.e. it lies in Q(sqrt(keep)).
  const Integer keep = gens.size() == 2 ? gens[0] : Integer(1);
  QuadExt sigma = *this;
  for (auto& t : sigma.terms_) {
    if (t.radicand != 1 && t.radicand != keep) t.coeff = -t.coeff;
  }
  const QuadExt norm = *this * sigma;
  for (const auto& t : norm.terms_) {
    if (t.radicand != 1 && t.radicand != keep) {
      throw ConsistencyError("conjugate product left the subfield for " + str());
    }
  }
  return sigma * norm.inverse();
}

std::strong_ordering operator<=>(const QuadExt& a, const QuadExt& b) {
  const int s = (a - b).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool StructuralLess::operator()(const QuadExt& a, const QuadExt& b) const {
  const auto ta = a.terms();
  const auto tb = b.terms();
  return std::lexicographical_compare(
      ta.begin(), ta.end(), tb.begin(), tb.end(), [](const auto& x, const auto& y) {
        if (x.radicand != y.radicand) return x.radicand < y.radicand;
        return x.coeff < y.coeff;
      });
}

QuadExt sqrt_adjoin(const Rational& r) {
  if (r.sign() < 0) throw DomainError("square root of negative value " + r.str());
  if (r.is_zero()) return {};
  // sqrt(p/q) = sqrt(p*q)/q
  const Integer q = r.den();
  return QuadExt::radical(Rational(Integer(1), q), r.num() * q);
}

int quadext_sign(const QuadExt& a) {
  const auto terms = a.terms();
  if (terms.empty()) return 0;
  if (a.is_rational()) return terms[0].coeff.sign();
  const bool has_rational = terms[0].radicand == 1;
  if (terms.size() == 1 || (terms.size() == 2 && has_rational)) {
    // r + c*sqrt(d): compare r^2 against c^2 d when the signs disagree.
    const Rational r = has_rational ? terms[0].coeff : Rational(0);
    const auto& rad = terms.back();
    const int sc = rad.coeff.sign();
    const int sr = r.sign();
    if (sr == 0 || sr == sc) return sc;
    const Rational lhs = r * r;
    const Rational rhs = rad.coeff * rad.coeff * Rational(rad.radicand);
    return lhs > rhs ? sr : sc;
  }
  return refine_sign(terms);
}

std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.str(); }

}  // namespace twodist::exactnum
