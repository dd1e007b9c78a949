#include "twodist/dioph/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "twodist/errors.hpp"

namespace twodist::dioph {

IntPoly::IntPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

IntPoly IntPoly::constant(std::vector<std::string> vars, const Integer& c) {
  IntPoly p(std::move(vars));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

IntPoly IntPoly::variable(std::vector<std::string> vars, std::string_view name) {
  IntPoly p(std::move(vars));
  Exponents e(p.vars_.size(), 0);
  e[p.index_of(name)] = 1;
  p.add_term(e, 1);
  return p;
}

std::size_t IntPoly::index_of(std::string_view name) const {
  const auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw DomainError("unknown variable '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

void IntPoly::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void IntPoly::require_same_vars(const IntPoly& o) const {
  if (vars_ != o.vars_) throw DomainError("polynomials over different variables");
}

unsigned IntPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

unsigned IntPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

namespace {

template <class T>
T eval_impl(const std::map<IntPoly::Exponents, Integer>& terms, std::span<const T> values,
            std::size_t nvars) {
  if (values.size() != nvars) throw DomainError("wrong number of values for polynomial");
  // cache powers per variable
  std::vector<std::vector<T>> powers(nvars);
  T acc{};
  for (const auto& [e, c] : terms) {
    T term{c};
    for (std::size_t i = 0; i < nvars; ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(T{1});
      while (pw.size() <= e[i]) pw.push_back(pw.back() * values[i]);
      term = term * pw[e[i]];
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace

Integer IntPoly::eval(std::span<const Integer> values) const {
  return eval_impl<Integer>(terms_, values, vars_.size());
}

Rational IntPoly::eval(std::span<const Rational> values) const {
  return eval_impl<Rational>(terms_, values, vars_.size());
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

IntPoly operator-(const IntPoly& a) {
  IntPoly out(a.vars_);
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  a.require_same_vars(b);
  IntPoly out(a.vars_);
  IntPoly::Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result = constant(vars_, 1);
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

IntPoly IntPoly::scaled(const Integer& c) const {
  IntPoly out(vars_);
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

std::string IntPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    for (auto k : e) has_var = has_var || k > 0;
    bool wrote = false;
    if (mag != 1 || !has_var) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  IntPoly run() {
    IntPoly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial: " + why + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  IntPoly expr() {
    IntPoly acc = IntPoly(vars_);
    bool negate = false;
    if (eat('-')) {
      negate = true;
    } else {
      eat('+');
    }
    IntPoly t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  IntPoly term() {
    IntPoly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  IntPoly factor() {
    IntPoly base = atom();
    if (eat('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  IntPoly atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      IntPoly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return IntPoly::constant(vars_, Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) {
        fail("unknown variable '" + name + "'");
      }
      return IntPoly::variable(vars_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly IntPoly::parse(std::string_view text, std::vector<std::string> vars) {
  return Parser(text, vars).run();
}

IntPoly compose_cleared(const IntPoly& p, std::span<const PolyFraction> subst) {
  if (subst.size() != p.variables().size()) {
    throw DomainError("compose_cleared: one substitution per variable required");
  }
  if (subst.empty()) return p;
  const auto& target = subst[0].num.variables();
  for (const auto& s : subst) {
    if (s.num.variables() != target || s.den.variables() != target) {
      throw DomainError("compose_cleared: substitutions over different variables");
    }
    if (s.den.is_zero()) throw DomainError("compose_cleared: zero denominator");
  }
  const std::size_t k = subst.size();
  std::vector<unsigned> deg(k);
  for (std::size_t i = 0; i < k; ++i) deg[i] = p.degree_in(i);

  // num_i^a and den_i^b tables
  std::vector<std::vector<IntPoly>> num_pow(k);
  std::vector<std::vector<IntPoly>> den_pow(k);
  for (std::size_t i = 0; i < k; ++i) {
    num_pow[i].push_back(IntPoly::constant(target, 1));
    den_pow[i].push_back(IntPoly::constant(target, 1));
    for (unsigned e = 1; e <= deg[i]; ++e) {
      num_pow[i].push_back(num_pow[i].back() * subst[i].num);
      den_pow[i].push_back(den_pow[i].back() * subst[i].den);
    }
  }
  IntPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    IntPoly term = IntPoly::constant(target, c);
    for (std::size_t i = 0; i < k; ++i) {
      if (deg[i] == 0) continue;
      term = term * num_pow[i][e[i]] * den_pow[i][deg[i] - e[i]];
    }
    out += term;
  }
  return out;
}

}  // namespace twodist::dioph
