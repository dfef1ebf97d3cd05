#include "chirality/dga/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace chirality::dga {

mpq_class AlgElement::coeff(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void AlgElement::add_term(const Monomial& m, const mpq_class& c) {
  if (m.size() != arity_) throw std::invalid_argument("monomial does not belong to this algebra");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgElement AlgElement::operator-() const {
  AlgElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

void AlgElement::require_arity(const AlgElement& o) const {
  if (arity_ != o.arity_) throw std::invalid_argument("elements belong to different algebras");
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
  require_arity(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
  require_arity(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgElement operator*(const mpq_class& s, const AlgElement& x) {
  AlgElement r(x.arity_);
  if (s == 0) return r;
  r.terms_ = x.terms_;
  for (auto& [m, c] : r.terms_) c *= s;
  return r;
}

GcAlgebra::GcAlgebra(std::vector<Generator> generators) : generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (g.degree == 0) throw std::invalid_argument("generator degrees must be >= 1");
    if (g.name.empty()) throw std::invalid_argument("generator names must be nonempty");
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[j].name == g.name) throw std::invalid_argument("duplicate generator " + g.name);
  }
  differentials_.assign(generators_.size(), AlgElement(generators_.size()));
}

std::size_t GcAlgebra::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  throw std::invalid_argument("unknown generator " + std::string(name));
}

void GcAlgebra::require_member(const AlgElement& x) const {
  if (x.arity() != size()) throw std::invalid_argument("element belongs to a different algebra");
}

void GcAlgebra::set_differential(std::size_t generator, AlgElement image) {
  require_member(image);
  differentials_.at(generator) = std::move(image);
}

void GcAlgebra::validate() const {
  for (std::size_t i = 0; i < size(); ++i) {
    const AlgElement& dg = differentials_[i];
    if (dg.is_zero()) continue;
    if (!is_homogeneous(dg) || degree(dg) != generators_[i].degree + 1) {
      throw std::invalid_argument("d(" + generators_[i].name + ") is not homogeneous of degree |" +
                                  generators_[i].name + "| + 1");
    }
    if (!differential(dg).is_zero()) {
      throw std::invalid_argument("d(d(" + generators_[i].name + ")) is not zero");
    }
  }
}

AlgElement GcAlgebra::one() const { return scalar(1); }

AlgElement GcAlgebra::scalar(const mpq_class& c) const {
  AlgElement r(size());
  r.add_term(Monomial(size(), 0), c);
  return r;
}

AlgElement GcAlgebra::generator(std::size_t i) const {
  Monomial m(size(), 0);
  m.at(i) = 1;
  return monomial(m);
}

AlgElement GcAlgebra::monomial(const Monomial& m) const {
  AlgElement r(size());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (is_odd(i) && m[i] > 1) return r;
  r.add_term(m, 1);
  return r;
}

unsigned GcAlgebra::degree(const Monomial& m) const {
  unsigned d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * generators_[i].degree;
  return d;
}

bool GcAlgebra::is_homogeneous(const AlgElement& x) const {
  require_member(x);
  if (x.is_zero()) return true;
  const unsigned d = degree(x.terms().begin()->first);
  return std::all_of(x.terms().begin(), x.terms().end(), [&](const auto& t) { return degree(t.first) == d; });
}

unsigned GcAlgebra::degree(const AlgElement& x) const {
  if (x.is_zero()) throw std::invalid_argument("the zero element has no degree");
  if (!is_homogeneous(x)) throw std::invalid_argument("element is not homogeneous");
  return degree(x.terms().begin()->first);
}

int GcAlgebra::multiply_monomials(const Monomial& x, const Monomial& y, Monomial& out) const {
  out.assign(size(), 0);
  unsigned swaps = 0;
  unsigned odd_in_x_after = 0;  // odd generators of x with index > i
  for (std::size_t k = size(); k-- > 0;) {
    if (is_odd(k)) {
      if (x[k] + y[k] > 1) return 0;
      if (y[k]) swaps += odd_in_x_after;
      if (x[k]) ++odd_in_x_after;
    }
    out[k] = x[k] + y[k];
  }
  return swaps % 2 ? -1 : 1;
}

AlgElement GcAlgebra::multiply(const AlgElement& x, const AlgElement& y) const {
  require_member(x);
  require_member(y);
  AlgElement r(size());
  Monomial out;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      const int sign = multiply_monomials(mx, my, out);
      if (sign != 0) r.add_term(out, sign > 0 ? mpq_class(cx * cy) : mpq_class(-(cx * cy)));
    }
  return r;
}

AlgElement GcAlgebra::power(const AlgElement& x, unsigned e) const {
  AlgElement r = one();
  for (unsigned i = 0; i < e; ++i) r = multiply(r, x);
  return r;
}

AlgElement GcAlgebra::differential(const AlgElement& x) const {
  require_member(x);
  AlgElement r(size());
  for (const auto& [m, c] : x.terms()) {
    unsigned odd_before = 0;
    for (std::size_t i = 0; i < size(); ++i) {
      if (m[i] == 0) continue;
      const AlgElement& dg = differentials_[i];
      if (!dg.is_zero()) {
        // m = prefix * x_i^e * suffix contributes
        // (-1)^|prefix| e * prefix * d(x_i) * x_i^(e-1) * suffix.
        Monomial prefix(size(), 0), rest = m;
        for (std::size_t j = 0; j < i; ++j) {
          prefix[j] = m[j];
          rest[j] = 0;
        }
        rest[i] -= 1;
        mpq_class scale = c * m[i];
        if (odd_before % 2) scale = -scale;
        r += scale * multiply(multiply(monomial(prefix), dg), monomial(rest));
      }
      if (is_odd(i)) odd_before += m[i];
    }
  }
  return r;
}

std::vector<Monomial> GcAlgebra::basis(unsigned degree) const {
  std::vector<Monomial> out;
  Monomial current(size(), 0);
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t i, unsigned remaining) {
    if (i == size()) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    const unsigned d = generators_[i].degree;
    const unsigned max_e = is_odd(i) ? std::min(1u, remaining / d) : remaining / d;
    for (unsigned e = 0; e <= max_e; ++e) {
      current[i] = e;
      fill(i + 1, remaining - e * d);
    }
    current[i] = 0;
  };
  fill(0, degree);
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

std::string GcAlgebra::to_string(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += generators_[i].name;
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string GcAlgebra::to_string(const AlgElement& x) const {
  require_member(x);
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    const bool negative = c < 0;
    const mpq_class mag = abs(c);
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    const bool unit_monomial = std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
    if (unit_monomial) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += to_string(m);
    }
  }
  return s;
}

namespace {

class ExpressionParser {
 public:
  ExpressionParser(const GcAlgebra& alg, std::string_view text) : alg_(alg), text_(text) {}

  AlgElement parse() {
    AlgElement r = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse \"" + std::string(text_) + "\" at column " + std::to_string(pos_ + 1) +
                                ": " + why);
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  AlgElement expr() {
    AlgElement r = alg_.zero();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    for (;;) {
      AlgElement t = term();
      r += negate ? -t : t;
      if (accept('+')) {
        negate = false;
      } else if (accept('-')) {
        negate = true;
      } else {
        return r;
      }
    }
  }

  AlgElement term() {
    AlgElement r = factor();
    while (accept('*')) r = alg_.multiply(r, factor());
    return r;
  }

  AlgElement factor() {
    AlgElement base = primary();
    if (accept('^')) {
      const unsigned long e = std::stoul(digits());
      return alg_.power(base, static_cast<unsigned>(e));
    }
    return base;
  }

  AlgElement primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      AlgElement r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mpq_class q{mpz_class(digits())};
      if (accept('/')) {
        const mpz_class den(digits());
        if (den == 0) fail("zero denominator");
        q /= den;
      }
      return alg_.scalar(q);
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                                     text_[pos_] == '\'')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      try {
        return alg_.generator(name);
      } catch (const std::invalid_argument&) {
        pos_ = start;
        fail("unknown generator " + name);
      }
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  const GcAlgebra& alg_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgElement GcAlgebra::parse(std::string_view expression) const { return ExpressionParser(*this, expression).parse(); }

GcAlgebra parse_algebra(std::string_view text) {
  std::vector<Generator> gens;
  std::vector<std::pair<std::string, std::string>> diffs;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (keyword == "gen") {
      Generator g;
      long degree = 0;
      if (!(ls >> g.name >> degree) || degree < 1) throw std::invalid_argument(where + "expected 'gen NAME DEGREE'");
      std::string extra;
      if (ls >> extra) throw std::invalid_argument(where + "trailing text after generator");
      g.degree = static_cast<unsigned>(degree);
      gens.push_back(g);
    } else if (keyword == "d") {
      std::string name, eq;
      if (!(ls >> name >> eq) || eq != "=") throw std::invalid_argument(where + "expected 'd NAME = EXPRESSION'");
      std::string rest;
      std::getline(ls, rest);
      diffs.emplace_back(name, rest);
    } else {
      throw std::invalid_argument(where + "unknown keyword '" + keyword + "'");
    }
  }
  if (gens.empty()) throw std::invalid_argument("algebra description declares no generators");
  GcAlgebra alg(std::move(gens));
  std::vector<bool> seen(alg.size(), false);
  for (const auto& [name, expr] : diffs) {
    const std::size_t i = alg.index_of(name);
    if (seen[i]) throw std::invalid_argument("differential of " + name + " given twice");
    seen[i] = true;
    alg.set_differential(i, alg.parse(expr));
  }
  alg.validate();
  return alg;
}

bool SpanReducer::insert(AlgElement v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  const auto lead = v.terms().begin();
  const Monomial key = lead->first;
  const mpq_class inv = 1 / lead->second;
  pivots_.emplace(key, inv * v);
  return true;
}

AlgElement SpanReducer::reduce(AlgElement v) const {
  if (v.arity() != arity_) throw std::invalid_argument("element belongs to a different algebra");
  if (pivots_.empty()) return v;
  // Subtracting a pivot row only introduces monomials after its key, so one
  // forward pass in term order clears every pivot monomial.
  std::optional<Monomial> cursor;
  for (;;) {
    const auto& terms = v.terms();
    auto it = cursor ? terms.upper_bound(*cursor) : terms.begin();
    while (it != terms.end() && pivots_.find(it->first) == pivots_.end()) ++it;
    if (it == terms.end()) return v;
    const Monomial m = it->first;
    const mpq_class c = it->second;
    v -= c * pivots_.at(m);
    cursor = m;
  }
}

SpanReducer boundaries(const GcAlgebra& alg, unsigned degree) {
  SpanReducer r(alg.size());
  if (degree == 0) return r;
  for (const auto& m : alg.basis(degree - 1)) r.insert(alg.differential(alg.monomial(m)));
  return r;
}

}  // namespace chirality::dga
