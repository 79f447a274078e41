#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chowring/lattice.hpp"

namespace chowring {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Variables x_G indexed by building-set members, listed from greatest to
/// least precedence. Precedence refines the reverse of the lattice order:
/// G < G' in L puts x_G ahead of x_G'.
class VariableOrder {
 public:
  VariableOrder() = default;

  /// Reversed linear extension of L restricted to G; among members that are
  /// currently minimal the smallest label goes first.
  explicit VariableOrder(const BuildingSet& g) {
    const Lattice& lat = g.lattice();
    ElementSet remaining = g.members();
    while (!remaining.empty()) {
      std::size_t best = remaining.size();
      for (std::size_t i = 0; i < remaining.size(); ++i) {
        bool minimal = true;
        for (Element other : remaining)
          if (lat.less(other, remaining[i])) {
            minimal = false;
            break;
          }
        if (minimal && (best == remaining.size() || lat.label(remaining[i]) < lat.label(remaining[best])))
          best = i;
      }
      vars_.push_back(remaining[best]);
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    }
    init(lat);
  }

  /// An explicit order; no admissibility check.
  VariableOrder(const Lattice& lat, std::vector<Element> vars) : vars_(std::move(vars)) { init(lat); }

  std::size_t size() const { return vars_.size(); }
  const std::vector<Element>& variables() const { return vars_; }
  Element variable(std::size_t position) const { return vars_.at(position); }
  const std::string& name(std::size_t position) const { return names_.at(position); }

  std::size_t position(Element x) const {
    auto it = position_.find(x);
    if (it == position_.end()) throw Error(ErrorKind::NotInBuildingSet, "element has no variable");
    return it->second;
  }
  bool has(Element x) const { return position_.count(x) != 0; }

  std::optional<std::size_t> position_of_name(const std::string& label) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == label) return i;
    return std::nullopt;
  }

  friend bool operator==(const VariableOrder& a, const VariableOrder& b) { return a.vars_ == b.vars_; }

 private:
  void init(const Lattice& lat) {
    names_.clear();
    position_.clear();
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      names_.push_back(lat.label(vars_[i]));
      position_[vars_[i]] = i;
    }
  }

  std::vector<Element> vars_;
  std::vector<std::string> names_;
  std::map<Element, std::size_t> position_;
};

/// Exponent vector indexed by variable position. The built-in vector
/// comparison is exactly lex order with position 0 most significant.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}

  static Monomial variable(std::size_t nvars, std::size_t position, unsigned power = 1) {
    Monomial m(nvars);
    m.exps_.at(position) = static_cast<std::uint16_t>(power);
    return m;
  }

  std::size_t nvars() const { return exps_.size(); }
  unsigned exponent(std::size_t i) const { return exps_[i]; }
  void set_exponent(std::size_t i, unsigned e) { exps_.at(i) = static_cast<std::uint16_t>(e); }

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
  }

  /// Positions with nonzero exponent.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i]) out.push_back(i);
    return out;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] && other.exps_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& other) const {
    Monomial m(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] = static_cast<std::uint16_t>(m.exps_[i] + other.exps_[i]);
    return m;
  }

  /// this / other; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const {
    Monomial m(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] = static_cast<std::uint16_t>(m.exps_[i] - other.exps_[i]);
    return m;
  }

  Monomial lcm(const Monomial& other) const {
    Monomial m(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] = std::max(m.exps_[i], other.exps_[i]);
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

 private:
  std::vector<std::uint16_t> exps_;
};

/// Multivariate polynomial with terms kept in descending monomial order and
/// no zero coefficients.
template <class Coeff>
class Polynomial {
 public:
  using Terms = std::map<Monomial, Coeff, std::greater<>>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  Polynomial(const Monomial& m, Coeff c) : nvars_(m.nvars()) { add_term(m, std::move(c)); }

  static Polynomial constant(std::size_t nvars, Coeff c) { return Polynomial(Monomial(nvars), std::move(c)); }
  static Polynomial variable(std::size_t nvars, std::size_t position) {
    return Polynomial(Monomial::variable(nvars, position), Coeff(1));
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Coeff& leading_coefficient() const { return terms_.begin()->second; }

  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const Monomial& m, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  Polynomial& operator+=(const Polynomial& other) {
    adopt(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& other) {
    adopt(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
  }

  /// this += c * m * other
  void add_scaled(const Coeff& c, const Monomial& m, const Polynomial& other) {
    adopt(other);
    for (const auto& [mo, co] : other.terms_) add_term(m * mo, c * co);
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(std::max(a.nvars_, b.nvars_));
    for (const auto& [m, c] : a.terms_) out.add_scaled(c, m, b);
    return out;
  }
  friend Polynomial operator*(const Coeff& s, const Polynomial& p) {
    Polynomial out(p.nvars_);
    if (s != 0)
      for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, s * c);
    return out;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(unsigned e) const {
    Polynomial out = constant(nvars_, Coeff(1));
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
  }

 private:
  void adopt(const Polynomial& other) {
    if (nvars_ == 0) nvars_ = other.nvars_;
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

using IntPolynomial = Polynomial<Integer>;

/// Product of the variables of `s` (each to the first power).
inline Monomial support_monomial(const VariableOrder& ord, const ElementSet& s) {
  Monomial m(ord.size());
  for (Element x : s) m.set_exponent(ord.position(x), m.exponent(ord.position(x)) + 1);
  return m;
}

// ---------------------------------------------------------------------------
// Text rendering: descending order, explicit coefficients, x[label]^e factors.

inline std::string format_monomial(const Monomial& m, const VariableOrder& ord) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (!m.exponent(i)) continue;
    if (!out.empty()) out += "*";
    out += "x[" + ord.name(i) + "]";
    if (m.exponent(i) > 1) out += "^" + std::to_string(m.exponent(i));
  }
  return out;
}

inline std::string format_polynomial(const IntPolynomial& p, const VariableOrder& ord) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Integer magnitude = c < 0 ? Integer(-c) : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    out += magnitude.str();
    if (!m.is_one()) out += "*" + format_monomial(m, ord);
    first = false;
  }
  return out;
}

/// Parses the text form produced by `format_polynomial`. Coefficients and `*`
/// are optional on input.
inline IntPolynomial parse_polynomial(const std::string& text, const VariableOrder& ord) {
  IntPolynomial p(ord.size());
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::SyntaxError, what + " at column " + std::to_string(pos + 1) + " in '" + text + "'");
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  };

  skip_ws();
  if (pos == text.size()) fail("empty polynomial");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;

    Integer coeff = 1;
    bool have_factor = false;
    std::string digits = read_int();
    if (!digits.empty()) {
      coeff = Integer(digits);
      have_factor = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      } else if (text.compare(pos, 2, "x[") != 0) {
        p.add_term(Monomial(ord.size()), sign * coeff);
        continue;
      }
    }
    Monomial m(ord.size());
    while (true) {
      skip_ws();
      if (pos + 1 >= text.size() || text[pos] != 'x' || text[pos + 1] != '[') {
        if (!have_factor) fail("expected a coefficient or x[label]");
        fail("expected x[label] after '*'");
      }
      pos += 2;
      std::size_t close = text.find(']', pos);
      if (close == std::string::npos) fail("unterminated variable name");
      std::string label = text.substr(pos, close - pos);
      auto var = ord.position_of_name(label);
      if (!var) throw Error(ErrorKind::NotInBuildingSet, "no variable x[" + label + "] in this algebra");
      pos = close + 1;
      unsigned e = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        std::string ds = read_int();
        if (ds.empty()) fail("expected exponent");
        e = static_cast<unsigned>(std::stoul(ds));
      }
      m.set_exponent(*var, m.exponent(*var) + e);
      have_factor = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      if (text.compare(pos, 2, "x[") == 0) continue;
      break;
    }
    p.add_term(m, sign * coeff);
  }
  return p;
}

}  // namespace chowring
