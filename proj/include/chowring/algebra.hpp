#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "chowring/hilbert_series.hpp"
#include "chowring/linalg.hpp"
#include "chowring/nested.hpp"
#include "chowring/polynomial.hpp"

namespace chowring {

/// Sum of x_G over members G >= b.
inline IntPolynomial upper_sum(const BuildingSet& g, const VariableOrder& ord, Element b) {
  IntPolynomial p(ord.size());
  for (Element x : g.members())
    if (g.lattice().leq(b, x)) p.add_term(Monomial::variable(ord.size(), ord.position(x)), 1);
  return p;
}

/// Presentation of D(L, G): monomials of minimal non-nested sets, then one
/// linear form per atom.
inline std::vector<IntPolynomial> defining_generators(const BuildingSet& g, const VariableOrder& ord) {
  std::vector<IntPolynomial> out;
  for (const ElementSet& s : minimal_non_nested(g)) out.emplace_back(support_monomial(ord, s), Integer(1));
  for (Element a : g.lattice().atoms()) out.push_back(upper_sum(g, ord, a));
  return out;
}

struct GroebnerElement {
  enum class Kind { monomial, power };

  IntPolynomial polynomial;
  Kind kind = Kind::monomial;
  ElementSet support;      ///< the non-nested set S, or the nested antichain H
  Element top = 0;         ///< B, for Kind::power
  std::size_t exponent = 0;  ///< d(join H, B), for Kind::power
};

struct GroebnerBasis {
  VariableOrder order;
  std::vector<GroebnerElement> elements;

  std::vector<IntPolynomial> polynomials() const {
    std::vector<IntPolynomial> out;
    out.reserve(elements.size());
    for (const auto& e : elements) out.push_back(e.polynomial);
    return out;
  }
};

/// The generators h_S (S minimal non-nested) and
/// g_{H,B} = prod_{A in H} x_A * (sum_{G >= B} x_G)^{d(join H, B)}
/// for every nested antichain H (including the empty one) and B in G above
/// join H.
inline GroebnerBasis groebner_generators(const BuildingSet& g, const VariableOrder& ord) {
  const Lattice& lat = g.lattice();
  if (!lat.is_atomic()) throw Error(ErrorKind::NotAtomic, "the algebra needs an atomic lattice");
  GroebnerBasis gb{ord, {}};
  for (const ElementSet& s : minimal_non_nested(g)) {
    gb.elements.push_back({IntPolynomial(support_monomial(ord, s), Integer(1)), GroebnerElement::Kind::monomial, s, 0, 0});
  }
  for (const ElementSet& h : nested_antichains(g)) {
    const Element a = join_set(lat, h);
    const Monomial prefix = support_monomial(ord, h);
    for (Element b : g.members()) {
      if (!lat.less(a, b)) continue;
      const std::size_t d = atom_distance(lat, a, b);
      IntPolynomial poly(ord.size());
      poly.add_scaled(Integer(1), prefix, upper_sum(g, ord, b).pow(static_cast<unsigned>(d)));
      gb.elements.push_back({std::move(poly), GroebnerElement::Kind::power, h, b, d});
    }
  }
  return gb;
}

namespace detail {

inline void require_monic(std::span<const IntPolynomial> basis) {
  for (const auto& p : basis)
    if (!p.is_zero() && p.leading_coefficient() != 1)
      throw Error(ErrorKind::NonMonicBasis, "reduction over the integers needs monic divisors");
}

}  // namespace detail

/// Full multivariate division remainder by monic divisors.
inline IntPolynomial reduce(IntPolynomial p, std::span<const IntPolynomial> divisors) {
  detail::require_monic(divisors);
  IntPolynomial remainder(p.nvars());
  while (!p.is_zero()) {
    const Monomial lead = p.leading_monomial();
    const Integer coeff = p.leading_coefficient();
    const IntPolynomial* divisor = nullptr;
    for (const auto& d : divisors)
      if (!d.is_zero() && d.leading_monomial().divides(lead)) {
        divisor = &d;
        break;
      }
    if (divisor) {
      p.add_scaled(-coeff, lead / divisor->leading_monomial(), *divisor);
    } else {
      remainder.add_term(lead, coeff);
      p.add_term(lead, -coeff);
    }
  }
  return remainder;
}

inline IntPolynomial normal_form(const IntPolynomial& p, const GroebnerBasis& gb) {
  const auto polys = gb.polynomials();
  return reduce(p, polys);
}

inline IntPolynomial s_polynomial(const IntPolynomial& f, const IntPolynomial& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  IntPolynomial s(f.nvars());
  s.add_scaled(Integer(1), l / f.leading_monomial(), f);
  s.add_scaled(Integer(-1), l / g.leading_monomial(), g);
  return s;
}

/// Buchberger's criterion. Pairs with coprime initial monomials are skipped
/// (their S-polynomials always reduce to zero).
inline bool is_groebner(std::span<const IntPolynomial> basis) {
  detail::require_monic(basis);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) continue;
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[j].is_zero()) continue;
      if (basis[i].leading_monomial().coprime(basis[j].leading_monomial())) continue;
      if (!reduce(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

inline bool is_groebner(const GroebnerBasis& gb) {
  const auto polys = gb.polynomials();
  return is_groebner(std::span<const IntPolynomial>(polys));
}

/// Products of x_A^{m(A)} over nested S with 1 <= m(A) < d(A', A), A' the
/// join of the members of S strictly below A. Sorted descending.
inline std::vector<Monomial> monomial_basis(const BuildingSet& g, const VariableOrder& ord) {
  const Lattice& lat = g.lattice();
  std::vector<Monomial> out;
  for (const ElementSet& s : nested_complex(g).faces) {
    std::vector<std::size_t> bound;
    bool empty = false;
    for (Element a : s) {
      Element below = lat.bottom();
      for (Element y : s)
        if (lat.less(y, a)) below = lat.join(below, y);
      const std::size_t d = atom_distance(lat, below, a);
      if (d <= 1) {
        empty = true;
        break;
      }
      bound.push_back(d);
    }
    if (empty) continue;
    std::vector<std::size_t> m(s.size(), 1);
    while (true) {
      Monomial mono(ord.size());
      for (std::size_t i = 0; i < s.size(); ++i) mono.set_exponent(ord.position(s[i]), static_cast<unsigned>(m[i]));
      out.push_back(mono);
      std::size_t i = 0;
      while (i < s.size() && ++m[i] == bound[i]) m[i++] = 1;
      if (i == s.size()) break;
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Monomials of degree <= cap divisible by no initial monomial of `basis`.
inline std::vector<Monomial> standard_monomials(std::span<const IntPolynomial> basis, std::size_t nvars,
                                                unsigned degree_cap) {
  std::vector<Monomial> leads;
  for (const auto& p : basis)
    if (!p.is_zero()) leads.push_back(p.leading_monomial());
  std::vector<Monomial> out;
  Monomial current(nvars);
  auto divisible = [&](const Monomial& m) {
    return std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  auto walk = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var == nvars) {
      out.push_back(current);
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      current.set_exponent(var, e);
      if (e > 0 && divisible(current)) break;
      self(self, var + 1, remaining - e);
    }
    current.set_exponent(var, 0);
  };
  if (!divisible(current)) walk(walk, 0, degree_cap);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, unsigned degree_cap) {
  const auto polys = gb.polynomials();
  return standard_monomials(polys, gb.order.size(), degree_cap);
}

inline IntPolynomial multiply_in_D(const IntPolynomial& a, const IntPolynomial& b, const GroebnerBasis& gb) {
  return normal_form(a * b, gb);
}

inline HilbertSeries hilbert_from_monomials(const std::vector<Monomial>& monomials) {
  HilbertSeries h;
  for (const auto& m : monomials) h.add(m.degree(), 1);
  return h;
}

inline HilbertSeries hilbert_series_enumerated(const BuildingSet& g) {
  return hilbert_from_monomials(monomial_basis(g, VariableOrder(g)));
}

// ---------------------------------------------------------------------------
// Linear-algebra oracle, independent of the Groebner machinery.

namespace detail {

// Degree-k monomials in nvars variables not divisible by any of `ideal`.
inline std::vector<Monomial> monomials_outside(std::size_t nvars, unsigned degree, const std::vector<Monomial>& ideal) {
  std::vector<Monomial> out;
  Monomial current(nvars);
  auto divisible = [&](const Monomial& m) {
    return std::any_of(ideal.begin(), ideal.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  auto walk = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var + 1 == nvars || nvars == 0) {
      if (nvars == 0) {
        if (remaining == 0) out.push_back(current);
        return;
      }
      current.set_exponent(var, remaining);
      if (!divisible(current)) out.push_back(current);
      current.set_exponent(var, 0);
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      current.set_exponent(var, e);
      if (e > 0 && divisible(current)) break;
      self(self, var + 1, remaining - e);
    }
    current.set_exponent(var, 0);
  };
  walk(walk, 0, degree);
  return out;
}

class DegreeSlice {
 public:
  DegreeSlice(std::span<const IntPolynomial> gens, std::size_t nvars, unsigned degree) {
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      if (!g.is_homogeneous())
        throw Error(ErrorKind::NonHomogeneousGenerator, "oracle generators must be homogeneous");
      if (g.term_count() == 1)
        monomial_ideal_.push_back(g.leading_monomial());
      else
        others_.push_back(&g);
    }
    basis_ = monomials_outside(nvars, degree, monomial_ideal_);
    for (std::size_t i = 0; i < basis_.size(); ++i) column_.emplace(basis_[i], i);
    for (const IntPolynomial* g : others_) {
      const unsigned e = g->degree();
      if (e > degree) continue;
      for (const Monomial& m : monomials_outside(nvars, degree - e, monomial_ideal_)) echelon_.insert(row_of(m, *g));
    }
  }

  std::size_t dimension() const { return basis_.size() - echelon_.rank(); }

  bool contains(const IntPolynomial& p) const { return echelon_.contains(row_of(Monomial(p.nvars()), p)); }

 private:
  SparseRow row_of(const Monomial& m, const IntPolynomial& g) const {
    SparseRow row;
    for (const auto& [mono, c] : g.terms()) {
      auto it = column_.find(m * mono);
      if (it != column_.end()) row[it->second] += c;
    }
    return row;
  }

  std::vector<Monomial> monomial_ideal_;
  std::vector<const IntPolynomial*> others_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> column_;
  RowEchelon echelon_;
};

}  // namespace detail

/// Dimension over Q of the degree-k slice of Q[x] / <gens>. Monomial
/// generators are factored out first (the slice of Q[x]/<monomials> has the
/// outside monomials as basis); the remaining generators contribute the rows
/// m * g, reduced modulo those monomials, whose exact rank is subtracted.
inline std::size_t quotient_rank_oracle(std::span<const IntPolynomial> gens, std::size_t nvars, unsigned degree) {
  return detail::DegreeSlice(gens, nvars, degree).dimension();
}

/// Whether the homogeneous polynomial p lies in <gens>, decided by the same
/// degree-slice linear algebra.
inline bool ideal_contains_oracle(std::span<const IntPolynomial> gens, std::size_t nvars, const IntPolynomial& p) {
  if (p.is_zero()) return true;
  if (!p.is_homogeneous()) throw Error(ErrorKind::NonHomogeneousGenerator, "membership test needs a homogeneous polynomial");
  return detail::DegreeSlice(gens, nvars, p.degree()).contains(p);
}

}  // namespace chowring
