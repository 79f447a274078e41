// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 when
// any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "chowring/algebra.hpp"
#include "chowring/catalog.hpp"
#include "chowring/fan.hpp"
#include "chowring/hilbert.hpp"
#include "support.hpp"

using namespace chowring;
using testing_support::Case;
using testing_support::shared;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      if (ok) detail << what;
      ok = false;
    }
  }
};

IntPolynomial var(const VariableOrder& ord, const Lattice& lat, const std::string& label) {
  return IntPolynomial::variable(ord.size(), ord.position(lat.index_of(label)));
}

std::vector<Element> shuffled_admissible_order(const BuildingSet& g, std::mt19937& rng) {
  const Lattice& lat = g.lattice();
  ElementSet remaining = g.members();
  std::vector<Element> order;
  while (!remaining.empty()) {
    std::vector<std::size_t> maximal;
    for (std::size_t i = 0; i < remaining.size(); ++i)
      if (std::none_of(remaining.begin(), remaining.end(), [&](Element o) { return lat.less(remaining[i], o); }))
        maximal.push_back(i);
    const std::size_t i = maximal[std::uniform_int_distribution<std::size_t>(0, maximal.size() - 1)(rng)];
    order.push_back(remaining[i]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return order;
}

std::vector<std::size_t> degree_counts(const std::vector<Monomial>& ms) {
  std::vector<std::size_t> out;
  for (const auto& m : ms) {
    if (out.size() <= m.degree()) out.resize(m.degree() + 1, 0);
    ++out[m.degree()];
  }
  return out;
}

void criterion1(Check& c) {
  const BuildingSet g = BuildingSet::maximal(shared(partition_lattice(3)));
  const Lattice& lat = g.lattice();
  const VariableOrder ord(g);
  const auto gb = groebner_generators(g, ord);
  const Monomial xu = Monomial::variable(ord.size(), ord.position(lat.top()));
  c.expect(monomial_basis(g, ord) == std::vector<Monomial>{xu, Monomial(ord.size())}, "basis is not {1, x_U}");
  c.expect(hilbert_series_enumerated(g).to_string() == "1 + t", "series is not 1 + t");
  // presentation Z[x_U]/<x_U^2>: each atom variable is -x_U, x_U^2 vanishes,
  // x_U itself does not
  const IntPolynomial u = var(ord, lat, "U");
  for (const char* h : {"H12", "H13", "H23"})
    c.expect(normal_form(var(ord, lat, h), gb) == Integer(-1) * u, std::string("x_") + h + " is not -x_U");
  c.expect(normal_form(u * u, gb).is_zero(), "x_U^2 is not zero");
  c.expect(normal_form(u, gb) == u, "x_U reduces");
}

void criterion2(Check& c) {
  const BuildingSet g = BuildingSet::minimal(shared(partition_lattice(4)));
  const Lattice& lat = g.lattice();
  const VariableOrder ord(g);
  const auto gb = groebner_generators(g, ord);
  std::set<Monomial> expected{Monomial(ord.size())};
  for (const char* x : {"H123", "H124", "H134", "H234", "U"})
    expected.insert(Monomial::variable(ord.size(), ord.position(lat.index_of(x))));
  expected.insert(Monomial::variable(ord.size(), ord.position(lat.top()), 2));
  const auto basis = monomial_basis(g, ord);
  c.expect(std::set<Monomial>(basis.begin(), basis.end()) == expected && basis.size() == 7, "basis differs");
  c.expect(hilbert_series_enumerated(g).to_string() == "1 + 5t + t^2", "series differs");
  const IntPolynomial u = var(ord, lat, "U");
  for (const char* t : {"H123", "H124", "H134", "H234"}) {
    const IntPolynomial x = var(ord, lat, t);
    c.expect(normal_form(x * x + u * u, gb).is_zero(), std::string("x_") + t + "^2 + x_U^2 does not vanish");
  }
}

void criterion3(Check& c) {
  auto lat = shared(fy_example_lattice());
  const auto all = all_building_sets(*lat);
  c.expect(all.size() == 4, "expected 4 building sets, got " + std::to_string(all.size()));
  const std::vector<std::string> expected{"1 + t", "1 + 2t", "1 + 2t", "1 + 3t"};
  for (std::size_t i = 0; i < all.size() && i < 4; ++i) {
    const std::string got = hilbert_series_enumerated(BuildingSet(lat, all[i])).to_string();
    c.expect(got == expected[i], format_set(*lat, all[i]) + " gives " + got);
  }
}

void criterion4(Check& c, const std::vector<Case>& cases) {
  for (const auto& k : cases) {
    const BuildingSet g = k.building_set();
    c.expect(is_groebner(groebner_generators(g, VariableOrder(g))), k.name);
  }
}

void criterion5(Check& c, const std::vector<Case>& cases) {
  for (const auto& k : cases) {
    const BuildingSet g = k.building_set();
    const VariableOrder ord(g);
    const auto basis = monomial_basis(g, ord);
    auto counts = degree_counts(basis);
    c.expect(basis == standard_monomials(groebner_generators(g, ord), static_cast<unsigned>(counts.size() + 1)),
             k.name + ": basis differs from standard monomials");
    counts.push_back(0);
    const auto gens = defining_generators(g, ord);
    for (unsigned d = 0; d < counts.size(); ++d)
      c.expect(quotient_rank_oracle(gens, ord.size(), d) == counts[d], k.name + ": rank differs in degree " + std::to_string(d));
  }
}

void criterion6(Check& c, const std::vector<Case>& cases) {
  for (const auto& k : cases) c.expect(is_unimodular(sigma_fan(k.building_set())), k.name);
  const auto start = std::chrono::steady_clock::now();
  const bool pi5 = is_unimodular(sigma_fan(BuildingSet::minimal(shared(partition_lattice(5)))));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(pi5, "pi5 minimal");
  c.expect(seconds <= 60.0, "pi5 minimal took " + std::to_string(seconds) + " s");
}

void criterion7(Check& c, const std::vector<Case>& cases) {
  std::mt19937 rng(2024);
  for (const auto& k : cases) {
    const BuildingSet g = k.building_set();
    const Fan sigma = sigma_fan(g);
    const auto first = default_subdivision_order(g);
    std::vector<std::vector<Element>> orders{first};
    for (int attempt = 0; attempt < 20 && orders.size() < 3; ++attempt) {
      auto o = shuffled_admissible_order(g, rng);
      if (std::find(orders.begin(), orders.end(), o) == orders.end()) orders.push_back(std::move(o));
    }
    c.expect(orders.size() >= 2, k.name + ": fewer than two admissible orders tried");
    const Fan reference = theta_fan(g, orders.front());
    for (const auto& o : orders) {
      const Fan theta = theta_fan(g, o);
      c.expect(fans_equal(theta, sigma), k.name + ": theta differs from sigma");
      c.expect(fans_equal(theta, reference), k.name + ": theta depends on the order");
    }
  }
}

void criterion8(Check& c, const std::vector<Case>& cases) {
  for (const auto& k : cases) c.expect(verify_chow_iso(k.building_set()), k.name);
}

void criterion9(Check& c) {
  const std::vector<std::string> partition_expected{"1 + t", "1 + 8t + t^2"};
  for (std::size_t n = 3; n <= 5; ++n) {
    const HilbertSeries closed = hilbert_partition_closed(n);
    const HilbertSeries enumerated = hilbert_series_enumerated(BuildingSet::maximal(shared(partition_lattice(n))));
    c.expect(closed == enumerated, "partition " + std::to_string(n) + ": " + closed.to_string() + " vs " +
                                       enumerated.to_string());
    if (n <= 4) c.expect(closed.to_string() == partition_expected[n - 3], "partition " + std::to_string(n));
  }
  for (const auto& [n, l] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {4, 3}, {5, 3}, {5, 4}}) {
    const HilbertSeries closed = hilbert_generic_closed(n, l);
    const HilbertSeries enumerated =
        hilbert_series_enumerated(BuildingSet::maximal(shared(generic_arrangement_lattice(n, l))));
    c.expect(closed == enumerated, "generic (" + std::to_string(n) + "," + std::to_string(l) + ")");
  }
  const HilbertSeries b3 = hilbert_maximal_closed(boolean_lattice(3));
  c.expect(b3 == hilbert_series_enumerated(BuildingSet::maximal(shared(boolean_lattice(3)))), "boolean 3");
  c.expect(b3.to_string() == "1 + 4t + t^2", "boolean 3 is " + b3.to_string());
}

void criterion10(Check& c) {
  std::vector<std::pair<std::string, Lattice>> lattices{
      {"pi2", partition_lattice(2)},        {"pi3", partition_lattice(3)},
      {"pi4", partition_lattice(4)},        {"pi5", partition_lattice(5)},
      {"bool3", boolean_lattice(3)},        {"bool4", boolean_lattice(4)},
      {"generic(3,2)", generic_arrangement_lattice(3, 2)}, {"generic(4,3)", generic_arrangement_lattice(4, 3)},
      {"generic(5,3)", generic_arrangement_lattice(5, 3)}, {"generic(5,4)", generic_arrangement_lattice(5, 4)},
      {"fy", fy_example_lattice()}};
  std::mt19937 rng(10);
  for (int i = 0; i < 50; ++i)
    lattices.emplace_back("random " + std::to_string(i), testing_support::random_atomic_lattice(rng, 8));
  for (const auto& [name, lat] : lattices) {
    const std::string violation = testing_support::metric_violation(lat);
    c.expect(violation.empty(), name + ": " + violation);
  }
  for (std::size_t n = 3; n <= 5; ++n)
    c.expect(metric_is_rank_difference(partition_lattice(n)), "pi" + std::to_string(n) + ": d is not the rank difference");
}

}  // namespace

int main() {
  const auto cases = testing_support::standard_cases();
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"pi3 maximal basis, series and presentation", criterion1},
      {"pi4 minimal basis, series and relations", criterion2},
      {"seven-element lattice building sets and series", criterion3},
      {"groebner property", [&](Check& c) { criterion4(c, cases); }},
      {"monomial basis equals standard monomials and oracle ranks", [&](Check& c) { criterion5(c, cases); }},
      {"unimodular fans", [&](Check& c) { criterion6(c, cases); }},
      {"stellar construction equals the nested set fan", [&](Check& c) { criterion7(c, cases); }},
      {"chow relations vanish", [&](Check& c) { criterion8(c, cases); }},
      {"closed-form hilbert series", criterion9},
      {"atom distance properties", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (c.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first;
    if (!c.ok) line << " [" << c.detail.str() << "]";
    line.precision(2);
    line << std::fixed << " (" << seconds << " s)";
    std::cout << line.str() << std::endl;
    failures += c.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
