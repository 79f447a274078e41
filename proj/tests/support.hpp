#pragma once

#include <algorithm>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "chowring/catalog.hpp"
#include "chowring/lattice.hpp"

namespace testing_support {

using namespace chowring;

struct Case {
  std::string name;
  std::shared_ptr<const Lattice> lattice;
  ElementSet members;

  BuildingSet building_set() const { return BuildingSet(lattice, members); }
};

inline std::shared_ptr<const Lattice> shared(Lattice lat) { return std::make_shared<const Lattice>(std::move(lat)); }

inline ElementSet maximal_members(const Lattice& lat) {
  ElementSet g;
  for (Element x = 0; x < lat.size(); ++x)
    if (x != lat.bottom()) g.push_back(x);
  return g;
}

/// Pi3 maximal; Pi4, generic(4,3) minimal and maximal; every building set of
/// B3 and of the seven-element example.
inline std::vector<Case> standard_cases() {
  std::vector<Case> out;
  auto pi3 = shared(partition_lattice(3));
  auto pi4 = shared(partition_lattice(4));
  auto b3 = shared(boolean_lattice(3));
  auto gen = shared(generic_arrangement_lattice(4, 3));
  auto fy = shared(fy_example_lattice());
  out.push_back({"pi3 maximal", pi3, maximal_members(*pi3)});
  out.push_back({"pi4 minimal", pi4, minimal_building_set(*pi4)});
  out.push_back({"pi4 maximal", pi4, maximal_members(*pi4)});
  for (const auto& g : all_building_sets(*b3)) out.push_back({"bool3 " + format_set(*b3, g), b3, g});
  out.push_back({"generic(4,3) minimal", gen, minimal_building_set(*gen)});
  out.push_back({"generic(4,3) maximal", gen, maximal_members(*gen)});
  for (const auto& g : all_building_sets(*fy)) out.push_back({"fy " + format_set(*fy, g), fy, g});
  return out;
}

/// Random atomic lattice: a family of subsets of n atoms containing the
/// empty set, all singletons and the full set, closed under intersection.
inline Lattice random_atomic_lattice(std::mt19937& rng, std::size_t max_elements) {
  while (true) {
    std::uniform_int_distribution<int> atoms_dist(1, 4);
    const int n = atoms_dist(rng);
    const unsigned full = (1u << n) - 1;
    std::set<unsigned> family{0u, full};
    for (int i = 0; i < n; ++i) family.insert(1u << i);
    std::uniform_int_distribution<unsigned> subset(1, full);
    std::uniform_int_distribution<int> extra(0, 4);
    for (int k = extra(rng); k > 0; --k) family.insert(subset(rng));
    bool grew = true;
    while (grew) {
      grew = false;
      for (unsigned a : std::vector<unsigned>(family.begin(), family.end()))
        for (unsigned b : std::vector<unsigned>(family.begin(), family.end()))
          grew |= family.insert(a & b).second;
    }
    if (family.size() > max_elements) continue;
    std::vector<unsigned> elems(family.begin(), family.end());
    std::stable_sort(elems.begin(), elems.end(),
                     [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
    auto label = [](unsigned s) {
      if (s == 0) return std::string("0");
      std::string out = "s";
      for (int i = 0; i < 8; ++i)
        if (s & (1u << i)) out += std::to_string(i + 1);
      return out;
    };
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> covers;
    for (unsigned a : elems) labels.push_back(label(a));
    for (unsigned a : elems)
      for (unsigned b : elems)
        if (a != b && (a & b) == a) covers.emplace_back(label(a), label(b));
    return build_lattice(labels, covers);
  }
}

/// The four atom-distance inequalities; returns a description of the first
/// violation, or an empty string.
inline std::string metric_violation(const Lattice& lat) {
  const std::size_t n = lat.size();
  auto d = [&](Element x, Element y) { return atom_distance(lat, x, y); };
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (lat.leq(x, y)) {
        for (Element z = 0; z < n; ++z) {
          if (lat.leq(y, z)) {
            if (d(x, z) < d(y, z)) return "(i) fails at " + lat.label(x) + ", " + lat.label(y) + ", " + lat.label(z);
            if (d(x, y) + d(y, z) < d(x, z))
              return "(ii) fails at " + lat.label(x) + ", " + lat.label(y) + ", " + lat.label(z);
          }
          if (d(lat.join(x, z), lat.join(y, z)) > d(x, y))
            return "(iii) fails at " + lat.label(x) + ", " + lat.label(y) + ", " + lat.label(z);
        }
      }
      if (d(x, lat.join(x, y)) > d(lat.meet(x, y), y)) return "(iv) fails at " + lat.label(x) + ", " + lat.label(y);
    }
  return {};
}

}  // namespace testing_support
