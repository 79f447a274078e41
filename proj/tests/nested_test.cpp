#include <gtest/gtest.h>

#include "chowring/catalog.hpp"
#include "chowring/nested.hpp"
#include "support.hpp"

using namespace chowring;
using testing_support::shared;

namespace {

ElementSet labels(const Lattice& lat, std::initializer_list<const char*> names) {
  ElementSet s;
  for (const char* n : names) s.push_back(lat.index_of(n));
  std::sort(s.begin(), s.end());
  return s;
}

// Brute-force nestedness straight from the definition, over all subsets of
// every size at least two.
bool nested_by_definition(const BuildingSet& g, const ElementSet& s) {
  const Lattice& lat = g.lattice();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s.size()); ++mask) {
    ElementSet a;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (mask >> i & 1) a.push_back(s[i]);
    if (a.size() < 2) continue;
    bool antichain = true;
    for (Element x : a)
      for (Element y : a)
        if (x != y && lat.leq(x, y)) antichain = false;
    if (antichain && g.contains(join_set(lat, a))) return false;
  }
  return true;
}

}  // namespace

TEST(Nested, Pi3Maximal) {
  const BuildingSet g = BuildingSet::maximal(shared(partition_lattice(3)));
  const Lattice& lat = g.lattice();
  EXPECT_TRUE(is_nested(g, labels(lat, {"H12", "U"})));
  EXPECT_FALSE(is_nested(g, labels(lat, {"H12", "H13"})));
  EXPECT_TRUE(is_nested(g, {}));
  const NestedComplex nc = nested_complex(g);
  EXPECT_EQ(nc.face_counts, (std::vector<std::size_t>{1, 4, 3}));
  EXPECT_EQ(nc.dimension, 1);
  EXPECT_EQ(nc.maximal_faces.size(), 3u);
  EXPECT_EQ(minimal_non_nested(g).size(), 3u);
}

TEST(Nested, Pi4Minimal) {
  const BuildingSet g = BuildingSet::minimal(shared(partition_lattice(4)));
  const Lattice& lat = g.lattice();
  const NestedComplex nc = nested_complex(g);
  // 11 vertices; a cone with apex U over a one-dimensional base
  EXPECT_EQ(nc.face_counts[1], 11u);
  EXPECT_EQ(nc.dimension, 2);
  for (const auto& f : nc.maximal_faces) {
    EXPECT_EQ(f.size(), 3u);
    EXPECT_TRUE(std::binary_search(f.begin(), f.end(), lat.top()));
  }
  EXPECT_TRUE(is_nested(g, labels(lat, {"H12", "H34", "U"})));
  EXPECT_TRUE(is_nested(g, labels(lat, {"H12", "H123", "U"})));
  EXPECT_FALSE(is_nested(g, labels(lat, {"H12", "H13"})));
  EXPECT_FALSE(is_nested(g, labels(lat, {"H123", "H124"})));
}

TEST(Nested, FyMinimalAtomsA1A3NotNested) {
  const BuildingSet g = BuildingSet::minimal(shared(fy_example_lattice()));
  const Lattice& lat = g.lattice();
  EXPECT_FALSE(is_nested(g, labels(lat, {"A1", "A3"})));
  EXPECT_TRUE(is_nested(g, labels(lat, {"A1", "A2"})));
  EXPECT_TRUE(is_nested(g, labels(lat, {"A1", "U"})));
}

TEST(Nested, Errors) {
  const BuildingSet g = BuildingSet::minimal(shared(partition_lattice(4)));
  const Lattice& lat = g.lattice();
  try {
    is_nested(g, labels(lat, {"H12|34"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInBuildingSet);
    EXPECT_NE(std::string(e.what()).find("H12|34"), std::string::npos);
  }
}

TEST(Nested, NestedAntichainsStartWithEmpty) {
  const BuildingSet g = BuildingSet::maximal(shared(partition_lattice(3)));
  const auto a = nested_antichains(g);
  ASSERT_FALSE(a.empty());
  EXPECT_TRUE(a.front().empty());
  EXPECT_EQ(a.size(), 5u);  // empty and the four singletons
}

TEST(Nested, MaximalOnlyStorage) {
  const BuildingSet g = BuildingSet::maximal(shared(partition_lattice(4)));
  const NestedComplex all = nested_complex(g);
  const NestedComplex maximal = nested_complex(g, FaceStorage::maximal_only);
  EXPECT_EQ(all.maximal_faces, maximal.maximal_faces);
  EXPECT_EQ(all.face_counts, maximal.face_counts);
  EXPECT_TRUE(maximal.faces.empty());
}

TEST(NestedProperties, AgreesWithDefinitionAndIsAComplex) {
  for (const auto& c : testing_support::standard_cases()) {
    const BuildingSet g = c.building_set();
    const NestedComplex nc = nested_complex(g);
    std::set<ElementSet> faces(nc.faces.begin(), nc.faces.end());
    // complete enumeration agrees with the definition
    const auto& m = g.members();
    if (m.size() <= 14) {
      std::size_t count = 0;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.size()); ++mask) {
        ElementSet s;
        for (std::size_t i = 0; i < m.size(); ++i)
          if (mask >> i & 1) s.push_back(m[i]);
        const bool nested = nested_by_definition(g, s);
        EXPECT_EQ(nested, faces.count(s) == 1) << c.name << " " << format_set(g.lattice(), s);
        EXPECT_EQ(nested, is_nested(g, s));
        count += nested;
      }
      EXPECT_EQ(count, nc.faces.size());
    }
    // closed under subsets, every singleton nested
    for (const auto& f : nc.faces)
      for (std::size_t i = 0; i < f.size(); ++i) {
        ElementSet sub = f;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
        EXPECT_TRUE(faces.count(sub)) << c.name;
      }
    for (Element x : m) EXPECT_TRUE(faces.count({x}));
    // minimal non-nested sets are antichains whose proper subsets are nested
    for (const auto& s : minimal_non_nested(g)) {
      EXPECT_FALSE(is_nested(g, s));
      for (Element x : s)
        for (Element y : s) EXPECT_TRUE(x == y || !g.lattice().leq(x, y));
      for (std::size_t i = 0; i < s.size(); ++i) {
        ElementSet sub = s;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
        EXPECT_TRUE(is_nested(g, sub));
      }
    }
  }
}

TEST(NestedProperties, MaximalFacesHaveRankManyElements) {
  // in a geometric lattice every maximal nested set has rank many elements
  for (const Lattice& lat : {partition_lattice(4), boolean_lattice(3), generic_arrangement_lattice(5, 3)}) {
    auto p = shared(lat);
    for (const BuildingSet& g : {BuildingSet::minimal(p), BuildingSet::maximal(p)}) {
      const std::size_t rank = atom_distance(*p, p->bottom(), p->top());
      for (const auto& f : nested_complex(g).maximal_faces) EXPECT_EQ(f.size(), rank);
    }
  }
}
