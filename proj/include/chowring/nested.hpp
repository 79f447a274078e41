#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "chowring/lattice.hpp"

namespace chowring {

namespace detail {

// Calls visit(antichain) for every antichain T of `pool` (as indices into it,
// starting from `start`) with every member incomparable to everything in
// `chosen`. Stops early and returns false as soon as visit returns false.
inline bool for_each_antichain(const Lattice& lat, const ElementSet& pool, std::size_t start,
                               ElementSet& chosen, const std::function<bool(const ElementSet&)>& visit) {
  for (std::size_t i = start; i < pool.size(); ++i) {
    Element v = pool[i];
    bool free = true;
    for (Element c : chosen)
      if (lat.comparable(c, v)) {
        free = false;
        break;
      }
    if (!free) continue;
    chosen.push_back(v);
    bool go_on = visit(chosen) && for_each_antichain(lat, pool, i + 1, chosen, visit);
    chosen.pop_back();
    if (!go_on) return false;
  }
  return true;
}

inline void require_members(const BuildingSet& g, const ElementSet& s) {
  for (Element x : s)
    if (!g.contains(x))
      throw Error(ErrorKind::NotInBuildingSet,
                  "'" + g.lattice().label(x) + "' is not a member of the building set");
}

// Whether face ∪ {v} stays nested, given that `face` is nested. Only antichains
// through v need checking.
inline bool extends_nested(const BuildingSet& g, const ElementSet& face, Element v) {
  const Lattice& lat = g.lattice();
  ElementSet pool;
  for (Element x : face)
    if (!lat.comparable(x, v)) pool.push_back(x);
  ElementSet chosen;
  return for_each_antichain(lat, pool, 0, chosen, [&](const ElementSet& t) {
    Element j = v;
    for (Element x : t) j = lat.join(j, x);
    return !g.contains(j);
  });
}

}  // namespace detail

/// A subset of G is nested when every antichain in it of size at least two
/// has its join outside G.
inline bool is_nested(const BuildingSet& g, const ElementSet& s) {
  detail::require_members(g, s);
  const Lattice& lat = g.lattice();
  ElementSet chosen;
  return detail::for_each_antichain(lat, s, 0, chosen, [&](const ElementSet& t) {
    return t.size() < 2 || !g.contains(join_set(lat, t));
  });
}

enum class FaceStorage { all_faces, maximal_only };

/// The simplicial complex N(L, G) of nested sets.
struct NestedComplex {
  std::vector<ElementSet> faces;          ///< all faces including the empty one (empty in maximal_only mode)
  std::vector<ElementSet> maximal_faces;  ///< inclusion-maximal faces
  std::vector<std::size_t> face_counts;   ///< face_counts[k] = number of faces with k elements
  int dimension = -1;                     ///< largest face size minus one
};

/// Depth-first enumeration: faces are extended only by members that come
/// later in index order, testing antichains through the new vertex only.
inline NestedComplex nested_complex(const BuildingSet& g, FaceStorage storage = FaceStorage::all_faces) {
  NestedComplex nc;
  const ElementSet& members = g.members();
  ElementSet face;
  auto record = [&](const ElementSet& f) {
    if (nc.face_counts.size() <= f.size()) nc.face_counts.resize(f.size() + 1, 0);
    ++nc.face_counts[f.size()];
    nc.dimension = std::max(nc.dimension, static_cast<int>(f.size()) - 1);
    if (storage == FaceStorage::all_faces) nc.faces.push_back(f);
    bool maximal = true;
    for (Element v : members)
      if (!std::binary_search(f.begin(), f.end(), v) && detail::extends_nested(g, f, v)) {
        maximal = false;
        break;
      }
    if (maximal) nc.maximal_faces.push_back(f);
  };
  auto extend = [&](auto&& self, std::size_t start) -> void {
    record(face);
    for (std::size_t i = start; i < members.size(); ++i) {
      if (!detail::extends_nested(g, face, members[i])) continue;
      face.push_back(members[i]);
      self(self, i + 1);
      face.pop_back();
    }
  };
  extend(extend, 0);
  auto by_size = [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  };
  std::sort(nc.faces.begin(), nc.faces.end(), by_size);
  std::sort(nc.maximal_faces.begin(), nc.maximal_faces.end(), by_size);
  return nc;
}

/// Inclusion-minimal non-nested subsets of G. Each is an antichain with its
/// join in G all of whose proper subsets are nested.
inline std::vector<ElementSet> minimal_non_nested(const BuildingSet& g) {
  const Lattice& lat = g.lattice();
  std::vector<ElementSet> out;
  auto subsets_nested = [&](const ElementSet& t) {
    for (std::size_t skip = 0; skip < t.size(); ++skip) {
      ElementSet rest;
      for (std::size_t i = 0; i < t.size(); ++i)
        if (i != skip) rest.push_back(t[i]);
      if (!is_nested(g, rest)) return false;
    }
    return true;
  };
  auto grow = [&](auto&& self, ElementSet& chosen, std::size_t start) -> void {
    for (std::size_t i = start; i < g.members().size(); ++i) {
      Element v = g.members()[i];
      bool free = true;
      for (Element c : chosen)
        if (lat.comparable(c, v)) {
          free = false;
          break;
        }
      if (!free) continue;
      chosen.push_back(v);
      if (chosen.size() >= 2 && g.contains(join_set(lat, chosen))) {
        if (subsets_nested(chosen)) out.push_back(chosen);
      } else if (is_nested(g, chosen)) {
        self(self, chosen, i + 1);
      }
      chosen.pop_back();
    }
  };
  ElementSet chosen;
  grow(grow, chosen, 0);
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// Nested antichains of G, the empty antichain first.
inline std::vector<ElementSet> nested_antichains(const BuildingSet& g) {
  std::vector<ElementSet> out{ElementSet{}};
  ElementSet chosen;
  detail::for_each_antichain(g.lattice(), g.members(), 0, chosen, [&](const ElementSet& t) {
    if (!is_nested(g, t)) return true;
    out.push_back(t);
    return true;
  });
  return out;
}

}  // namespace chowring
