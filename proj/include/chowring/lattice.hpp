#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "chowring/errors.hpp"

namespace chowring {

/// Index of a lattice element. Indices follow the order in which labels were
/// supplied to `build_lattice`.
using Element = std::size_t;

/// A set of elements, kept sorted ascending and free of duplicates.
using ElementSet = std::vector<Element>;

using Bitset = boost::dynamic_bitset<>;

inline ElementSet to_element_set(const Bitset& bits) {
  ElementSet out;
  for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) out.push_back(i);
  return out;
}

/// A finite lattice, validated once at construction and immutable afterwards.
///
/// The order is stored as up-sets and down-sets (bitsets over element
/// indices); joins and meets are tabulated for all pairs.
class Lattice {
 public:
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element x) const { return labels_.at(x); }

  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  const ElementSet& atoms() const { return atoms_; }
  bool is_atomic() const { return atomic_; }

  bool leq(Element x, Element y) const { return up_[x].test(y); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  Element join(Element x, Element y) const { return join_[x * size() + y]; }
  Element meet(Element x, Element y) const { return meet_[x * size() + y]; }

  const Bitset& up_set(Element x) const { return up_[x]; }
  const Bitset& down_set(Element x) const { return down_[x]; }
  const ElementSet& lower_covers(Element x) const { return lower_covers_[x]; }
  const ElementSet& upper_covers(Element x) const { return upper_covers_[x]; }

  /// Atoms below `x` as a bitset over positions in `atoms()`.
  const Bitset& atom_mask(Element x) const { return atom_mask_[x]; }

  /// Position of an atom in `atoms()`, or nullopt for non-atoms.
  std::optional<std::size_t> atom_position(Element x) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x);
    if (it == atoms_.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - atoms_.begin());
  }

  std::optional<Element> find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Element index_of(const std::string& label) const {
    auto found = find(label);
    if (!found) throw Error(ErrorKind::UnknownLabel, "no element labelled '" + label + "'");
    return *found;
  }

  /// Hasse diagram as (lower, upper) index pairs, ordered by upper then lower.
  std::vector<std::pair<Element, Element>> cover_pairs() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element y = 0; y < size(); ++y)
      for (Element x : lower_covers_[y]) out.emplace_back(x, y);
    return out;
  }

 private:
  friend Lattice build_lattice(const std::vector<std::string>&,
                               const std::vector<std::pair<std::string, std::string>>&);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Element> index_;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  std::vector<ElementSet> lower_covers_;
  std::vector<ElementSet> upper_covers_;
  std::vector<Bitset> atom_mask_;
  ElementSet atoms_;
  Element bottom_ = 0;
  Element top_ = 0;
  bool atomic_ = false;
};

namespace detail {

// Least element of `candidates` w.r.t. the order whose principal filters are
// `filters`: the unique u in candidates with filters[u] == candidates.
inline std::optional<Element> least_of(const Bitset& candidates, const std::vector<Bitset>& filters) {
  const auto count = candidates.count();
  for (auto u = candidates.find_first(); u != Bitset::npos; u = candidates.find_next(u))
    if (filters[u].count() == count) return u;
  return std::nullopt;
}

}  // namespace detail

/// Builds and validates a lattice from labels and a cover (or any generating)
/// relation given as (lower, upper) label pairs.
inline Lattice build_lattice(const std::vector<std::string>& labels,
                             const std::vector<std::pair<std::string, std::string>>& covers) {
  if (labels.empty()) throw Error(ErrorKind::EmptyInput, "lattice has no elements");
  Lattice lat;
  const std::size_t n = labels.size();
  lat.labels_ = labels;
  for (Element i = 0; i < n; ++i) {
    if (!lat.index_.emplace(labels[i], i).second)
      throw Error(ErrorKind::DuplicateLabel, "label '" + labels[i] + "' appears twice");
  }

  std::vector<ElementSet> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [lo, hi] : covers) {
    auto a = lat.find(lo);
    auto b = lat.find(hi);
    if (!a) throw Error(ErrorKind::UnknownLabel, "cover mentions unknown element '" + lo + "'");
    if (!b) throw Error(ErrorKind::UnknownLabel, "cover mentions unknown element '" + hi + "'");
    if (*a == *b) throw Error(ErrorKind::CyclicCovers, "cover (" + lo + ", " + hi + ") is a loop");
    succ[*a].push_back(*b);
    ++indegree[*b];
  }

  // Kahn's algorithm; a leftover vertex witnesses a cycle.
  std::vector<Element> topo;
  topo.reserve(n);
  for (Element i = 0; i < n; ++i)
    if (indegree[i] == 0) topo.push_back(i);
  for (std::size_t head = 0; head < topo.size(); ++head)
    for (Element s : succ[topo[head]])
      if (--indegree[s] == 0) topo.push_back(s);
  if (topo.size() != n) {
    for (Element i = 0; i < n; ++i)
      if (indegree[i] != 0)
        throw Error(ErrorKind::CyclicCovers, "covers form a cycle through '" + labels[i] + "'");
  }

  lat.up_.assign(n, Bitset(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Bitset& up = lat.up_[*it];
    up.set(*it);
    for (Element s : succ[*it]) up |= lat.up_[s];
  }
  lat.down_.assign(n, Bitset(n));
  for (Element x = 0; x < n; ++x)
    for (auto y = lat.up_[x].find_first(); y != Bitset::npos; y = lat.up_[x].find_next(y))
      lat.down_[y].set(x);

  lat.join_.assign(n * n, 0);
  lat.meet_.assign(n * n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      auto j = detail::least_of(lat.up_[x] & lat.up_[y], lat.up_);
      if (!j)
        throw Error(ErrorKind::NotALattice,
                    "elements '" + labels[x] + "' and '" + labels[y] + "' have no unique join");
      auto m = detail::least_of(lat.down_[x] & lat.down_[y], lat.down_);
      if (!m)
        throw Error(ErrorKind::NotALattice,
                    "elements '" + labels[x] + "' and '" + labels[y] + "' have no unique meet");
      lat.join_[x * n + y] = lat.join_[y * n + x] = *j;
      lat.meet_[x * n + y] = lat.meet_[y * n + x] = *m;
    }
  }

  Bitset all(n);
  all.set();
  auto bottom = detail::least_of(all, lat.up_);
  auto top = detail::least_of(all, lat.down_);
  if (!bottom || !top) throw Error(ErrorKind::NotALattice, "no least or no greatest element");
  lat.bottom_ = *bottom;
  lat.top_ = *top;

  lat.lower_covers_.assign(n, {});
  lat.upper_covers_.assign(n, {});
  for (Element y = 0; y < n; ++y) {
    for (auto x = lat.down_[y].find_first(); x != Bitset::npos; x = lat.down_[y].find_next(x)) {
      if (x == y) continue;
      if ((lat.up_[x] & lat.down_[y]).count() == 2) {
        lat.lower_covers_[y].push_back(x);
        lat.upper_covers_[x].push_back(y);
      }
    }
  }
  for (auto& c : lat.upper_covers_) std::sort(c.begin(), c.end());

  lat.atoms_ = lat.upper_covers_[lat.bottom_];
  lat.atom_mask_.assign(n, Bitset(lat.atoms_.size()));
  for (std::size_t i = 0; i < lat.atoms_.size(); ++i) {
    const Bitset& up = lat.up_[lat.atoms_[i]];
    for (auto y = up.find_first(); y != Bitset::npos; y = up.find_next(y)) lat.atom_mask_[y].set(i);
  }

  lat.atomic_ = true;
  for (Element x = 0; x < n && lat.atomic_; ++x) {
    Element j = lat.bottom_;
    const Bitset& mask = lat.atom_mask_[x];
    for (auto i = mask.find_first(); i != Bitset::npos; i = mask.find_next(i)) j = lat.join(j, lat.atoms_[i]);
    lat.atomic_ = (j == x);
  }
  return lat;
}

/// Least upper bound of `s`; the join of the empty set is the bottom element.
inline Element join_set(const Lattice& lat, const ElementSet& s) {
  Element j = lat.bottom();
  for (Element x : s) j = lat.join(j, x);
  return j;
}

inline ElementSet atoms_below(const Lattice& lat, Element x) {
  ElementSet out;
  const Bitset& mask = lat.atom_mask(x);
  for (auto i = mask.find_first(); i != Bitset::npos; i = mask.find_next(i)) out.push_back(lat.atoms()[i]);
  return out;
}

/// The interval [x, y] as a lattice in its own right, with bottom x.
inline Lattice interval(const Lattice& lat, Element x, Element y) {
  if (!lat.leq(x, y))
    throw Error(ErrorKind::NotComparable, "'" + lat.label(x) + "' is not below '" + lat.label(y) + "'");
  Bitset members = lat.up_set(x) & lat.down_set(y);
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto z = members.find_first(); z != Bitset::npos; z = members.find_next(z)) {
    labels.push_back(lat.label(z));
    for (Element w : lat.lower_covers(z))
      if (members.test(w)) covers.emplace_back(lat.label(w), lat.label(z));
  }
  return build_lattice(labels, covers);
}

/// Least d such that x joined with d atoms equals y. Breadth-first over the
/// set of elements reachable with k atoms.
inline std::size_t atom_distance(const Lattice& lat, Element x, Element y) {
  if (!lat.leq(x, y))
    throw Error(ErrorKind::NotComparable, "'" + lat.label(x) + "' is not below '" + lat.label(y) + "'");
  if (!lat.is_atomic()) throw Error(ErrorKind::NotAtomic, "atom distance needs an atomic lattice");
  const ElementSet usable = atoms_below(lat, y);
  Bitset seen(lat.size());
  seen.set(x);
  std::vector<Element> frontier{x};
  for (std::size_t d = 0;; ++d) {
    if (seen.test(y)) return d;
    std::vector<Element> next;
    for (Element z : frontier)
      for (Element a : usable) {
        Element w = lat.join(z, a);
        if (!seen.test(w)) {
          seen.set(w);
          next.push_back(w);
        }
      }
    frontier = std::move(next);
  }
}

// ---------------------------------------------------------------------------
// Building sets

namespace detail {

inline ElementSet maximal_elements(const Lattice& lat, const ElementSet& s) {
  ElementSet out;
  for (Element a : s) {
    bool maximal = true;
    for (Element b : s)
      if (lat.less(a, b)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  return out;
}

// Whether (y_1..y_k) -> y_1 v ... v y_k is an isomorphism from the product of
// the intervals [0, g_i] onto [0, x]. For a bijective join map, order
// reflection is equivalent to (v y) ^ g_i == y_i for every tuple and i.
inline bool join_map_is_isomorphism(const Lattice& lat, const ElementSet& factors, Element x) {
  const std::size_t target = lat.down_set(x).count();
  std::vector<ElementSet> parts;
  std::size_t product = 1;
  for (Element g : factors) {
    parts.push_back(to_element_set(lat.down_set(g)));
    product *= parts.back().size();
    if (product > target) return false;
  }
  if (product != target) return false;

  Bitset seen(lat.size());
  std::vector<std::size_t> digit(parts.size(), 0);
  while (true) {
    Element z = lat.bottom();
    for (std::size_t i = 0; i < parts.size(); ++i) z = lat.join(z, parts[i][digit[i]]);
    if (!lat.leq(z, x) || seen.test(z)) return false;
    seen.set(z);
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (lat.meet(z, factors[i]) != parts[i][digit[i]]) return false;
    std::size_t i = 0;
    while (i < parts.size() && ++digit[i] == parts[i].size()) digit[i++] = 0;
    if (i == parts.size()) break;
  }
  return true;
}

// Exhaustive search for any poset isomorphism from the product of the
// intervals [0, g_i] onto [0, x] sending the i-th unit tuple to g_i.
inline bool some_isomorphism_exists(const Lattice& lat, const ElementSet& factors, Element x) {
  std::vector<ElementSet> parts;
  std::size_t product = 1;
  for (Element g : factors) {
    parts.push_back(to_element_set(lat.down_set(g)));
    product *= parts.back().size();
  }
  const ElementSet target = to_element_set(lat.down_set(x));
  if (product != target.size()) return false;

  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> digit(parts.size(), 0);
  while (true) {
    tuples.push_back(digit);
    std::size_t i = 0;
    while (i < parts.size() && ++digit[i] == parts[i].size()) digit[i++] = 0;
    if (i == parts.size()) break;
  }
  auto tuple_leq = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (!lat.leq(parts[i][tuples[a][i]], parts[i][tuples[b][i]])) return false;
    return true;
  };

  const std::size_t m = tuples.size();
  std::vector<std::optional<Element>> image(m);
  Bitset used(lat.size());
  for (std::size_t t = 0; t < m; ++t) {
    std::size_t nonzero = 0, which = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i][tuples[t][i]] != lat.bottom()) {
        ++nonzero;
        which = i;
      }
    if (nonzero == 0) image[t] = lat.bottom();
    if (nonzero == 1 && parts[which][tuples[t][which]] == factors[which]) image[t] = factors[which];
  }
  for (std::size_t t = 0; t < m; ++t)
    if (image[t]) {
      if (used.test(*image[t])) return false;
      used.set(*image[t]);
    }

  auto consistent = [&](std::size_t t, Element z) {
    for (std::size_t s = 0; s < m; ++s) {
      if (!image[s] || s == t) continue;
      if (tuple_leq(s, t) != lat.leq(*image[s], z)) return false;
      if (tuple_leq(t, s) != lat.leq(z, *image[s])) return false;
    }
    return true;
  };
  for (std::size_t t = 0; t < m; ++t)
    if (image[t] && !consistent(t, *image[t])) return false;

  auto search = [&](auto&& self, std::size_t t) -> bool {
    if (t == m) return true;
    if (image[t]) return self(self, t + 1);
    for (Element z : target) {
      if (used.test(z) || !consistent(t, z)) continue;
      image[t] = z;
      used.set(z);
      if (self(self, t + 1)) return true;
      used.reset(z);
      image[t].reset();
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace detail

struct BuildingSetCheckOptions {
  /// When the canonical join map fails, fall back to searching for any
  /// isomorphism (only for intervals with at most this many elements).
  bool exhaustive_fallback = false;
  std::size_t exhaustive_limit = 12;
};

/// max G_{<=x} for an arbitrary candidate family `g` (need not be a building set).
inline ElementSet factors_of(const Lattice& lat, const Bitset& g, Element x) {
  if (x == lat.bottom())
    throw Error(ErrorKind::BottomElement, "the bottom element '" + lat.label(x) + "' has no factors");
  return detail::maximal_elements(lat, to_element_set(g & lat.down_set(x)));
}

inline bool is_building_set(const Lattice& lat, const ElementSet& g,
                            const BuildingSetCheckOptions& options = {}) {
  if (!lat.is_atomic()) throw Error(ErrorKind::NotAtomic, "building sets need an atomic lattice");
  Bitset members(lat.size());
  for (Element x : g) {
    if (x >= lat.size()) throw Error(ErrorKind::OutOfRange, "element index out of range");
    if (x == lat.bottom())
      throw Error(ErrorKind::ContainsBottom, "candidate contains the bottom element '" + lat.label(x) + "'");
    members.set(x);
  }
  for (Element x = 0; x < lat.size(); ++x) {
    if (x == lat.bottom()) continue;
    const ElementSet f = factors_of(lat, members, x);
    if (f.empty()) return false;
    if (detail::join_map_is_isomorphism(lat, f, x)) continue;
    if (options.exhaustive_fallback && lat.down_set(x).count() <= options.exhaustive_limit &&
        detail::some_isomorphism_exists(lat, f, x))
      continue;
    return false;
  }
  return true;
}

/// Elements whose lower interval is not the product of two proper lower
/// intervals under the join map.
inline ElementSet minimal_building_set(const Lattice& lat) {
  if (!lat.is_atomic()) throw Error(ErrorKind::NotAtomic, "building sets need an atomic lattice");
  ElementSet out;
  for (Element x = 0; x < lat.size(); ++x) {
    if (x == lat.bottom()) continue;
    const ElementSet below = to_element_set(lat.down_set(x));
    const std::size_t size_x = below.size();
    bool reducible = false;
    for (std::size_t i = 0; i < below.size() && !reducible; ++i) {
      Element y = below[i];
      if (y == lat.bottom() || y == x) continue;
      const std::size_t size_y = lat.down_set(y).count();
      if (size_x % size_y != 0) continue;
      for (std::size_t j = i + 1; j < below.size() && !reducible; ++j) {
        Element z = below[j];
        if (z == lat.bottom() || z == x) continue;
        if (size_y * lat.down_set(z).count() != size_x) continue;
        if (lat.meet(y, z) != lat.bottom() || lat.join(y, z) != x) continue;
        reducible = detail::join_map_is_isomorphism(lat, {y, z}, x);
      }
    }
    if (!reducible) out.push_back(x);
  }
  return out;
}

/// All building sets, by brute force over supersets of the minimal one.
inline std::vector<ElementSet> all_building_sets(const Lattice& lat, std::size_t max_elements = 20) {
  if (lat.size() > max_elements)
    throw Error(ErrorKind::TooLarge, "lattice has " + std::to_string(lat.size()) +
                                         " elements, enumeration limit is " + std::to_string(max_elements));
  const ElementSet base = minimal_building_set(lat);
  ElementSet optional;
  for (Element x = 0; x < lat.size(); ++x)
    if (x != lat.bottom() && !std::binary_search(base.begin(), base.end(), x)) optional.push_back(x);

  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << optional.size()); ++mask) {
    ElementSet g = base;
    for (std::size_t i = 0; i < optional.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) g.push_back(optional[i]);
    std::sort(g.begin(), g.end());
    if (is_building_set(lat, g)) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// A validated building set together with the lattice it lives in.
class BuildingSet {
 public:
  BuildingSet(std::shared_ptr<const Lattice> lattice, ElementSet members,
              const BuildingSetCheckOptions& options = {})
      : lattice_(std::move(lattice)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!is_building_set(*lattice_, members_, options)) {
      std::string names;
      for (Element g : members_) names += (names.empty() ? "" : ", ") + lattice_->label(g);
      throw Error(ErrorKind::NotABuildingSet, "{" + names + "} is not a building set");
    }
    mask_ = Bitset(lattice_->size());
    for (Element g : members_) mask_.set(g);
  }

  static BuildingSet minimal(std::shared_ptr<const Lattice> lattice) {
    ElementSet g = minimal_building_set(*lattice);
    return BuildingSet(std::move(lattice), std::move(g));
  }

  static BuildingSet maximal(std::shared_ptr<const Lattice> lattice) {
    ElementSet g;
    for (Element x = 0; x < lattice->size(); ++x)
      if (x != lattice->bottom()) g.push_back(x);
    return BuildingSet(std::move(lattice), std::move(g));
  }

  const Lattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const Lattice>& lattice_ptr() const { return lattice_; }
  const ElementSet& members() const { return members_; }
  const Bitset& mask() const { return mask_; }
  bool contains(Element x) const { return x < mask_.size() && mask_.test(x); }
  std::size_t size() const { return members_.size(); }

  /// The factors max G_{<=x}.
  ElementSet factors(Element x) const { return factors_of(*lattice_, mask_, x); }

 private:
  std::shared_ptr<const Lattice> lattice_;
  ElementSet members_;
  Bitset mask_;
};

inline ElementSet factors(const BuildingSet& g, Element x) { return g.factors(x); }

inline std::string format_set(const Lattice& lat, const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + lat.label(s[i]);
  return out + "}";
}

}  // namespace chowring
