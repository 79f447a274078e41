#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "chowring/algebra.hpp"
#include "chowring/linalg.hpp"
#include "chowring/nested.hpp"

namespace chowring {

using IntVector = std::vector<long long>;

struct Ray {
  std::string label;
  IntVector vector;

  friend bool operator==(const Ray&, const Ray&) = default;
};

/// Ray indices, sorted ascending.
using Cone = std::vector<std::size_t>;

/// A simplicial fan stored by its inclusion-maximal cones; every subset of a
/// stored cone is a cone of the fan. Rays are identified by their vectors.
class Fan {
 public:
  Fan() = default;
  explicit Fan(std::size_t dimension) : dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }
  const std::vector<Ray>& rays() const { return rays_; }
  const std::set<Cone>& maximal_cones() const { return maximal_; }

  /// Index of the ray with this vector, adding it if new.
  std::size_t add_ray(const std::string& label, const IntVector& vector) {
    if (vector.size() != dimension_) throw Error(ErrorKind::InvalidParameters, "ray '" + label + "' has wrong length");
    if (auto found = find_ray(vector)) return *found;
    rays_.push_back({label, vector});
    return rays_.size() - 1;
  }

  std::optional<std::size_t> find_ray(const IntVector& vector) const {
    for (std::size_t i = 0; i < rays_.size(); ++i)
      if (rays_[i].vector == vector) return i;
    return std::nullopt;
  }

  /// Adds a cone; duplicates and faces of existing cones are absorbed.
  void add_cone(Cone cone) {
    std::sort(cone.begin(), cone.end());
    cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
    for (std::size_t r : cone)
      if (r >= rays_.size()) throw Error(ErrorKind::InvalidParameters, "cone refers to a missing ray");
    for (const Cone& c : maximal_)
      if (std::includes(c.begin(), c.end(), cone.begin(), cone.end())) return;
    for (auto it = maximal_.begin(); it != maximal_.end();)
      it = std::includes(cone.begin(), cone.end(), it->begin(), it->end()) ? maximal_.erase(it) : std::next(it);
    maximal_.insert(std::move(cone));
  }

  bool contains_cone(const Cone& cone) const {
    if (cone.empty()) return true;
    return std::any_of(maximal_.begin(), maximal_.end(), [&](const Cone& c) {
      return std::includes(c.begin(), c.end(), cone.begin(), cone.end());
    });
  }

  /// Every cone of the fan (all faces of maximal cones, origin included).
  std::set<Cone> all_cones() const {
    std::set<Cone> out{Cone{}};
    for (const Cone& c : maximal_) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << c.size()); ++mask) {
        Cone face;
        for (std::size_t i = 0; i < c.size(); ++i)
          if (mask & (std::uint64_t{1} << i)) face.push_back(c[i]);
        out.insert(std::move(face));
      }
    }
    return out;
  }

  std::vector<std::string> cone_labels(const Cone& cone) const {
    std::vector<std::string> out;
    for (std::size_t r : cone) out.push_back(rays_[r].label);
    return out;
  }

 private:
  std::size_t dimension_ = 0;
  std::vector<Ray> rays_;
  std::set<Cone> maximal_;
};

/// 0/1 vector recording which atoms (in atom order) lie below x.
inline IntVector characteristic_vector(const Lattice& lat, Element x) {
  IntVector v(lat.atoms().size(), 0);
  const Bitset& mask = lat.atom_mask(x);
  for (auto i = mask.find_first(); i != Bitset::npos; i = mask.find_next(i)) v[i] = 1;
  return v;
}

/// The fan whose cones are spanned by characteristic vectors of nested sets.
inline Fan sigma_fan(const BuildingSet& g) {
  const Lattice& lat = g.lattice();
  Fan fan(lat.atoms().size());
  std::map<Element, std::size_t> ray_of;
  for (Element x : g.members()) ray_of[x] = fan.add_ray(lat.label(x), characteristic_vector(lat, x));
  for (const ElementSet& face : nested_complex(g, FaceStorage::maximal_only).maximal_faces) {
    Cone cone;
    for (Element x : face) cone.push_back(ray_of.at(x));
    fan.add_cone(std::move(cone));
  }
  return fan;
}

namespace detail {

inline std::vector<std::vector<Integer>> generator_columns(const Fan& fan, const Cone& cone) {
  std::vector<std::vector<Integer>> cols;
  for (std::size_t r : cone) {
    std::vector<Integer> col;
    for (long long v : fan.rays()[r].vector) col.emplace_back(v);
    cols.push_back(std::move(col));
  }
  return cols;
}

inline bool is_simplicial(const Fan& fan, const Cone& cone) {
  return exact_rank(generator_columns(fan, cone)) == cone.size();
}

// True iff cone(a) ∩ cone(b) is exactly the cone on their common rays. For
// simplicial cones this fails iff some point of the intersection has a
// positive coordinate, in a's basis, on a ray outside the common part.
inline bool meet_in_common_face(const Fan& fan, const Cone& a, const Cone& b) {
  Cone only_a;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
  if (only_a.empty()) return true;
  const std::size_t n = fan.dimension();
  const std::size_t vars = a.size() + b.size();
  std::vector<std::vector<Rational>> rows(n + 1, std::vector<Rational>(vars, 0));
  std::vector<Rational> rhs(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) rows[i][j] = fan.rays()[a[j]].vector[i];
    for (std::size_t j = 0; j < b.size(); ++j) rows[i][a.size() + j] = -fan.rays()[b[j]].vector[i];
  }
  for (std::size_t j = 0; j < a.size(); ++j)
    if (std::binary_search(only_a.begin(), only_a.end(), a[j])) rows[n][j] = 1;
  rhs[n] = 1;
  return !feasible_nonnegative(std::move(rows), std::move(rhs));
}

}  // namespace detail

/// Simplicial cones meeting pairwise in common faces, checked exactly.
inline bool check_fan(const Fan& fan) {
  std::vector<Cone> cones(fan.maximal_cones().begin(), fan.maximal_cones().end());
  for (const Cone& c : cones)
    if (!detail::is_simplicial(fan, c)) return false;
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j)
      if (!detail::meet_in_common_face(fan, cones[i], cones[j]) || !detail::meet_in_common_face(fan, cones[j], cones[i]))
        return false;
  return true;
}

/// gcd of the k x k minors of the k x n generator matrix equals 1.
inline bool cone_is_unimodular(const std::vector<IntVector>& generators) {
  if (generators.empty()) return true;
  const std::size_t k = generators.size();
  const std::size_t n = generators[0].size();
  if (k > n) return false;
  Integer g = 0;
  std::vector<std::size_t> cols(k);
  std::iota(cols.begin(), cols.end(), 0);
  while (true) {
    std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i][j] = generators[i][cols[j]];
    g = gcd(g, determinant(std::move(m)));
    if (g == 1) return true;
    // next k-combination of n columns
    std::size_t i = k;
    while (i > 0 && cols[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return false;
}

inline bool is_unimodular(const Fan& fan) {
  for (const Cone& c : fan.maximal_cones()) {
    std::vector<IntVector> gens;
    for (std::size_t r : c) gens.push_back(fan.rays()[r].vector);
    if (!cone_is_unimodular(gens)) return false;
  }
  return true;
}

/// Stellar subdivision of `fan` at `sigma` with a new ray from the relative
/// interior of sigma.
inline Fan stellar_subdivide(const Fan& fan, Cone sigma, const Ray& new_ray) {
  std::sort(sigma.begin(), sigma.end());
  if (sigma.empty() || !fan.contains_cone(sigma))
    throw Error(ErrorKind::ConeNotInFan, "cannot subdivide at a cone that is not in the fan");
  const auto coords = solve_unique(detail::generator_columns(fan, sigma),
                                   std::vector<Integer>(new_ray.vector.begin(), new_ray.vector.end()));
  if (!coords || std::any_of(coords->begin(), coords->end(), [](const Rational& c) { return c <= 0; }))
    throw Error(ErrorKind::RayNotInterior, "ray '" + new_ray.label + "' is not in the relative interior");
  if (sigma.size() == 1) return fan;
  if (fan.find_ray(new_ray.vector))
    throw Error(ErrorKind::RayNotInterior, "ray '" + new_ray.label + "' is already a ray of the fan");

  Fan out(fan.dimension());
  for (const Ray& r : fan.rays()) out.add_ray(r.label, r.vector);
  const std::size_t fresh = out.add_ray(new_ray.label, new_ray.vector);
  for (const Cone& tau : fan.maximal_cones()) {
    if (!std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end())) {
      out.add_cone(tau);
      continue;
    }
    for (std::size_t v : sigma) {
      Cone c;
      for (std::size_t r : tau)
        if (r != v) c.push_back(r);
      c.push_back(fresh);
      out.add_cone(std::move(c));
    }
  }
  return out;
}

/// Same rays (as vectors) and same maximal cones (as sets of vectors).
inline bool fans_equal(const Fan& a, const Fan& b) {
  if (a.dimension() != b.dimension()) return false;
  auto ray_set = [](const Fan& f) {
    std::set<IntVector> s;
    for (const Ray& r : f.rays()) s.insert(r.vector);
    return s;
  };
  auto cone_set = [](const Fan& f) {
    std::set<std::set<IntVector>> s;
    for (const Cone& c : f.maximal_cones()) {
      std::set<IntVector> vs;
      for (std::size_t r : c) vs.insert(f.rays()[r].vector);
      s.insert(std::move(vs));
    }
    return s;
  };
  return ray_set(a) == ray_set(b) && cone_set(a) == cone_set(b);
}

/// Admissible orders list larger elements no later than smaller ones.
inline void require_admissible_order(const BuildingSet& g, const std::vector<Element>& order) {
  const Lattice& lat = g.lattice();
  ElementSet sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != g.members())
    throw Error(ErrorKind::OrderNotAdmissible, "order must list every building-set member exactly once");
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (lat.less(order[i], order[j]))
        throw Error(ErrorKind::OrderNotAdmissible,
                    "'" + lat.label(order[i]) + "' is listed before the larger '" + lat.label(order[j]) + "'");
}

/// Larger elements first; lattice-incomparable ties broken by label.
inline std::vector<Element> default_subdivision_order(const BuildingSet& g) {
  std::vector<Element> order = VariableOrder(g).variables();
  std::reverse(order.begin(), order.end());
  return order;
}

/// Start from the positive orthant, subdivide stellarly at V(atoms below G)
/// with ray v_G for each non-atom G in `order`, then drop every cone whose
/// ray labels do not form a nested set. `after_step` sees each intermediate
/// fan.
inline Fan theta_fan(const BuildingSet& g, const std::vector<Element>& order,
                     const std::function<void(const Fan&)>& after_step = {}) {
  require_admissible_order(g, order);
  const Lattice& lat = g.lattice();
  const std::size_t n = lat.atoms().size();
  Fan fan(n);
  Cone orthant;
  for (Element a : lat.atoms()) orthant.push_back(fan.add_ray(lat.label(a), characteristic_vector(lat, a)));
  if (!orthant.empty()) fan.add_cone(orthant);
  if (after_step) after_step(fan);

  for (Element x : order) {
    if (lat.atom_position(x)) continue;
    Cone sigma;
    for (Element a : atoms_below(lat, x)) sigma.push_back(*fan.find_ray(characteristic_vector(lat, a)));
    if (!fan.contains_cone(Cone(sigma.begin(), sigma.end())))
      throw Error(ErrorKind::FaceMissing, "face spanned by the atoms below '" + lat.label(x) + "' has disappeared");
    fan = stellar_subdivide(fan, sigma, Ray{lat.label(x), characteristic_vector(lat, x)});
    if (after_step) after_step(fan);
  }

  // Removal: keep the nested faces of each cone.
  std::vector<Element> element_of(fan.rays().size());
  for (std::size_t r = 0; r < fan.rays().size(); ++r) element_of[r] = lat.index_of(fan.rays()[r].label);
  Fan out(n);
  for (const Ray& r : fan.rays()) out.add_ray(r.label, r.vector);
  for (const Cone& c : fan.maximal_cones()) {
    ElementSet face;
    Cone chosen;
    auto grow = [&](auto&& self, std::size_t start) -> void {
      bool extended = false;
      for (std::size_t i = start; i < c.size(); ++i) {
        const Element x = element_of[c[i]];
        ElementSet sorted_face = face;
        std::sort(sorted_face.begin(), sorted_face.end());
        if (!detail::extends_nested(g, sorted_face, x)) continue;
        face.push_back(x);
        chosen.push_back(c[i]);
        self(self, i + 1);
        face.pop_back();
        chosen.pop_back();
        extended = true;
      }
      if (!extended && !chosen.empty()) out.add_cone(chosen);
    };
    grow(grow, 0);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chow ring relations

struct ChowRelation {
  ElementSet base;     ///< the nested set T
  IntVector dual;      ///< b, orthogonal to every v_X with X in T
  IntPolynomial relation;
};

/// Fulton–Sturmfels relations r(T, b) for b running over the lattice basis
/// C1 ∪ C2 of V(T)^⊥: differences of atoms within each Δ_T(X), and atoms
/// outside the join of T.
inline std::vector<ChowRelation> chow_relations(const BuildingSet& g, const VariableOrder& ord, const ElementSet& t) {
  const Lattice& lat = g.lattice();
  detail::require_members(g, t);
  if (!is_nested(g, t)) throw Error(ErrorKind::NotNested, format_set(lat, t) + " is not nested");
  const std::size_t n = lat.atoms().size();

  std::vector<IntVector> duals;
  for (Element x : t) {
    Bitset delta = lat.atom_mask(x);
    for (Element y : t)
      if (lat.less(y, x)) delta -= lat.atom_mask(y);
    const auto first = delta.find_first();
    for (auto j = delta.find_next(first); j != Bitset::npos; j = delta.find_next(j)) {
      IntVector b(n, 0);
      b[first] = 1;
      b[j] = -1;
      duals.push_back(std::move(b));
    }
  }
  const Bitset& covered = lat.atom_mask(join_set(lat, t));
  for (std::size_t i = 0; i < n; ++i)
    if (!covered.test(i)) {
      IntVector b(n, 0);
      b[i] = 1;
      duals.push_back(std::move(b));
    }

  const Monomial base = support_monomial(ord, t);
  std::vector<ChowRelation> out;
  for (IntVector& b : duals) {
    IntPolynomial rel(ord.size());
    for (Element y : g.members()) {
      if (std::binary_search(t.begin(), t.end(), y) || !detail::extends_nested(g, t, y)) continue;
      const IntVector v = characteristic_vector(lat, y);
      long long pairing = 0;
      for (std::size_t i = 0; i < n; ++i) pairing += b[i] * v[i];
      rel.add_term(base * Monomial::variable(ord.size(), ord.position(y)), Integer(pairing));
    }
    out.push_back({t, std::move(b), std::move(rel)});
  }
  return out;
}

/// Every Fulton–Sturmfels relation reduces to zero modulo the Groebner basis
/// of D(L, G).
inline bool verify_chow_iso(const BuildingSet& g) {
  const VariableOrder ord(g);
  const GroebnerBasis gb = groebner_generators(g, ord);
  const auto polys = gb.polynomials();
  for (const ElementSet& t : nested_complex(g).faces)
    for (const ChowRelation& r : chow_relations(g, ord, t))
      if (!reduce(r.relation, polys).is_zero()) return false;
  return true;
}

}  // namespace chowring
