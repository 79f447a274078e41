#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "chowring/fan.hpp"
#include "chowring/hilbert_series.hpp"
#include "chowring/polynomial.hpp"

namespace chowring {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json integer_to_json(const Integer& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(c));
  return Json(c.str());
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw Error(ErrorKind::SyntaxError, "expected an integer, got " + j.dump());
}

}  // namespace detail

inline Json monomial_to_json(const Monomial& m, const VariableOrder& ord) {
  Json j = Json::object();
  for (std::size_t i = 0; i < m.nvars(); ++i)
    if (m.exponent(i)) j[ord.name(i)] = m.exponent(i);
  return j;
}

inline Monomial monomial_from_json(const Json& j, const VariableOrder& ord) {
  if (!j.is_object()) throw Error(ErrorKind::SyntaxError, "monomial must be an object, got " + j.dump());
  Monomial m(ord.size());
  for (const auto& [name, e] : j.items()) {
    auto pos = ord.position_of_name(name);
    if (!pos) throw Error(ErrorKind::NotInBuildingSet, "unknown variable '" + name + "'");
    if (!e.is_number_unsigned()) throw Error(ErrorKind::SyntaxError, "exponent of '" + name + "' must be a natural number");
    m.set_exponent(*pos, e.get<unsigned>());
  }
  return m;
}

/// List of [coefficient, {member: exponent}] in descending monomial order.
inline Json polynomial_to_json(const IntPolynomial& p, const VariableOrder& ord) {
  Json j = Json::array();
  for (const auto& [m, c] : p.terms()) j.push_back(Json::array({detail::integer_to_json(c), monomial_to_json(m, ord)}));
  return j;
}

inline IntPolynomial polynomial_from_json(const Json& j, const VariableOrder& ord) {
  if (!j.is_array()) throw Error(ErrorKind::SyntaxError, "polynomial must be a list of terms");
  IntPolynomial p(ord.size());
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw Error(ErrorKind::SyntaxError, "bad term " + term.dump());
    p.add_term(monomial_from_json(term[1], ord), detail::integer_from_json(term[0]));
  }
  return p;
}

inline Json series_to_json(const HilbertSeries& h) {
  Json coeffs = Json::array();
  for (const auto& c : h.coefficients()) coeffs.push_back(detail::integer_to_json(c));
  return Json{{"coefficients", coeffs}, {"series", h.to_string()}};
}

inline HilbertSeries series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coefficients")) throw Error(ErrorKind::SyntaxError, "series needs 'coefficients'");
  std::vector<Integer> coeffs;
  for (const auto& c : j["coefficients"]) coeffs.push_back(detail::integer_from_json(c));
  return HilbertSeries(std::move(coeffs));
}

/// Maximal cones as label lists, ordered by the lattice element order.
inline std::vector<std::vector<std::string>> canonical_cones(const Fan& fan, const Lattice& lat) {
  std::vector<std::vector<Element>> cones;
  for (const Cone& c : fan.maximal_cones()) {
    std::vector<Element> elems;
    for (std::size_t r : c) elems.push_back(lat.index_of(fan.rays()[r].label));
    std::sort(elems.begin(), elems.end());
    cones.push_back(std::move(elems));
  }
  std::sort(cones.begin(), cones.end());
  std::vector<std::vector<std::string>> out;
  for (const auto& c : cones) {
    std::vector<std::string> labels;
    for (Element x : c) labels.push_back(lat.label(x));
    out.push_back(std::move(labels));
  }
  return out;
}

/// Rays ordered by the lattice element order.
inline std::vector<Ray> canonical_rays(const Fan& fan, const Lattice& lat) {
  std::vector<Ray> rays = fan.rays();
  std::sort(rays.begin(), rays.end(),
            [&](const Ray& a, const Ray& b) { return lat.index_of(a.label) < lat.index_of(b.label); });
  return rays;
}

inline Json fan_to_json(const Fan& fan, const Lattice& lat) {
  Json rays = Json::array();
  for (const Ray& r : canonical_rays(fan, lat)) rays.push_back(Json{{"label", r.label}, {"vector", r.vector}});
  return Json{{"dimension", fan.dimension()}, {"rays", rays}, {"cones", canonical_cones(fan, lat)}};
}

inline Fan fan_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dimension") || !j.contains("rays") || !j.contains("cones"))
    throw Error(ErrorKind::SyntaxError, "fan needs 'dimension', 'rays' and 'cones'");
  Fan fan(j["dimension"].get<std::size_t>());
  std::map<std::string, std::size_t> index;
  for (const auto& r : j["rays"]) {
    const auto label = r.at("label").get<std::string>();
    index[label] = fan.add_ray(label, r.at("vector").get<IntVector>());
  }
  for (const auto& c : j["cones"]) {
    Cone cone;
    for (const auto& label : c) {
      auto it = index.find(label.get<std::string>());
      if (it == index.end()) throw Error(ErrorKind::UnknownLabel, "cone uses unknown ray '" + label.get<std::string>() + "'");
      cone.push_back(it->second);
    }
    fan.add_cone(std::move(cone));
  }
  return fan;
}

}  // namespace chowring
