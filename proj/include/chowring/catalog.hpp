#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chowring/lattice.hpp"

namespace chowring {

using CoverList = std::vector<std::pair<std::string, std::string>>;

namespace detail {

inline std::string digits_label(const std::vector<std::size_t>& block, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (n > 9 && i > 0) out += '.';
    out += std::to_string(block[i] + 1);
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Labels and covers of the family of subsets of [n] with fewer than `cap`
// elements ordered by inclusion, plus `top` above everything when given.
inline std::pair<std::vector<std::string>, CoverList> subset_family(std::size_t n, std::size_t cap,
                                                                    const std::optional<std::string>& top) {
  std::vector<std::string> labels;
  CoverList covers;
  std::vector<std::string> previous;
  for (std::size_t k = 0; k < cap; ++k) {
    std::vector<std::string> layer;
    for (const auto& s : subsets_of_size(n, k)) {
      const std::string label = k == 0 ? "0" : digits_label(s, n);
      layer.push_back(label);
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<std::size_t> smaller = s;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
        covers.emplace_back(smaller.empty() ? "0" : digits_label(smaller, n), label);
      }
    }
    labels.insert(labels.end(), layer.begin(), layer.end());
    previous = std::move(layer);
  }
  if (top) {
    labels.push_back(*top);
    for (const auto& x : previous) covers.emplace_back(x, *top);
  }
  return {labels, covers};
}

}  // namespace detail

/// Set partitions of [n] under reverse refinement. The bottom (all
/// singletons) is "0", the one-block partition is "U", and any other
/// partition is "H" followed by its non-singleton blocks, e.g. H12, H123,
/// H12|34.
inline Lattice partition_lattice(std::size_t n) {
  if (n < 2 || n > 7) throw Error(ErrorKind::OutOfRange, "partition lattice needs 2 <= n <= 7");
  using Partition = std::vector<std::vector<std::size_t>>;
  std::vector<Partition> parts;
  Partition cur;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      parts.push_back(cur);
      return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
      cur[b].push_back(i);
      self(self, i + 1);
      cur[b].pop_back();
    }
    cur.push_back({i});
    self(self, i + 1);
    cur.pop_back();
  };
  rec(rec, 0);

  auto label_of = [&](const Partition& p) -> std::string {
    if (p.size() == 1) return "U";
    std::vector<std::vector<std::size_t>> big;
    for (const auto& b : p)
      if (b.size() > 1) big.push_back(b);
    if (big.empty()) return "0";
    std::sort(big.begin(), big.end());
    std::string out = "H";
    for (std::size_t i = 0; i < big.size(); ++i) out += (i ? "|" : "") + detail::digits_label(big[i], n);
    return out;
  };
  std::stable_sort(parts.begin(), parts.end(), [&](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return label_of(a) < label_of(b);
  });

  std::vector<std::string> labels;
  CoverList covers;
  for (const Partition& p : parts) {
    labels.push_back(label_of(p));
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        Partition merged;
        for (std::size_t k = 0; k < p.size(); ++k)
          if (k != i && k != j) merged.push_back(p[k]);
        std::vector<std::size_t> joined = p[i];
        joined.insert(joined.end(), p[j].begin(), p[j].end());
        std::sort(joined.begin(), joined.end());
        merged.push_back(joined);
        covers.emplace_back(label_of(p), label_of(merged));
      }
  }
  return build_lattice(labels, covers);
}

/// Subsets of [n] by inclusion; "0" is the empty set, other subsets are
/// their digits (dot separated when n = 10).
inline Lattice boolean_lattice(std::size_t n) {
  if (n < 1 || n > 10) throw Error(ErrorKind::OutOfRange, "boolean lattice needs 1 <= n <= 10");
  auto [labels, covers] = detail::subset_family(n, n + 1, std::nullopt);
  return build_lattice(labels, covers);
}

/// Intersection lattice of n generic hyperplanes in rank l: subsets of size
/// below l, and a single top "U".
inline Lattice generic_arrangement_lattice(std::size_t n, std::size_t l) {
  if (l < 2 || l > n || n > 10)
    throw Error(ErrorKind::InvalidParameters, "generic arrangement needs 2 <= l <= n <= 10");
  auto [labels, covers] = detail::subset_family(n, l, std::string("U"));
  return build_lattice(labels, covers);
}

/// Seven-element lattice with Y1 over A1, A2 and Y2 over A2, A3 under U.
/// Not graded in the geometric sense: A1 v A3 = U.
inline Lattice fy_example_lattice() {
  return build_lattice({"0", "A1", "A2", "A3", "Y1", "Y2", "U"}, {{"0", "A1"},
                                                                  {"0", "A2"},
                                                                  {"0", "A3"},
                                                                  {"A1", "Y1"},
                                                                  {"A2", "Y1"},
                                                                  {"A2", "Y2"},
                                                                  {"A3", "Y2"},
                                                                  {"Y1", "U"},
                                                                  {"Y2", "U"}});
}

// ---------------------------------------------------------------------------
// Lattice files

struct BuildingSetSpec {
  enum class Kind { none, minimal, maximal, explicit_list };
  Kind kind = Kind::none;
  std::vector<std::string> labels;

  friend bool operator==(const BuildingSetSpec&, const BuildingSetSpec&) = default;
};

struct LatticeFile {
  std::string name;
  std::vector<std::string> elements;
  CoverList covers;
  BuildingSetSpec building_set;

  friend bool operator==(const LatticeFile&, const LatticeFile&) = default;
};

/// A lattice file for an in-memory lattice, covers in element order.
inline LatticeFile lattice_file_from(const Lattice& lat, std::string name, BuildingSetSpec spec = {}) {
  LatticeFile f;
  f.name = std::move(name);
  f.elements = lat.labels();
  for (const auto& [lo, hi] : lat.cover_pairs()) f.covers.emplace_back(lat.label(lo), lat.label(hi));
  f.building_set = std::move(spec);
  return f;
}

inline ElementSet resolve_building_set(const Lattice& lat, const BuildingSetSpec& spec) {
  switch (spec.kind) {
    case BuildingSetSpec::Kind::minimal:
      return minimal_building_set(lat);
    case BuildingSetSpec::Kind::maximal: {
      ElementSet g;
      for (Element x = 0; x < lat.size(); ++x)
        if (x != lat.bottom()) g.push_back(x);
      return g;
    }
    case BuildingSetSpec::Kind::explicit_list: {
      ElementSet g;
      for (const auto& label : spec.labels) g.push_back(lat.index_of(label));
      std::sort(g.begin(), g.end());
      return g;
    }
    case BuildingSetSpec::Kind::none:
      break;
  }
  throw Error(ErrorKind::InvalidParameters, "no building set given");
}

namespace detail {

inline std::string position_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

inline std::vector<std::string> string_list(const nlohmann::json& j, const std::string& key) {
  if (!j.is_array()) throw Error(ErrorKind::SyntaxError, "'" + key + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw Error(ErrorKind::SyntaxError, "'" + key + "' must be an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace detail

/// Validates the lattice and any building set named in the file.
inline Lattice validate_lattice_file(const LatticeFile& f) {
  try {
    Lattice lat = build_lattice(f.elements, f.covers);
    if (lat.bottom() != 0)
      throw Error(ErrorKind::ValidationError,
                  "first element '" + f.elements.front() + "' is not the bottom '" + lat.label(lat.bottom()) + "'");
    if (f.building_set.kind == BuildingSetSpec::Kind::explicit_list) {
      const ElementSet g = resolve_building_set(lat, f.building_set);
      if (!is_building_set(lat, g)) throw Error(ErrorKind::NotABuildingSet, format_set(lat, g) + " is not a building set");
    } else if (f.building_set.kind != BuildingSetSpec::Kind::none && !lat.is_atomic()) {
      throw Error(ErrorKind::NotAtomic, "building sets need an atomic lattice");
    }
    return lat;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ValidationError) throw;
    throw Error(ErrorKind::ValidationError, e.what());
  }
}

/// Parses and validates a lattice document.
inline LatticeFile parse_lattice(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::string what = e.what();
    const auto colon = what.rfind(": ");
    throw Error(ErrorKind::SyntaxError,
                detail::position_of(text, e.byte == 0 ? 0 : e.byte - 1) + ": " +
                    (colon == std::string::npos ? what : what.substr(colon + 2)));
  }
  if (!doc.is_object()) throw Error(ErrorKind::SyntaxError, "top level must be an object");
  static const std::set<std::string> known{"name", "elements", "covers", "building_set"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key)) throw Error(ErrorKind::SyntaxError, "unknown key '" + key + "'");
  for (const char* key : {"name", "elements", "covers"})
    if (!doc.contains(key)) throw Error(ErrorKind::SyntaxError, std::string("missing key '") + key + "'");

  LatticeFile f;
  if (!doc["name"].is_string()) throw Error(ErrorKind::SyntaxError, "'name' must be a string");
  f.name = doc["name"].get<std::string>();
  f.elements = detail::string_list(doc["elements"], "elements");
  if (!doc["covers"].is_array()) throw Error(ErrorKind::SyntaxError, "'covers' must be an array of pairs");
  for (const auto& pair : doc["covers"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      throw Error(ErrorKind::SyntaxError, "each cover must be a pair of strings, got " + pair.dump());
    f.covers.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
  }
  if (doc.contains("building_set")) {
    const auto& bs = doc["building_set"];
    if (bs.is_string()) {
      const std::string s = bs.get<std::string>();
      if (s == "minimal")
        f.building_set.kind = BuildingSetSpec::Kind::minimal;
      else if (s == "maximal")
        f.building_set.kind = BuildingSetSpec::Kind::maximal;
      else
        throw Error(ErrorKind::SyntaxError, "'building_set' keyword must be minimal or maximal, got '" + s + "'");
    } else {
      f.building_set.kind = BuildingSetSpec::Kind::explicit_list;
      f.building_set.labels = detail::string_list(bs, "building_set");
    }
  }
  if (f.elements.empty()) throw Error(ErrorKind::ValidationError, "EmptyInput: lattice has no elements");
  validate_lattice_file(f);
  return f;
}

inline nlohmann::ordered_json to_json(const LatticeFile& f) {
  nlohmann::ordered_json j;
  j["name"] = f.name;
  j["elements"] = f.elements;
  auto covers = nlohmann::ordered_json::array();
  for (const auto& [lo, hi] : f.covers) covers.push_back({lo, hi});
  j["covers"] = covers;
  switch (f.building_set.kind) {
    case BuildingSetSpec::Kind::minimal: j["building_set"] = "minimal"; break;
    case BuildingSetSpec::Kind::maximal: j["building_set"] = "maximal"; break;
    case BuildingSetSpec::Kind::explicit_list: j["building_set"] = f.building_set.labels; break;
    case BuildingSetSpec::Kind::none: break;
  }
  return j;
}

inline std::string serialize_lattice(const LatticeFile& f) { return to_json(f).dump(2) + "\n"; }

/// Catalog specs: pi:N, bool:N, generic:N,L, fy.
inline std::optional<Lattice> catalog_lattice(const std::string& spec) {
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.size() > 3 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw Error(ErrorKind::InvalidParameters, "bad number '" + s + "' in '" + spec + "'");
    return std::stoul(s);
  };
  if (spec == "fy") return fy_example_lattice();
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return std::nullopt;
  const std::string family = spec.substr(0, colon), arg = spec.substr(colon + 1);
  if (family == "pi") return partition_lattice(number(arg));
  if (family == "bool") return boolean_lattice(number(arg));
  if (family == "generic") {
    const auto comma = arg.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::InvalidParameters, "expected generic:N,L, got '" + spec + "'");
    return generic_arrangement_lattice(number(arg.substr(0, comma)), number(arg.substr(comma + 1)));
  }
  return std::nullopt;
}

}  // namespace chowring
