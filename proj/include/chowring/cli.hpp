#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chowring/algebra.hpp"
#include "chowring/catalog.hpp"
#include "chowring/fan.hpp"
#include "chowring/hilbert.hpp"
#include "chowring/nested.hpp"
#include "chowring/serialize.hpp"

namespace chowring {

namespace cli {

enum Exit : int { ok = 0, verification_failed = 1, usage = 2 };

struct Options {
  std::string input;
  std::string selector = "auto";
  std::string format = "text";
  std::string method = "enum";
  std::string construction = "direct";
  std::string order;
  std::string poly;
  std::string base;
  bool check = false;
  bool show = false;
  bool unimodular = false;
  bool equal = false;
  bool verify = false;
  bool maximal_only = false;
};

struct Input {
  LatticeFile file;
  std::shared_ptr<const Lattice> lattice;
};

inline Input load_input(const std::string& source) {
  Input in;
  if (auto lat = catalog_lattice(source)) {
    in.lattice = std::make_shared<const Lattice>(std::move(*lat));
    in.file = lattice_file_from(*in.lattice, source);
    return in;
  }
  std::ifstream stream(source);
  if (!stream) throw Error(ErrorKind::InvalidParameters, "cannot read input '" + source + "'");
  const std::string text((std::istreambuf_iterator<char>(stream)), std::istreambuf_iterator<char>());
  in.file = parse_lattice(text);
  in.lattice = std::make_shared<const Lattice>(validate_lattice_file(in.file));
  return in;
}

inline BuildingSet select_building_set(const Input& in, const std::string& selector) {
  BuildingSetSpec spec;
  if (selector == "minimal") {
    spec.kind = BuildingSetSpec::Kind::minimal;
  } else if (selector == "maximal") {
    spec.kind = BuildingSetSpec::Kind::maximal;
  } else if (selector == "file") {
    if (in.file.building_set.kind == BuildingSetSpec::Kind::none)
      throw Error(ErrorKind::InvalidParameters, "input '" + in.file.name + "' names no building set");
    spec = in.file.building_set;
  } else {
    spec = in.file.building_set;
    if (spec.kind == BuildingSetSpec::Kind::none) spec.kind = BuildingSetSpec::Kind::minimal;
  }
  return BuildingSet(in.lattice, resolve_building_set(*in.lattice, spec));
}

inline std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream stream(text);
  while (std::getline(stream, cur, ',')) {
    const auto first = cur.find_first_not_of(" \t");
    const auto last = cur.find_last_not_of(" \t");
    if (first != std::string::npos) out.push_back(cur.substr(first, last - first + 1));
  }
  return out;
}

inline ElementSet labels_to_set(const Lattice& lat, const std::string& text) {
  ElementSet s;
  for (const auto& label : split_labels(text)) s.push_back(lat.index_of(label));
  std::sort(s.begin(), s.end());
  return s;
}

inline std::string vector_text(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

inline Json labels_json(const Lattice& lat, const ElementSet& s) {
  Json j = Json::array();
  for (Element x : s) j.push_back(lat.label(x));
  return j;
}

inline void emit(std::ostream& out, const Options& o, const Json& machine, const std::string& text) {
  if (o.format == "machine")
    out << machine.dump(2) << "\n";
  else
    out << text;
}

inline int cmd_validate(const Options& o, std::ostream& out) {
  const Input in = load_input(o.input);
  const Lattice& lat = *in.lattice;
  Json j{{"name", in.file.name}, {"elements", lat.size()}, {"atoms", lat.atoms().size()}, {"atomic", lat.is_atomic()}};
  std::string text = "lattice " + in.file.name + ": " + std::to_string(lat.size()) + " elements, " +
                     std::to_string(lat.atoms().size()) + " atoms, " + (lat.is_atomic() ? "atomic" : "not atomic") +
                     "\n";
  if (lat.is_atomic()) {
    const BuildingSet g = select_building_set(in, o.selector);
    j["building_set"] = labels_json(lat, g.members());
    text += "building set " + format_set(lat, g.members()) + ": valid\n";
  }
  emit(out, o, j, text);
  return ok;
}

inline int cmd_building_sets(const Options& o, std::ostream& out) {
  const Input in = load_input(o.input);
  const Lattice& lat = *in.lattice;
  Json list = Json::array();
  std::string text;
  for (const ElementSet& g : all_building_sets(lat)) {
    list.push_back(labels_json(lat, g));
    text += format_set(lat, g) + "\n";
  }
  emit(out, o, Json{{"building_sets", list}}, text);
  return ok;
}

inline int cmd_nested(const Options& o, std::ostream& out) {
  const Input in = load_input(o.input);
  const BuildingSet g = select_building_set(in, o.selector);
  const Lattice& lat = *in.lattice;
  const NestedComplex nc = nested_complex(g, o.maximal_only ? FaceStorage::maximal_only : FaceStorage::all_faces);
  const auto& faces = o.maximal_only ? nc.maximal_faces : nc.faces;
  Json counts = Json::array(), list = Json::array();
  std::string text = "dimension " + std::to_string(nc.dimension) + "\ncounts";
  for (auto c : nc.face_counts) {
    counts.push_back(c);
    text += " " + std::to_string(c);
  }
  text += "\n";
  for (const ElementSet& f : faces) {
    list.push_back(labels_json(lat, f));
    text += format_set(lat, f) + "\n";
  }
  emit(out, o, Json{{"dimension", nc.dimension}, {"counts", counts}, {o.maximal_only ? "maximal_faces" : "faces", list}},
       text);
  return ok;
}

inline int cmd_basis(const Options& o, std::ostream& out) {
  const Input in = load_input(o.input);
  const BuildingSet g = select_building_set(in, o.selector);
  const VariableOrder ord(g);
  Json list = Json::array();
  std::string text;
  for (const Monomial& m : monomial_basis(g, ord)) {
    list.push_back(monomial_to_json(m, ord));
    text += format_monomial(m, ord) + "\n";
  }
  emit(out, o, Json{{"basis", list}}, text);
  return ok;
}

inline int cmd_hilbert(const Options& o, std::ostream& out) {
  const Input in = load_input(o.input);
  const BuildingSet g = select_building_set(in, o.selector);
  const Lattice& lat = *in.lattice;
  HilbertSeries h;
  if (o.method == "closed") {
    if (g.size() + 1 != lat.size())
      throw Error(ErrorKind::InvalidParameters, "the closed form needs the maximal building set");
    if (!metric_is_rank_difference(lat))
      throw Error(ErrorKind::NotGeometric, "atom distance differs from rank difference in '" + in.file.name + "'");
    h = hilbert_maximal_closed(lat);
  } else {
    h = hilbert_series_enumerated(g);
  }
  emit(out, o, series_to_json(h), h.to_string() + "\n");
  return ok;
}

inline int cmd_groebner(const Options& o, std::ostream& out) {
  const Input in = load_input(o.input);
  const BuildingSet g = select_building_set(in, o.selector);
  const VariableOrder ord(g);
  const GroebnerBasis gb = groebner_generators(g, ord);
  Json j = Json::object();
  std::string text;
  if (o.show || !o.check) {
    Json list = Json::array();
    for (const auto& e : gb.elements) {
      list.push_back(polynomial_to_json(e.polynomial, ord));
      text += format_polynomial(e.polynomial, ord) + "\n";
    }
    j["generators"] = list;
  }
  bool good = true;
  if (o.check) {
    good = is_groebner(gb);
    j["groebner"] = good;
    text += good ? "GROEBNER\n" : "NOT GROEBNER\n";
  }
  emit(out, o, j, text);
  return good ? ok : verification_failed;
}

inline int cmd_normal_form(const Options& o, std::istream& in_stream, std::ostream& out) {
  const Input in = load_input(o.input);
  const BuildingSet g = select_building_set(in, o.selector);
  const VariableOrder ord(g);
  std::string text = o.poly;
  if (text.empty()) text.assign(std::istreambuf_iterator<char>(in_stream), std::istreambuf_iterator<char>());
  const IntPolynomial p = parse_polynomial(text, ord);
  const IntPolynomial nf = normal_form(p, groebner_generators(g, ord));
  emit(out, o, Json{{"normal_form", polynomial_to_json(nf, ord)}}, format_polynomial(nf, ord) + "\n");
  return ok;
}

inline int cmd_fan(const Options& o, std::ostream& out) {
  const Input in = load_input(o.input);
  const BuildingSet g = select_building_set(in, o.selector);
  const Lattice& lat = *in.lattice;
  std::vector<Element> order = default_subdivision_order(g);
  if (!o.order.empty()) {
    order.clear();
    for (const auto& label : split_labels(o.order)) order.push_back(lat.index_of(label));
  }
  const bool stellar = o.construction == "stellar";
  const Fan fan = stellar ? theta_fan(g, order) : sigma_fan(g);

  if (o.equal) {
    const Fan other = stellar ? sigma_fan(g) : theta_fan(g, order);
    const bool same = fans_equal(fan, other);
    emit(out, o, Json{{"equal", same}}, same ? "EQUAL\n" : "NOT EQUAL\n");
    return same ? ok : verification_failed;
  }
  if (o.unimodular) {
    const bool uni = is_unimodular(fan);
    emit(out, o, Json{{"unimodular", uni}}, uni ? "UNIMODULAR\n" : "NOT UNIMODULAR\n");
    return uni ? ok : verification_failed;
  }
  std::string text = "rays\n";
  for (const Ray& r : canonical_rays(fan, lat)) text += "  " + r.label + " " + vector_text(r.vector) + "\n";
  text += "cones\n";
  for (const auto& c : canonical_cones(fan, lat)) {
    std::string line;
    for (const auto& label : c) line += (line.empty() ? "" : ", ") + label;
    text += "  {" + line + "}\n";
  }
  emit(out, o, fan_to_json(fan, lat), text);
  return ok;
}

inline int cmd_chow(const Options& o, std::ostream& out) {
  const Input in = load_input(o.input);
  const BuildingSet g = select_building_set(in, o.selector);
  const Lattice& lat = *in.lattice;
  if (o.verify) {
    const bool good = verify_chow_iso(g);
    emit(out, o, Json{{"verified", good}}, good ? "VERIFIED\n" : "FAILED\n");
    return good ? ok : verification_failed;
  }
  const VariableOrder ord(g);
  const ElementSet t = labels_to_set(lat, o.base);
  Json list = Json::array();
  std::string text;
  for (const ChowRelation& r : chow_relations(g, ord, t)) {
    list.push_back(Json{{"dual", r.dual}, {"relation", polynomial_to_json(r.relation, ord)}});
    text += vector_text(r.dual) + ": " + format_polynomial(r.relation, ord) + "\n";
  }
  emit(out, o, Json{{"base", labels_json(lat, t)}, {"relations", list}}, text);
  return ok;
}

}  // namespace cli

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  using namespace cli;
  CLI::App app{"Nested set complexes, D(L,G), fans and Chow rings of atomic lattices", "chowring"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "lattice file, or pi:N, bool:N, generic:N,L, fy")->required();
    sub->add_option("--building-set", o.selector, "minimal | maximal | file")
        ->check(CLI::IsMember({"auto", "minimal", "maximal", "file"}));
    sub->add_option("--format", o.format, "text | machine")->check(CLI::IsMember({"text", "machine"}));
  };
  auto* validate = app.add_subcommand("validate", "check the lattice and building set");
  auto* building_sets = app.add_subcommand("building-sets", "list all building sets");
  auto* nested = app.add_subcommand("nested", "nested set complex");
  nested->add_flag("--maximal-only", o.maximal_only, "list maximal faces only");
  auto* basis = app.add_subcommand("basis", "monomial basis of D(L,G)");
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of D(L,G)");
  hilbert->add_option("--method", o.method, "enum | closed")->check(CLI::IsMember({"enum", "closed"}));
  auto* groebner = app.add_subcommand("groebner", "Groebner basis of D(L,G)");
  groebner->add_flag("--check", o.check, "verify the Groebner property");
  groebner->add_flag("--show", o.show, "print the generators");
  auto* normal = app.add_subcommand("normal-form", "normal form of a polynomial");
  normal->add_option("--poly", o.poly, "polynomial text (read from stdin when absent)");
  auto* fan = app.add_subcommand("fan", "the fan of nested sets");
  fan->add_option("--construction", o.construction, "direct | stellar")
      ->check(CLI::IsMember({"direct", "stellar"}));
  fan->add_option("--order", o.order, "comma separated subdivision order");
  fan->add_flag("--unimodular", o.unimodular, "check unimodularity");
  fan->add_flag("--equal", o.equal, "compare both constructions");
  auto* chow = app.add_subcommand("chow", "Chow ring relations");
  chow->add_flag("--verify", o.verify, "check every relation vanishes in D(L,G)");
  chow->add_option("--base", o.base, "comma separated nested set");
  for (auto* sub : {validate, building_sets, nested, basis, hilbert, groebner, normal, fan, chow}) common(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*building_sets) return cmd_building_sets(o, out);
    if (*nested) return cmd_nested(o, out);
    if (*basis) return cmd_basis(o, out);
    if (*hilbert) return cmd_hilbert(o, out);
    if (*groebner) return cmd_groebner(o, out);
    if (*normal) return cmd_normal_form(o, in, out);
    if (*fan) return cmd_fan(o, out);
    if (*chow) return cmd_chow(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace chowring
