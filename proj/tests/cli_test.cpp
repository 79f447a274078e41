#include <gtest/gtest.h>

#include <sstream>

#include "chowring/cli.hpp"

using namespace chowring;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(CHOWRING_SAMPLES_DIR) + "/" + name; }

}  // namespace

TEST(Cli, HilbertPi3) {
  const Outcome r = run({"hilbert", "pi:3", "--building-set", "maximal", "--method", "enum"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 + t\n");
  EXPECT_EQ(run({"hilbert", "pi:4", "--building-set", "maximal", "--method", "closed"}).out, "1 + 8t + t^2\n");
}

TEST(Cli, HilbertClosedNeedsMaximalAndGeometric) {
  const Outcome minimal = run({"hilbert", "pi:4", "--building-set", "minimal", "--method", "closed"});
  EXPECT_EQ(minimal.code, 2);
  EXPECT_NE(minimal.err.find("maximal"), std::string::npos);
  const Outcome fy = run({"hilbert", "fy", "--building-set", "maximal", "--method", "closed"});
  EXPECT_EQ(fy.code, 2);
  EXPECT_NE(fy.err.find("NotGeometric"), std::string::npos);
}

TEST(Cli, FanEqual) {
  const Outcome r = run({"fan", "pi:3", "--building-set", "maximal", "--equal"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "EQUAL\n");
  EXPECT_EQ(run({"fan", "pi:4", "--unimodular"}).out, "UNIMODULAR\n");
}

TEST(Cli, FanText) {
  const Outcome r = run({"fan", "pi:3", "--building-set", "maximal"});
  EXPECT_EQ(r.out,
            "rays\n  H12 (1,0,0)\n  H13 (0,1,0)\n  H23 (0,0,1)\n  U (1,1,1)\n"
            "cones\n  {H12, U}\n  {H13, U}\n  {H23, U}\n");
  const Outcome stellar = run({"fan", "pi:3", "--building-set", "maximal", "--construction", "stellar", "--order",
                           "U,H23,H13,H12"});
  EXPECT_EQ(stellar.out, r.out);
  const Outcome bad = run({"fan", "pi:3", "--building-set", "maximal", "--construction", "stellar", "--order",
                       "H12,U,H13,H23"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("OrderNotAdmissible"), std::string::npos);
}

TEST(Cli, ValidateNonLattice) {
  const Outcome r = run({"validate", sample("not_a_lattice.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("NotALattice"), std::string::npos);
  EXPECT_NE(r.err.find("'a'"), std::string::npos);
  EXPECT_EQ(run({"validate", sample("fy_y1.json"), "--building-set", "file"}).out,
            "lattice fy with Y1: 7 elements, 3 atoms, atomic\nbuilding set {A1, A2, A3, Y1, U}: valid\n");
  EXPECT_EQ(run({"validate", "missing.json"}).code, 2);
  EXPECT_EQ(run({"validate", "pi:3", "--building-set", "file"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"hilbert"}).code, 2);
  EXPECT_EQ(run({"hilbert", "pi:3", "--method", "guess"}).code, 2);
  EXPECT_EQ(run({"hilbert", "pi:9"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, GroebnerCheckAndShow) {
  const Outcome r = run({"groebner", "pi:3", "--building-set", "maximal", "--check"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "GROEBNER\n");
  const Outcome shown = run({"groebner", "pi:3", "--building-set", "maximal", "--show"});
  EXPECT_NE(shown.out.find("1*x[U]^2\n"), std::string::npos);
  EXPECT_EQ(std::count(shown.out.begin(), shown.out.end(), '\n'), 10);
}

TEST(Cli, NormalForm) {
  EXPECT_EQ(run({"normal-form", "pi:4", "--poly", "x[H123]^2 + x[U]^2"}).out, "0\n");
  EXPECT_EQ(run({"normal-form", "pi:3", "--building-set", "maximal"}, "x[H12]\n").out, "-1*x[U]\n");
  const Outcome bad = run({"normal-form", "pi:3", "--poly", "x[H99]"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("H99"), std::string::npos);
}

TEST(Cli, ChowAndNestedAndBasis) {
  EXPECT_EQ(run({"chow", "fy", "--building-set", "maximal", "--verify"}).out, "VERIFIED\n");
  EXPECT_EQ(run({"chow", "pi:3", "--building-set", "maximal", "--base", "U"}).out,
            "(1,-1,0): 1*x[H12]*x[U] - 1*x[H13]*x[U]\n(1,0,-1): 1*x[H12]*x[U] - 1*x[H23]*x[U]\n");
  EXPECT_EQ(run({"chow", "pi:3", "--building-set", "maximal", "--base", "H12,H13"}).code, 2);
  const Outcome nested = run({"nested", "pi:3", "--building-set", "maximal", "--maximal-only"});
  EXPECT_EQ(nested.out, "dimension 1\ncounts 1 4 3\n{H12, U}\n{H13, U}\n{H23, U}\n");
  EXPECT_EQ(run({"basis", "pi:4"}).out, "x[H123]\nx[H124]\nx[H134]\nx[H234]\nx[U]^2\nx[U]\n1\n");
  EXPECT_EQ(run({"building-sets", "fy"}).out,
            "{A1, A2, A3, U}\n{A1, A2, A3, Y1, U}\n{A1, A2, A3, Y2, U}\n{A1, A2, A3, Y1, Y2, U}\n");
}

TEST(Cli, MachineOutputRoundTrips) {
  auto lat = std::make_shared<const Lattice>(partition_lattice(4));
  for (const char* selector : {"minimal", "maximal"}) {
    const BuildingSet g = std::string(selector) == "minimal" ? BuildingSet::minimal(lat) : BuildingSet::maximal(lat);
    const VariableOrder ord(g);

    const Outcome fan = run({"fan", "pi:4", "--building-set", selector, "--format", "machine"});
    EXPECT_TRUE(fans_equal(fan_from_json(Json::parse(fan.out)), sigma_fan(g)));

    const Outcome series = run({"hilbert", "pi:4", "--building-set", selector, "--format", "machine"});
    EXPECT_EQ(series_from_json(Json::parse(series.out)), hilbert_series_enumerated(g));

    const Outcome basis = run({"basis", "pi:4", "--building-set", selector, "--format", "machine"});
    std::vector<Monomial> parsed;
    const Json basis_json = Json::parse(basis.out);
    for (const auto& m : basis_json["basis"]) parsed.push_back(monomial_from_json(m, ord));
    EXPECT_EQ(parsed, monomial_basis(g, ord));

    const Outcome gb = run({"groebner", "pi:4", "--building-set", selector, "--show", "--format", "machine"});
    std::vector<IntPolynomial> polys;
    const Json gb_json = Json::parse(gb.out);
    for (const auto& p : gb_json["generators"]) polys.push_back(polynomial_from_json(p, ord));
    EXPECT_EQ(polys, groebner_generators(g, ord).polynomials());
  }
}

TEST(Cli, DeterministicOutput) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"fan", "pi:4", "--building-set", "maximal", "--construction", "stellar"},
           {"nested", "generic:4,3"},
           {"groebner", "bool:3", "--building-set", "maximal", "--show", "--format", "machine"},
           {"chow", "pi:4", "--base", "U"}}) {
    const Outcome a = run(args);
    const Outcome b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Cli, StellarEqualFromEitherSide) {
  EXPECT_EQ(run({"fan", "pi:4", "--building-set", "maximal", "--construction", "stellar", "--equal"}).code, 0);
}
