#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <stdexcept>

#include "oracles.hpp"
#include "s3color/notation.hpp"
#include "s3color/solver.hpp"

using namespace s3color;

TEST_CASE("family grammar accepts the documented forms") {
  FamilySpec c = parse_family("C(2,4,-2)");
  CHECK(c.kind == FamilySpec::Kind::Plat);
  CHECK(c.entries == std::vector<int>{2, 4, -2});

  FamilySpec j = parse_family("J(3,5)");
  CHECK(j.kind == FamilySpec::Kind::DoubleTwist);
  CHECK(j.entries == std::vector<int>{3, 5});

  FamilySpec t = parse_family("T(2,12)");
  CHECK(t.kind == FamilySpec::Kind::Torus2);
  CHECK(t.entries == std::vector<int>{2, 12});

  // whitespace-insensitive, explicit plus signs allowed
  CHECK(parse_family("  C ( +2 ,\t4 , -2 )  ").entries ==
        std::vector<int>{2, 4, -2});
  CHECK(parse_family("C(7)").entries == std::vector<int>{7});
}

TEST_CASE("family grammar rejects malformed input with positions") {
  CHECK_THROWS_AS(parse_family(""), ParseError);
  CHECK_THROWS_AS(parse_family("K(2)"), ParseError);
  CHECK_THROWS_AS(parse_family("C()"), ParseError);
  CHECK_THROWS_AS(parse_family("C(2,)"), ParseError);
  CHECK_THROWS_AS(parse_family("C(2"), ParseError);
  CHECK_THROWS_AS(parse_family("C(2) x"), ParseError);
  CHECK_THROWS_AS(parse_family("C(2,0,2)"), ParseError);
  CHECK_THROWS_AS(parse_family("J(3)"), ParseError);
  CHECK_THROWS_AS(parse_family("J(3,5,7)"), ParseError);
  CHECK_THROWS_AS(parse_family("J(0,5)"), ParseError);
  CHECK_THROWS_AS(parse_family("T(3,5)"), ParseError);
  CHECK_THROWS_AS(parse_family("T(2)"), ParseError);
  CHECK_THROWS_AS(parse_family("T(2,0)"), ParseError);

  try {
    parse_family("C(2,0,2)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position 5") != std::string::npos);
  }
  try {
    parse_family("T(3,5)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
}

TEST_CASE("generated family diagrams are structurally sound") {
  for (auto& entries : std::vector<std::vector<int>>{
           {2}, {3}, {4}, {-3}, {2, 2}, {1, 1}, {3, 5}, {2, 2, 2},
           {2, -2, 2}, {3, 1, 3}, {-2, 4, -2}}) {
    Diagram d = plat_diagram(entries);
    CHECK(validate(d).empty());
    int total = 0;
    for (int e : entries) total += std::abs(e);
    CHECK(static_cast<int>(d.crossings.size()) == total);
    CHECK(d.num_arcs == total);
    CHECK(d.free_loops == 0);
    // crossing signs follow the entry signs, |entries| of each
    int pos = 0;
    for (const Crossing& cr : d.crossings) pos += cr.sign > 0;
    int expect_pos = 0;
    for (int e : entries) expect_pos += e > 0 ? e : 0;
    CHECK(pos == expect_pos);
  }
}

TEST_CASE("component counts of generated diagrams") {
  CHECK(components(plat_diagram({2})).num_arc_components == 2);
  CHECK(components(plat_diagram({3})).num_arc_components == 1);
  CHECK(components(plat_diagram({4})).num_arc_components == 2);
  CHECK(components(plat_diagram({1, 1})).num_arc_components == 2);
  CHECK(components(plat_diagram({2, 2})).num_arc_components == 1);
  CHECK(components(plat_diagram({3, 5})).num_arc_components == 2);
  CHECK(components(plat_diagram({2, 2, 2})).num_arc_components == 2);
  // all-even twist vectors always close into two components
  for (auto& entries : std::vector<std::vector<int>>{
           {2}, {6}, {-4}, {2, 2, 2}, {4, -2, 2}, {2, 2, 2, 2, 2},
           {6, 2, -4}, {-2, -2, -2}})
    CHECK(components(plat_diagram(entries)).num_arc_components == 2);
}

TEST_CASE("generator rejects impossible inputs") {
  CHECK_THROWS_AS(plat_diagram({}), std::invalid_argument);
  CHECK_THROWS_AS(plat_diagram({2, 0}), std::invalid_argument);
  // cancelling twist pair leaves a strand that never goes under
  CHECK_THROWS_AS(plat_diagram({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(torus2_diagram(0), std::invalid_argument);
  CHECK_THROWS_AS(double_twist_diagram(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(double_twist_diagram(3, 0), std::invalid_argument);
}

TEST_CASE("continued-fraction determinant oracle pins the construction") {
  for (auto& entries : std::vector<std::vector<int>>{
           {2}, {3}, {4}, {5}, {7}, {-3}, {2, 2}, {-2, 2}, {2, -2},
           {3, 3}, {1, 3}, {3, 1}, {3, 5}, {5, 5}, {7, 3}, {2, 2, 2},
           {2, -2, 2}, {3, 1, 3}, {2, 4, 2}, {1, 2, 3}}) {
    CAPTURE(entries);
    CHECK(determinant(plat_diagram(entries)) == oracle::cf_numerator(entries));
  }
}

TEST_CASE("family wrappers agree with the plat generator") {
  CHECK(torus2_diagram(4) == plat_diagram({4}));
  CHECK(torus2_diagram(-3) == plat_diagram({-3}));
  CHECK(double_twist_diagram(3, 5) == plat_diagram({3, 5}));
  CHECK(make_diagram(parse_family("T(2,4)")) == plat_diagram({4}));
  CHECK(make_diagram(parse_family("J(3,5)")) == plat_diagram({3, 5}));
  CHECK(make_diagram(parse_family("C(2,2)")) == plat_diagram({2, 2}));
}

TEST_CASE("plat seeds name the two west arcs of the innermost box") {
  PlatBuild pb = build_plat({4});
  CHECK(pb.left_upper_arc >= 0);
  CHECK(pb.left_lower_arc >= 0);
  CHECK(pb.left_upper_arc < pb.diagram.num_arcs);
  CHECK(pb.left_lower_arc < pb.diagram.num_arcs);
  CHECK(pb.left_upper_arc != pb.left_lower_arc);
  // the two seed arcs sit on different components of the even-entry plats
  Components comp = components(pb.diagram);
  CHECK(comp.arc_component[pb.left_upper_arc] !=
        comp.arc_component[pb.left_lower_arc]);
}

TEST_CASE("diagram file format round trip") {
  std::string hopf_text = "arcs 2\nx + 0 1 1\nx + 1 0 0\n";
  CHECK(emit_diagram(oracle::hopf_hand()) == hopf_text);
  CHECK(parse_diagram(hopf_text) == oracle::hopf_hand());

  for (const Diagram& d :
       {oracle::trefoil_hand(), oracle::split_hand(), oracle::curl_hand(),
        oracle::curl_with_loop_hand(), plat_diagram({3, 5}),
        plat_diagram({2, -2, 2})}) {
    CHECK(parse_diagram(emit_diagram(d)) == d);
  }

  // comments, blank lines, and loops
  Diagram d = parse_diagram(
      "# a curl with a detached circle\n"
      "arcs 1\n"
      "loops 1\n"
      "\n"
      "x + 0 0 0   # the curl\n");
  CHECK(d == oracle::curl_with_loop_hand());
}

TEST_CASE("diagram file format errors") {
  CHECK_THROWS_AS(parse_diagram(""), ParseError);
  CHECK_THROWS_AS(parse_diagram("x + 0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("arcs -1\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("arcs 1\narcs 1\nx + 0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("arcs 1\nx * 0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("arcs 1\nx + 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("arcs 1\nx + 0 0 0 9\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("arcs 1\nx + 0 0 0\nloops 1\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("arcs 1\nwat\n"), ParseError);
  // structurally invalid: arc 0 never passes under
  CHECK_THROWS_AS(parse_diagram("arcs 2\nx + 0 1 1\n"), ParseError);
  try {
    parse_diagram("arcs 1\nx + 0 2 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("out of range") != std::string::npos);
  }
}
