#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "oracles.hpp"
#include "s3color/diagram.hpp"

using namespace s3color;

TEST_CASE("validation accepts the reference diagrams") {
  CHECK(validate(oracle::trefoil_hand()).empty());
  CHECK(validate(oracle::hopf_hand()).empty());
  CHECK(validate(oracle::split_hand()).empty());
  CHECK(validate(oracle::curl_hand()).empty());
  CHECK(validate(oracle::curl_with_loop_hand()).empty());
  CHECK(validate(Diagram{}).empty());  // empty diagram is fine
}

TEST_CASE("validation reports structural problems") {
  Diagram d = oracle::trefoil_hand();
  d.num_arcs = 4;  // arc 3 never passes under
  CHECK_FALSE(validate(d).empty());

  d = oracle::trefoil_hand();
  d.crossings[0].over = 7;
  auto msgs = validate(d);
  REQUIRE_FALSE(msgs.empty());
  CHECK(msgs.front().find("out of range") != std::string::npos);

  d = oracle::trefoil_hand();
  d.crossings[0].sign = 2;
  CHECK_FALSE(validate(d).empty());

  d = oracle::trefoil_hand();
  d.crossings[1].under_in = 1;  // arc 1 twice, arc 2 never
  CHECK_FALSE(validate(d).empty());

  d = oracle::trefoil_hand();
  d.free_loops = -1;
  CHECK_FALSE(validate(d).empty());

  d = oracle::trefoil_hand();
  d.crossings.pop_back();  // arc count no longer matches
  CHECK_FALSE(validate(d).empty());
}

TEST_CASE("color slots include free loops") {
  CHECK(oracle::trefoil_hand().color_slots() == 3);
  CHECK(oracle::curl_with_loop_hand().color_slots() == 2);
}

TEST_CASE("components") {
  Components tre = components(oracle::trefoil_hand());
  CHECK(tre.num_arc_components == 1);
  CHECK(tre.total() == 1);
  CHECK(tre.arc_component == std::vector<int>{0, 0, 0});

  Components hopf = components(oracle::hopf_hand());
  CHECK(hopf.num_arc_components == 2);
  CHECK(hopf.arc_component == std::vector<int>{0, 1});

  Components split = components(oracle::split_hand());
  CHECK(split.num_arc_components == 2);
  CHECK(split.arc_component == std::vector<int>{0, 1, 1});

  Components loop = components(oracle::curl_with_loop_hand());
  CHECK(loop.num_arc_components == 1);
  CHECK(loop.free_loops == 1);
  CHECK(loop.total() == 2);

  Diagram bad = oracle::trefoil_hand();
  bad.crossings[0].over = 9;
  CHECK_THROWS_AS(components(bad), std::invalid_argument);
}

TEST_CASE("under-arc propagation primitive") {
  CHECK(under_color(+1, S3::st, S3::sts) == S3::s);
  CHECK(under_color(-1, S3::st, S3::sts) == S3::t);
  CHECK(under_color(+1, S3::s, S3::st) == S3::ts);
  for (S3 x : kColors)
    for (S3 y : kColors) {
      // the two signs are inverse operations on the under colors
      CHECK(under_color(-1, x, under_color(+1, x, y)) == y);
      CHECK(under_color(+1, x, under_color(-1, x, y)) == y);
      CHECK(under_color(+1, x, y) == conjugate(x, y));
    }
  CHECK_THROWS_AS(under_color(+1, S3::e, S3::s), std::invalid_argument);
  CHECK_THROWS_AS(under_color(+1, S3::s, S3::e), std::invalid_argument);
  CHECK_THROWS_AS(under_color(0, S3::s, S3::t), std::invalid_argument);
}

TEST_CASE("linking number") {
  CHECK(linking_number(oracle::hopf_hand()) == 1);

  Diagram neg = oracle::hopf_hand();
  neg.crossings[0].sign = -1;
  neg.crossings[1].sign = -1;
  CHECK(linking_number(neg) == -1);

  // the split pair crosses only in the cancelling slide pair
  CHECK(linking_number(oracle::split_hand()) == 0);

  // defined only for diagrams with exactly two closed-strand components
  CHECK_THROWS_AS(linking_number(oracle::trefoil_hand()),
                  std::invalid_argument);
  CHECK_THROWS_AS(linking_number(oracle::curl_with_loop_hand()),
                  std::invalid_argument);
}
