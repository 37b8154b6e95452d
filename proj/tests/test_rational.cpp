#include <doctest.h>

#include "support/oracles.hpp"
#include "symknot/errors.hpp"
#include "symknot/goeritz.hpp"
#include "symknot/rational.hpp"
#include "symknot/scheme.hpp"

using namespace symknot;

TEST_CASE("continued-fraction determinants of the spec examples") {
  CHECK(determinant_checked(rational_knot({3})) == 3);
  CHECK(determinant_checked(rational_knot({2, 2})) == 5);   // 2 + 1/2 = 5/2
  CHECK(determinant_checked(rational_knot({3, 2})) == 7);   // the 5_2 partial
  CHECK(determinant_checked(rational_knot({1, 1, 1})) == 3);
  CHECK(determinant_checked(rational_knot({4, 3})) == 13);
  CHECK(determinant_checked(rational_knot({2, 1, 1})) == 5);
}

TEST_CASE("negative entries flip the fraction sign but not the determinant law") {
  CHECK(determinant_checked(rational_knot({-3})) == 3);
  CHECK(Int(determinant_checked(rational_knot({2, -3}))) == oracle::continuant({2, -3}));
  CHECK(Int(determinant_checked(rational_knot({-2, -2}))) == oracle::continuant({-2, -2}));
}

TEST_CASE("even numerators are links, not knots") {
  CHECK_THROWS_WITH_AS(rational_knot({2}), doctest::Contains("NotAKnot"), Error);
  CHECK_THROWS_AS(rational_knot({4}), Error);
  CHECK_THROWS_AS(rational_knot({2, 2, 2}), Error);  // 12/5
}

TEST_CASE("zero entries are rejected") {
  CHECK_THROWS_AS(rational_knot({3, 0}), Error);
  CHECK_THROWS_AS(rational_knot({}), Error);
}

TEST_CASE("determinant equals the continuant for short vectors") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int c = 1; c <= 4; ++c) {
        std::vector<int> conway{a, b, c};
        Int numerator = oracle::continuant(conway);
        if (numerator % 2 == 0) {
          CHECK_THROWS_AS(rational_knot(conway), Error);
        } else {
          CHECK(Int(determinant_checked(rational_knot(conway))) == numerator);
        }
      }
}

TEST_CASE("rational arcs close back to the knot") {
  for (auto conway : {std::vector<int>{3}, std::vector<int>{2, 2}, std::vector<int>{3, 1, 2}}) {
    RationalArc arc = rational_arc(conway);
    SymmetricUnionScheme s;
    s.half_crossings = arc.crossings;
    s.half_arcs = arc.arcs;
    s.axis.push_back(AxisItem{AxisItem::Kind::Transversal, arc.port_a, 0, 0, 0});
    s.axis.push_back(AxisItem{AxisItem::Kind::Transversal, arc.port_b, 0, 0, 0});
    CHECK(determinant_int(partial_knot(s)) == determinant_int(rational_knot(conway)));
  }
}

TEST_CASE("rational arc of the trivial vector is a bare strand") {
  RationalArc arc = rational_arc({1});
  CHECK(arc.crossings.size() == 1);  // one reducible crossing
  CHECK(arc.arcs.empty());
}

TEST_CASE("rational schemes have the requested twist slots in axis order") {
  SymmetricUnionScheme s = rational_scheme({3, 2}, {1, -2, 3}, 0);
  int twists = 0;
  std::vector<int> slot_order;
  for (const auto& item : s.axis)
    if (item.kind == AxisItem::Kind::Twist) {
      ++twists;
      slot_order.push_back(item.slot);
    }
  CHECK(twists == 3);
  CHECK(slot_order == std::vector<int>{1, 2, 3});
  CHECK(s.assignment.at(1) == 1);
  CHECK(s.assignment.at(2) == -2);
  CHECK(s.assignment.at(3) == 3);
}

TEST_CASE("cut variants give different schemes for the same partial") {
  SymmetricUnionScheme a = rational_scheme({3, 2}, {1}, 0);
  SymmetricUnionScheme b = rational_scheme({3, 2}, {1}, 1);
  CHECK(determinant_int(partial_knot(a)) == determinant_int(partial_knot(b)));
  PlanarDiagram da = expand(a), db = expand(b);
  if (component_count(da) == 1 && component_count(db) == 1)
    CHECK(determinant_int(da) == determinant_int(db));
}
