#include <doctest.h>

#include "support/oracles.hpp"
#include "symknot/bracket.hpp"
#include "symknot/errors.hpp"
#include "symknot/goeritz.hpp"
#include "symknot/rational.hpp"
#include "symknot/scheme.hpp"

using namespace symknot;

namespace {

// The paper's simplest det-1 scheme: a bare strand with one axis twist.
SymmetricUnionScheme bare_strand_scheme(int t) {
  SymmetricUnionScheme s;
  s.half_arcs = {HalfArc{1, 2}, HalfArc{3, 4}};
  s.axis.push_back(AxisItem{AxisItem::Kind::Transversal, 1, 0, 0, 0});
  AxisItem twist;
  twist.kind = AxisItem::Kind::Twist;
  twist.slot = 1;
  twist.upper = 2;
  twist.lower = 3;
  s.axis.push_back(twist);
  s.axis.push_back(AxisItem{AxisItem::Kind::Transversal, 4, 0, 0, 0});
  s.assignment[1] = t;
  return s;
}

}  // namespace

TEST_CASE("scheme validation catches structural defects") {
  SymmetricUnionScheme ok = bare_strand_scheme(1);
  validate_scheme(ok);

  SymmetricUnionScheme one_transversal = ok;
  one_transversal.axis.pop_back();
  CHECK_THROWS_WITH_AS(validate_scheme(one_transversal), doctest::Contains("InvalidScheme"), Error);

  SymmetricUnionScheme repeated_port = ok;
  repeated_port.axis[2].port = 1;
  CHECK_THROWS_AS(validate_scheme(repeated_port), Error);

  SymmetricUnionScheme missing_assignment = ok;
  missing_assignment.assignment.clear();
  CHECK_THROWS_AS(validate_scheme(missing_assignment), Error);

  SymmetricUnionScheme closed_arc = ok;
  closed_arc.half_arcs.push_back(HalfArc{9, 9});
  CHECK_THROWS_AS(validate_scheme(closed_arc), Error);

  SymmetricUnionScheme unknown_slot = ok;
  unknown_slot.assignment[7] = 1;
  CHECK_THROWS_AS(validate_scheme(unknown_slot), Error);
}

TEST_CASE("trefoil scheme expands to the square-determinant union") {
  SymmetricUnionScheme s = rational_scheme({3}, {}, 0);
  PlanarDiagram full = expand(s);
  CHECK(full.crossings.size() == 6);
  CHECK(component_count(full) == 1);
  CHECK(determinant_checked(full) == 9);
  CHECK(determinant_checked(partial_knot(s)) == 3);
}

TEST_CASE("bare strand with one half-twist expands to the one-crossing unknot") {
  SymmetricUnionScheme s = bare_strand_scheme(1);
  PlanarDiagram d = expand(s);
  CHECK(d.crossings.size() == 1);
  CHECK(component_count(d) == 1);
  CHECK(determinant_checked(d) == 1);
  CHECK(determinant_checked(partial_knot(s)) == 1);
}

TEST_CASE("admissible halves expand to knots for every twist parity") {
  for (int t = -3; t <= 3; ++t) {
    PlanarDiagram d = expand(bare_strand_scheme(t));
    CHECK(static_cast<int>(d.crossings.size()) == std::abs(t));
    CHECK(component_count(d) == 1);
  }
}

TEST_CASE("zero twists mean straight joins") {
  SymmetricUnionScheme s = bare_strand_scheme(0);
  PlanarDiagram d = expand(s);
  CHECK(d.crossings.empty());
  CHECK(component_count(d) == 1);  // one circle running down both sides
}

TEST_CASE("inadmissible halves can expand to multi-component diagrams") {
  // Crossed wiring: the half closes to two circles, and the expansion is a
  // 1-crossing diagram plus a free loop. Representable, flagged by callers.
  SymmetricUnionScheme s = bare_strand_scheme(1);
  s.half_arcs = {HalfArc{1, 4}, HalfArc{3, 2}};
  PlanarDiagram d = expand(s);
  CHECK(component_count(d) == 2);
}

TEST_CASE("crossing accounting") {
  // A 7-crossing half with five axis crossings gives 19 in total.
  SymmetricUnionScheme s = rational_scheme({3, 2, 2}, {3, -2}, 0);
  CHECK(s.half_crossings.size() == 7);
  CHECK(total_crossings(s) == 19);
  CHECK(static_cast<int>(expand(s).crossings.size()) == 19);

  SymmetricUnionScheme no_twists = rational_scheme({3, 2}, {}, 0);
  CHECK(total_crossings(no_twists) == 2 * 5);

  CHECK(total_crossings(bare_strand_scheme(-3)) == 3);
}

TEST_CASE("doubling twist magnitudes adds the magnitude sum") {
  SymmetricUnionScheme s = rational_scheme({3}, {2, -1}, 0);
  SymmetricUnionScheme doubled = rational_scheme({3}, {4, -2}, 0);
  CHECK(total_crossings(doubled) == total_crossings(s) + 3);
}

TEST_CASE("partial knot ignores the assignment") {
  SymmetricUnionScheme a = rational_scheme({3, 2}, {1, -1}, 0);
  SymmetricUnionScheme b = rational_scheme({3, 2}, {3, 0}, 0);
  CHECK(partial_knot(a) == partial_knot(b));
}

TEST_CASE("multi-component halves are rejected by partial_knot") {
  SymmetricUnionScheme s = bare_strand_scheme(1);
  // Break the arc wiring so the closure has two components.
  s.half_arcs = {HalfArc{1, 4}, HalfArc{3, 2}};
  CHECK_THROWS_WITH_AS(partial_knot(s), doctest::Contains("MultiComponent"), Error);
}

TEST_CASE("template instantiation and arity") {
  SymmetricUnionScheme templ = rational_template({3, 2}, 3, 0);
  CHECK(templ.is_template());
  SymmetricUnionScheme s = instantiate_template(templ, {1, -1, 1});
  CHECK(total_crossings(s) == 10 + 3);
  CHECK_THROWS_WITH_AS(instantiate_template(rational_template({3}, 2, 0), {1, -1, 1}),
                       doctest::Contains("ArityMismatch"), Error);
  // expand refuses uninstantiated templates
  CHECK_THROWS_AS(expand(templ), Error);
}

TEST_CASE("all-zero parameters reproduce the K # mirror-K invariants") {
  SymmetricUnionScheme templ = rational_template({3, 2}, 2, 0);
  SymmetricUnionScheme s = instantiate_template(templ, {0, 0});
  PlanarDiagram d = expand(s);
  REQUIRE(component_count(d) == 1);
  CHECK(determinant_checked(d) == 49);
  PlanarDiagram trefoil_like = partial_knot(s);
  PlanarDiagram sum = connected_sum(trefoil_like, 1, mirror(trefoil_like), 1);
  CHECK(jones_canonical(jones(d)) == jones_canonical(jones(sum)));
}

TEST_CASE("scheme JSON round trip") {
  SymmetricUnionScheme s = rational_scheme({3, 2}, {1, -1}, 0);
  SymmetricUnionScheme back = scheme_from_json(scheme_to_json(s));
  CHECK(back.half_crossings == s.half_crossings);
  CHECK(back.assignment == s.assignment);
  CHECK(expand(back) == expand(s));

  SymmetricUnionScheme templ = rational_template({3}, 2, 0);
  SymmetricUnionScheme back_templ = scheme_from_json(scheme_to_json(templ));
  CHECK(back_templ.open_slots == templ.open_slots);

  CHECK_THROWS_AS(scheme_from_json("{"), Error);
  CHECK_THROWS_AS(scheme_from_json("{\"half\": [[1,2,3]], \"axis\": []}"), Error);
}

TEST_CASE("port reflection mirrors the expansion") {
  // Crossing-switching the half and negating the twists yields the mirror
  // image of the expansion, exactly at the Jones level.
  SymmetricUnionScheme s = rational_scheme({3, 2}, {2, -1}, 0);
  SymmetricUnionScheme reflected = s;
  for (auto& c : reflected.half_crossings) c = Crossing{{c[1], c[2], c[3], c[0]}};
  for (auto& [slot, t] : reflected.assignment) t = -t;
  PlanarDiagram d = expand(s);
  PlanarDiagram rd = expand(reflected);
  REQUIRE(component_count(d) == 1);
  CHECK(jones(rd) == jones(mirror(d)));
}

TEST_CASE("determinant square law on the generated corpus") {
  auto corpus = oracle::scheme_corpus(20);
  REQUIRE(corpus.size() == 20);
  for (const auto& s : corpus) {
    PlanarDiagram full = expand(s);
    REQUIRE(component_count(full) == 1);
    Int partial_det = determinant_int(partial_knot(s));
    CHECK(determinant_int(full) == partial_det * partial_det);
    CHECK(static_cast<int>(full.crossings.size()) == total_crossings(s));
  }
}
