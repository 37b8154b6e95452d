#include <doctest.h>

#include <map>
#include <set>

#include "support/oracles.hpp"
#include "symknot/errors.hpp"
#include "symknot/fingerprint.hpp"
#include "symknot/goeritz.hpp"
#include "symknot/knotoid.hpp"
#include "symknot/rational.hpp"

using namespace symknot;

namespace {

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

TEST_CASE("knotoid text round trip") {
  KnotoidDiagram k = knotoid_from_text("O1+ U2+ O3+ U1+ O2+ U3+ @2:+1 @5:-2");
  CHECK(k.passes.size() == 6);
  CHECK(k.decorations.at(2) == 1);
  CHECK(k.decorations.at(5) == -2);
  CHECK(knotoid_from_text(knotoid_to_text(k)) == k);
  CHECK(knotoid_from_text("").passes.empty());
}

TEST_CASE("knotoid structural validation") {
  CHECK_THROWS_WITH_AS(knotoid_from_text("O1+ O1+ U1+ U1+"), doctest::Contains("MalformedKnotoid"),
                       Error);
  CHECK_THROWS_AS(knotoid_from_text("O1+ U1-"), Error);      // sign mismatch
  CHECK_THROWS_AS(knotoid_from_text("O1+"), Error);          // visited once
  CHECK_THROWS_AS(knotoid_from_text("O1+ U1+ @7:1"), Error); // gap out of range
  CHECK_THROWS_AS(knotoid_from_text("Q1+"), Error);
  CHECK_THROWS_AS(knotoid_from_text("O1"), Error);
}

TEST_CASE("realizability of small codes") {
  CHECK(is_realizable(knotoid_from_text("")));
  CHECK(is_realizable(knotoid_from_text("O1+ U1+")));
  // The open trefoil arc embeds.
  CHECK(is_realizable(knotoid_from_text("O1+ U2+ O3+ U1+ O2+ U3+")));
  // Interlaced pair with equal signs: the forced rotation system has genus 1.
  CHECK(!is_realizable(knotoid_from_text("O1+ O2+ U1+ U2+")));
  CHECK(!is_realizable(knotoid_from_text("O1- O2- U1- U2-")));
  // Opposite signs embed (a spiral).
  CHECK(is_realizable(knotoid_from_text("O1+ O2- U1+ U2-")));
}

TEST_CASE("knotoids produced from schemes are always realizable") {
  for (const auto& s : oracle::scheme_corpus(12)) {
    CHECK(is_realizable(scheme_to_knotoid(s, FoldSide::Down)));
    CHECK(is_realizable(scheme_to_knotoid(s, FoldSide::Up)));
  }
}

TEST_CASE("no twist regions give an undecorated arc") {
  SymmetricUnionScheme s = rational_scheme({3}, {}, 0);
  KnotoidDiagram k = scheme_to_knotoid(s, FoldSide::Down);
  CHECK(k.decorations.empty());
  CHECK(k.passes.size() == 2 * s.half_crossings.size());
  // Closing the arc back up recovers the partial knot.
  SymmetricUnionScheme rebuilt = knotoid_to_scheme(k);
  CHECK(determinant_int(partial_knot(rebuilt)) == 3);
}

TEST_CASE("bare strand with one twist gives the spec's tiny knotoid") {
  KnotoidDiagram k = scheme_to_knotoid(bare_strand_scheme(2), FoldSide::Down);
  CHECK(k.passes.empty());
  CHECK(k.decorations == std::map<int, int>{{0, 2}});
}

TEST_CASE("decoration values carry the assignment multiset on both sides") {
  for (const auto& s : oracle::scheme_corpus(12)) {
    std::multiset<int> expected;
    for (const auto& [slot, t] : s.assignment) expected.insert(t);
    for (FoldSide side : {FoldSide::Down, FoldSide::Up}) {
      KnotoidDiagram k = scheme_to_knotoid(s, side);
      std::multiset<int> got;
      for (const auto& [gap, t] : k.decorations) got.insert(t);
      CHECK(got == expected);
    }
  }
}

TEST_CASE("fold sides switch every crossing") {
  SymmetricUnionScheme s = rational_scheme({3, 2}, {1}, 0);
  KnotoidDiagram down = scheme_to_knotoid(s, FoldSide::Down);
  KnotoidDiagram up = scheme_to_knotoid(s, FoldSide::Up);
  REQUIRE(down.passes.size() == up.passes.size());
  for (std::size_t i = 0; i < down.passes.size(); ++i) {
    CHECK(down.passes[i].crossing == up.passes[i].crossing);
    CHECK(down.passes[i].layer != up.passes[i].layer);
    CHECK(down.passes[i].sign == -up.passes[i].sign);
  }
  CHECK(down.decorations == up.decorations);
}

TEST_CASE("empty knotoid reconstructs the unknot scheme") {
  SymmetricUnionScheme s = knotoid_to_scheme(KnotoidDiagram{});
  PlanarDiagram d = expand(s);
  CHECK(component_count(d) == 1);
  InvariantFingerprint fp = fingerprint(d);
  CHECK(fp.determinant == 1);
  CHECK(fp.jones_canon.is_one());
}

TEST_CASE("round trips preserve the expansion fingerprint") {
  for (const auto& s : oracle::scheme_corpus(12)) {
    PlanarDiagram full = expand(s);
    InvariantFingerprint fp = fingerprint(full);

    KnotoidDiagram down = scheme_to_knotoid(s, FoldSide::Down);
    SymmetricUnionScheme rebuilt = knotoid_to_scheme(down);
    CHECK(fingerprint(expand(rebuilt)) == fp);
    // The rebuilt scheme folds back down to the same code.
    CHECK(scheme_to_knotoid(rebuilt, FoldSide::Down) == down);

    KnotoidDiagram up = scheme_to_knotoid(s, FoldSide::Up);
    CHECK(fingerprint(expand(knotoid_to_scheme(up))) == fp);
  }
}

TEST_CASE("merge sums decorations across underpassing runs only") {
  KnotoidDiagram k = knotoid_from_text("O1+ U2+ U1+ O2+ @1:+1 @2:+1");
  KnotoidDiagram merged = merge_underpass_decorations(k);
  CHECK(merged.decorations == std::map<int, int>{{1, 2}});

  KnotoidDiagram blocked = knotoid_from_text("O1+ U2+ U1+ O2+ @0:+1 @1:+1");
  // Gap 0 and gap 1 are separated by an over-pass: nothing merges.
  CHECK(merge_underpass_decorations(blocked).decorations == blocked.decorations);

  KnotoidDiagram untouched = knotoid_from_text("O1+ U2+ O2+ U1+");
  CHECK(merge_underpass_decorations(untouched) == untouched);
}

TEST_CASE("merging preserves the expansion fingerprint") {
  int merged_cases = 0;
  for (const auto& s : oracle::scheme_corpus(16)) {
    PlanarDiagram full = expand(s);
    InvariantFingerprint fp = fingerprint(full);
    KnotoidDiagram down = scheme_to_knotoid(s, FoldSide::Down);
    KnotoidDiagram merged = merge_underpass_decorations(down);
    if (!(merged == down)) ++merged_cases;
    CHECK(fingerprint(expand(knotoid_to_scheme(merged))) == fp);
  }
  (void)merged_cases;
}

TEST_CASE("reconstruction errors") {
  CHECK_THROWS_WITH_AS(knotoid_to_scheme(knotoid_from_text("O1+ O2+ U1+ U2+")),
                       doctest::Contains("NotRealizable"), Error);
}
