#include <doctest.h>

#include <algorithm>

#include "support/oracles.hpp"
#include "symknot/dt_code.hpp"
#include "symknot/errors.hpp"
#include "symknot/goeritz.hpp"
#include "symknot/planar_diagram.hpp"

using namespace symknot;

TEST_CASE("dt text parsing") {
  DtCode code = parse_dt_text("4,6,2");
  CHECK(code.labels == std::vector<int>{4, 6, 2});
  CHECK(parse_dt_text("4 -6  2").labels == std::vector<int>{4, -6, 2});
  CHECK(print_dt(code) == "4,6,2");
  CHECK_THROWS_AS(parse_dt_text("4,x,2"), Error);
}

TEST_CASE("trefoil and figure-eight realizations") {
  PlanarDiagram trefoil = parse_dt(DtCode{{4, 6, 2}});
  CHECK(trefoil.crossings.size() == 3);
  CHECK(component_count(trefoil) == 1);
  CHECK(determinant_checked(trefoil) == 3);

  PlanarDiagram fig8 = parse_dt(DtCode{{4, 6, 8, 2}});
  CHECK(fig8.crossings.size() == 4);
  CHECK(determinant_checked(fig8) == 5);
}

TEST_CASE("bad permutations are rejected") {
  CHECK_THROWS_WITH_AS(parse_dt(DtCode{}), doctest::Contains("BadPermutation"), Error);
  CHECK_THROWS_AS(parse_dt(DtCode{{4, 4, 2}}), Error);
  CHECK_THROWS_AS(parse_dt(DtCode{{3, 6, 2}}), Error);
  CHECK_THROWS_AS(parse_dt(DtCode{{4, 6, 8}}), Error);
}

TEST_CASE("non-realizable codes raise NotRealizable") {
  // Smallest non-realizable involutions live at five crossings; these are
  // certified by the exhaustive-embedding oracle below.
  for (auto labels : {std::vector<int>{4, 6, 8, 10, 2}, std::vector<int>{4, 8, 2, 10, 6},
                      std::vector<int>{8, 10, 2, 4, 6}}) {
    DtCode code{labels};
    REQUIRE(!oracle::dt_realizable_bruteforce(code));
    CHECK_THROWS_WITH_AS(parse_dt(code), doctest::Contains("NotRealizable"), Error);
  }
}

TEST_CASE("realizability decision agrees with exhaustive embedding, n <= 5") {
  for (int n : {3, 4, 5}) {
    std::vector<int> evens(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) evens[static_cast<std::size_t>(i)] = 2 * (i + 1);
    do {
      DtCode code{evens};
      bool fast = true;
      try {
        parse_dt(code);
      } catch (const Error&) {
        fast = false;
      }
      CHECK(fast == oracle::dt_realizable_bruteforce(code));
    } while (std::next_permutation(evens.begin(), evens.end()));
  }
}

TEST_CASE("signs choose the over strand at the even moment") {
  // Same shadow, different over/under: determinants split 3 vs 1.
  CHECK(determinant_checked(parse_dt(DtCode{{4, 6, 2}})) == 3);
  CHECK(determinant_checked(parse_dt(DtCode{{-4, 6, 2}})) == 1);
}

TEST_CASE("to_dt round trips up to code symmetry") {
  for (auto labels :
       {std::vector<int>{4, 6, 2}, std::vector<int>{4, 6, 8, 2}, std::vector<int>{4, 8, 10, 2, 6},
        std::vector<int>{-4, 6, -2}, std::vector<int>{6, 8, 10, 2, 4}}) {
    DtCode code{labels};
    PlanarDiagram d = parse_dt(code);
    DtCode back = to_dt(d);
    auto variants = oracle::dt_variants(code);
    CHECK(variants.count(back.labels) == 1);
  }
}

TEST_CASE("to_dt handles composite diagrams") {
  PlanarDiagram trefoil = oracle::left_trefoil();
  PlanarDiagram granny = connected_sum(trefoil, 1, trefoil, 1);
  DtCode code = to_dt(granny);
  PlanarDiagram back = parse_dt(code);
  CHECK(determinant_checked(back) == 9);
  CHECK(to_dt(parse_pd("O")).size() == 0);
}

TEST_CASE("to_dt rejects links") {
  CHECK_THROWS_WITH_AS(to_dt(parse_pd("X(1,3,2,4) X(3,1,4,2)")), doctest::Contains("MultiComponent"),
                       Error);
}

TEST_CASE("round trip over every realizable 4-crossing code") {
  std::vector<int> evens = {2, 4, 6, 8};
  do {
    for (unsigned signs = 0; signs < 16; ++signs) {
      std::vector<int> labels = evens;
      for (int i = 0; i < 4; ++i)
        if ((signs >> i) & 1u) labels[static_cast<std::size_t>(i)] *= -1;
      DtCode code{labels};
      PlanarDiagram d;
      try {
        d = parse_dt(code);
      } catch (const Error&) {
        continue;
      }
      CHECK(oracle::dt_variants(code).count(to_dt(d).labels) == 1);
    }
  } while (std::next_permutation(evens.begin(), evens.end()));
}

TEST_CASE("parse_dt is deterministic") {
  DtCode code{{4, 8, 10, 2, 6}};
  CHECK(parse_dt(code) == parse_dt(code));
}
