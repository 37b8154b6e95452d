#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "support/oracles.hpp"
#include "symknot/errors.hpp"
#include "symknot/rational.hpp"
#include "symknot/search.hpp"

using namespace symknot;

namespace {

ReferenceTable tiny_table() {
  return ingest_table_text(
      "name,crossings,determinant,status\n"
      "det1a,11,1,m\ndet1b,12,1,sym\ndet9,12,9,m\ndet25,12,25,m\ndet49,11,49,m\n",
      "test");
}

}  // namespace

TEST_CASE("every hit of a trivial-partial sweep has determinant 1") {
  SymmetricUnionScheme templ = rational_template({1}, 1, 0);
  SearchOptions options;
  SearchReport report = search(templ, {{-3, 3}}, tiny_table(), options);
  CHECK(report.assignments_total == 7);
  CHECK(report.evaluated + report.skipped_multi_component == 7);
  CHECK(!report.rows.empty());
  for (const auto& row : report.rows) {
    CHECK(row.fp.determinant == 1);
    CHECK(row.fp.signature_abs == 0);
    CHECK(std::find(row.candidates.begin(), row.candidates.end(), "det1a") !=
          row.candidates.end());
  }
}

TEST_CASE("trefoil-partial sweeps have determinant 9 and zero signature") {
  SymmetricUnionScheme templ = rational_template({3}, 2, 0);
  SearchReport report = search(templ, {{-2, 2}, {-2, 2}}, tiny_table(), SearchOptions{});
  CHECK(report.assignments_total == 25);
  CHECK(!report.rows.empty());
  for (const auto& row : report.rows) {
    CHECK(row.fp.determinant == 9);
    CHECK(row.fp.signature_abs == 0);
  }
}

TEST_CASE("serial and parallel runs produce identical reports") {
  SymmetricUnionScheme templ = rational_template({3}, 2, 0);
  ReferenceTable table = tiny_table();
  SearchOptions serial;
  SearchOptions parallel;
  parallel.jobs = 8;
  std::string a = report_to_json(search(templ, {{-3, 3}, {-3, 3}}, table, serial));
  std::string b = report_to_json(search(templ, {{-3, 3}, {-3, 3}}, table, parallel));
  std::string c = report_to_json(search(templ, {{-3, 3}, {-3, 3}}, table, serial));
  std::string d = report_to_json(search(templ, {{-3, 3}, {-3, 3}}, table, parallel));
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a == d);
}

TEST_CASE("search is independent of crossing list permutations of the template") {
  SymmetricUnionScheme templ = rational_template({3}, 1, 0);
  SymmetricUnionScheme shuffled = templ;
  std::reverse(shuffled.half_crossings.begin(), shuffled.half_crossings.end());
  ReferenceTable table = tiny_table();
  SearchReport a = search(templ, {{-2, 2}}, table, SearchOptions{});
  SearchReport b = search(shuffled, {{-2, 2}}, table, SearchOptions{});
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].assignment == b.rows[i].assignment);
    CHECK(a.rows[i].fp == b.rows[i].fp);
  }
}

TEST_CASE("rows are lexicographic in the assignment") {
  SymmetricUnionScheme templ = rational_template({3}, 2, 0);
  SearchReport report = search(templ, {{-1, 1}, {-1, 1}}, tiny_table(), SearchOptions{});
  for (std::size_t i = 1; i < report.rows.size(); ++i)
    CHECK(report.rows[i - 1].assignment < report.rows[i].assignment);
}

TEST_CASE("omit_after_found reports each name once") {
  SymmetricUnionScheme templ = rational_template({1}, 1, 0);
  SearchOptions options;
  options.omit_after_found = true;
  SearchReport report = search(templ, {{-3, 3}}, tiny_table(), options);
  std::map<std::string, int> seen;
  for (const auto& row : report.rows)
    for (const auto& name : row.candidates) seen[name] += 1;
  for (const auto& [name, count] : seen) {
    (void)name;
    CHECK(count == 1);
  }
  // Without the flag the same names repeat.
  SearchReport all = search(templ, {{-3, 3}}, tiny_table(), SearchOptions{});
  int hits = 0;
  for (const auto& row : all.rows) hits += static_cast<int>(row.candidates.size());
  CHECK(hits > static_cast<int>(seen.size()));
  CHECK(report.names_found == all.names_found);
}

TEST_CASE("crossing cap and expansion budget produce flagged partial reports") {
  SymmetricUnionScheme templ = rational_template({3}, 1, 0);
  SearchOptions capped;
  capped.max_total_crossings = 7;
  SearchReport report = search(templ, {{-3, 3}}, tiny_table(), capped);
  CHECK(report.skipped_crossing_cap > 0);

  SearchOptions budgeted;
  budgeted.max_expansions = 3;
  SearchReport partial = search(templ, {{-3, 3}}, tiny_table(), budgeted);
  CHECK(partial.partial);
  CHECK(partial.rows.size() <= 3);
}

TEST_CASE("search validates its inputs") {
  SymmetricUnionScheme closed = rational_scheme({3}, {1}, 0);
  CHECK_THROWS_WITH_AS(search(closed, {{-1, 1}}, tiny_table(), SearchOptions{}),
                       doctest::Contains("InvalidScheme"), Error);
  SymmetricUnionScheme templ = rational_template({3}, 2, 0);
  CHECK_THROWS_WITH_AS(search(templ, {{-1, 1}}, tiny_table(), SearchOptions{}),
                       doctest::Contains("ArityMismatch"), Error);
  CHECK_THROWS_AS(search(templ, {{1, -1}, {0, 0}}, tiny_table(), SearchOptions{}), Error);
}

TEST_CASE("candidate filter on the spec's examples") {
  CHECK(candidate_filter(orient(parse_pd("O"))));
  CHECK(!candidate_filter(orient(oracle::left_trefoil())));
  PlanarDiagram square =
      connected_sum(oracle::left_trefoil(), 1, mirror(oracle::left_trefoil()), 4);
  CHECK(candidate_filter(orient(square)));
}

TEST_CASE("text report is stable and lists summary counts") {
  SymmetricUnionScheme templ = rational_template({1}, 1, 0);
  SearchReport report = search(templ, {{-1, 1}}, tiny_table(), SearchOptions{});
  std::string text = report_to_text(report);
  CHECK(text.find("assignments=3") != std::string::npos);
  CHECK(report_to_text(report) == text);
}
