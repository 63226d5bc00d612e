#include <doctest.h>

#include "support.hpp"
#include "yaxl/constructions.hpp"
#include "yaxl/enumerate.hpp"
#include "yaxl/error.hpp"
#include "yaxl/io.hpp"
#include "yaxl/shelves.hpp"

using namespace yaxl;

TEST_CASE("format detection") {
  CHECK(detect_format("# comment\n  {\"n\": 1}") == Format::json);
  CHECK(detect_format("2\n0 1\n0 1\n") == Format::text);
  CHECK(parse_format("json") == Format::json);
  CHECK_FALSE(parse_format("yaml"));
}

TEST_CASE("magma round trips") {
  for (Magma const& m : {dihedral_quandle(3), fixture::magma("ds_without_conditions4.txt"), trivial_shelf(1)}) {
    for (Format f : {Format::text, Format::json}) {
      CHECK(parse_magma(write_magma(m, f), f) == m);
    }
  }
}

TEST_CASE("magma streams") {
  EnumerationSpec s;
  s.n      = 3;
  s.cls    = StructureClass::quasi_rack;
  s.stream = true;
  auto items = enumerate(s).items;
  CHECK(parse_magma_stream(write_magma_stream(items)) == items);
  CHECK(parse_magma_stream("# header\n").empty());
}

TEST_CASE("solution round trips") {
  SolutionTable ly = fixture::solution("lyubashenko3.txt");
  for (Format f : {Format::text, Format::json}) {
    CHECK(parse_solution(write_solution(ly, f), f) == ly);
  }
  CHECK(ly(0, 0) == std::pair<Point, Point>{0, 1});
  CHECK(ly(2, 1) == std::pair<Point, Point>{1, 2});
}

TEST_CASE("twist round trip") {
  TwistFamily t(dihedral_quandle(3), std::vector<FnMap>(3, FnMap({0, 2, 1})));
  TwistFamily u = parse_twist(write_twist(t));
  CHECK(u.base() == t.base());
  CHECK(u.phis() == t.phis());
}

TEST_CASE("system round trips") {
  auto p = parse_system(fixture::text("chain_sum.json"), "fibers");
  CHECK(p.fibers.size() == 2);
  auto q = parse_system(write_system(p, "fibers"), "fibers");
  CHECK(q.semilattice == p.semilattice);
  CHECK(q.fibers == p.fibers);
  CHECK(q.homs == p.homs);

  auto g = parse_system(fixture::text("clifford_chain.json"), "groups");
  CHECK(parse_system(write_system(g, "groups"), "groups").fibers == g.fibers);
}

TEST_CASE("weak brace round trip") {
  WeakBraceTable b = trivial_weak_brace(CliffordTable(fixture::magma("clifford4.txt")));
  WeakBraceTable c = parse_weak_brace(write_weak_brace(b));
  CHECK(c.add == b.add);
  CHECK(c.mul == b.mul);
}

TEST_CASE("provenance keys are ignored") {
  std::string j = R"({"provenance": {"tool": "yaxl"}, "n": 2, "table": [[0,1],[0,1]]})";
  CHECK(parse_magma(j, Format::json) == trivial_shelf(2));
  std::string t = "# yaxl 0.1.0 input-fnv1a64=0000000000000000 seed=none\n2\n0 1\n0 1\n";
  CHECK(parse_magma(t, Format::text) == trivial_shelf(2));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_magma("2\n0 1\n0 x\n", Format::text);
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_magma("2\n0 1\n", Format::text), ParseError);
  CHECK_THROWS_AS(parse_magma("2\n0 1\n0 2\n", Format::text), InputError);
  CHECK_THROWS_AS(parse_magma("{\"n\": 2, \"table\": [[0,1]]}", Format::json), InputError);
  CHECK_THROWS_AS(parse_magma("{\"n\": 2,", Format::json), InputError);
  CHECK_THROWS_AS(parse_solution("2\n0 1\n0 1\n", Format::text), ParseError);
  CHECK_THROWS_AS(read_file("/nonexistent/yaxl"), InputError);
}

TEST_CASE("fnv1a64") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("fnmap lines") {
  FnMap f = parse_fnmap("2 0 1");
  CHECK(f == FnMap({2, 0, 1}));
  CHECK(parse_fnmap(write_fnmap(f)) == f);
}
