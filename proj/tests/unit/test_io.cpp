#include <string>

#include "doctest.h"
#include "tropic/io.hpp"

using namespace tropic;

namespace {

bool mentions(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string parse_error_of(const std::string& text) {
  try {
    parse_polytope_file(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("format_double prints 12 significant digits") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(1e-9) == "1e-09");
  CHECK(format_double(1.0 / 3.0) == "0.333333333333");
  CHECK(format_double(-2.25) == "-2.25");
}

TEST_CASE("parse accepts minimal documents and fills defaults") {
  const PolytopeFile f = parse_polytope_file(R"({"dim":2,"generators":[[0,0],[1,1]]})");
  CHECK(f.version == 1);
  CHECK(f.kind == "tropical");
  CHECK(f.dim == 2);
  REQUIRE(f.generators.size() == 2);
  CHECK(f.generators[1][0] == 1.0);
}

TEST_CASE("serialize is canonical: sorted generators, fixed key order") {
  PolytopeFile f;
  f.dim = 2;
  f.generators = {{1, 1}, {0, 0}, {0.5, -1}};
  CHECK(serialize_polytope_file(f) ==
        "{\"version\":1,\"kind\":\"tropical\",\"dim\":2,"
        "\"generators\":[[0,0],[0.5,-1],[1,1]]}\n");
}

TEST_CASE("parse ∘ serialize is the identity on canonical documents") {
  const std::string canonical =
      "{\"version\":1,\"kind\":\"tropical\",\"dim\":2,\"generators\":[[0,0],[1,1]]}\n";
  const PolytopeFile f = parse_polytope_file(canonical);
  CHECK(serialize_polytope_file(f) == canonical);
  const PolytopeFile again = parse_polytope_file(serialize_polytope_file(f));
  CHECK(again.generators == f.generators);
  CHECK(again.kind == f.kind);
  CHECK(again.dim == f.dim);
}

TEST_CASE("parse errors name the offending field") {
  CHECK(mentions(parse_error_of("not json"), "invalid JSON"));
  CHECK(mentions(parse_error_of("[1,2]"), "object"));
  CHECK(mentions(parse_error_of(R"({"generators":[[0]]})"), "dim"));
  CHECK(mentions(parse_error_of(R"({"dim":1})"), "generators"));
  CHECK(mentions(parse_error_of(R"({"dim":0,"generators":[[0]]})"), "dim"));
  CHECK(mentions(parse_error_of(R"({"dim":1,"generators":[]})"), "generators"));
  CHECK(mentions(parse_error_of(R"({"dim":2,"generators":[[0]]})"), "generators[0]"));
  CHECK(mentions(parse_error_of(R"({"dim":1,"generators":[["x"]]})"), "generators[0][0]"));
  CHECK(mentions(parse_error_of(R"({"version":2,"dim":1,"generators":[[0]]})"), "version"));
  CHECK(mentions(parse_error_of(R"({"kind":"affine","dim":1,"generators":[[0]]})"), "kind"));
}

TEST_CASE("kind conversions enforce the document kind") {
  PolytopeFile f;
  f.dim = 1;
  f.generators = {{1.0}};
  CHECK_NOTHROW(to_tropical(f));
  CHECK_THROWS_AS(to_bconvex(f), std::invalid_argument);
  f.kind = "bconvex";
  CHECK_NOTHROW(to_bconvex(f));
  CHECK_THROWS_AS(to_tropical(f), std::invalid_argument);

  const TropicalPolytope P({{0, 1}});
  const PolytopeFile round = from_tropical(P);
  CHECK(round.kind == "tropical");
  CHECK(round.dim == 2);
  CHECK(to_tropical(round).generators()[0] == Point{0, 1});
}

TEST_CASE("reports serialize deterministically") {
  VerificationReport rep;
  rep.trials = 500;
  rep.violations = 0;
  rep.worst_margin = -0.125;
  rep.seed = 42;
  CHECK(serialize_report(rep) ==
        "{\"trials\":500,\"violations\":0,\"worst_margin\":-0.125,\"seed\":42}\n");
}
