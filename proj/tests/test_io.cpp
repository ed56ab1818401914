#include <sstream>

#include "doctest.h"
#include "xho/io.hpp"
#include "xho/subdivision.hpp"
#include "xho/verify.hpp"

using namespace xho;

TEST_SUITE("io") {

TEST_CASE("complex text format") {
  std::istringstream in(
      "# a triangle boundary with one isolated vertex\n"
      "vertices: a b c d\n"
      "a b\n"
      "b c\n"
      "a c\n");
  Complex k = io::parse_complex(in);
  CHECK(k.vertex_count() == 4);
  CHECK(k.facets().size() == 4);  // three edges plus the isolated vertex
  CHECK(k.label(3) == "d");
}

TEST_CASE("facet vertices are auto-declared") {
  std::istringstream in("x y z\n");
  Complex k = io::parse_complex(in);
  CHECK(k.vertex_count() == 3);
  CHECK(k.dim() == 2);
}

TEST_CASE("parse errors carry line numbers") {
  std::istringstream dup("vertices: a a\n");
  CHECK_THROWS_AS(io::parse_complex(dup), ParseError);
  std::istringstream repeated("a a b\n");
  try {
    io::parse_complex(repeated);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
}

TEST_CASE("round trips") {
  for (const Complex& k : verify::complexes_up_to_3_vertices()) {
    std::istringstream in(io::complex_to_string(k));
    Complex back = io::parse_complex(in);
    CHECK(back == k);
  }
  // subdivision labels survive a round trip
  Complex s = sd(delta(2)).complex.base;
  std::istringstream in(io::complex_to_string(s));
  Complex back = io::parse_complex(in);
  CHECK(back == s);
  CHECK(back.labels() == s.labels());
}

TEST_CASE("graph text format") {
  std::istringstream in(
      "mode: loop\n"
      "vertices: u v w\n"
      "u u\n"
      "u v\n");
  Graph g = io::parse_graph(in);
  CHECK(g.mode() == GraphMode::Loop);
  CHECK(g.looped(0));
  CHECK_FALSE(g.looped(1));

  std::istringstream bad(
      "mode: reflexive\n"
      "u u\n");
  CHECK_THROWS_AS(io::parse_graph(bad), ParseError);
  std::istringstream missing("u v\n");
  CHECK_THROWS_AS(io::parse_graph(missing), ParseError);

  for (const Graph& h : verify::loop_graphs_up_to_3_vertices()) {
    std::istringstream round(io::graph_to_string(h));
    CHECK(io::parse_graph(round) == h);
  }
}

TEST_CASE("map files") {
  Complex d1 = delta(1);
  Complex b2 = boundary(2);
  std::istringstream in("0 -> 1\n1 -> 2\n");
  VertexMap f = io::parse_vertex_map(in, d1, b2);
  CHECK(f.assignment() == std::vector<int>{1, 2});

  std::istringstream missing("0 -> 1\n");
  CHECK_THROWS_AS(io::parse_vertex_map(missing, d1, b2), ParseError);
  std::istringstream unknown("0 -> q\n1 -> 2\n");
  CHECK_THROWS_AS(io::parse_vertex_map(unknown, d1, b2), ParseError);

  std::ostringstream out;
  io::write_vertex_map(out, f);
  CHECK(out.str() == "0 -> 1\n1 -> 2\n");
}

TEST_CASE("json emission") {
  auto j = io::homology_json(homology(boundary(3)));
  CHECK(j["schema"] == 1);
  CHECK(j["betti"] == nlohmann::json::array({1, 0, 1}));

  auto cj = io::complex_json(delta(1));
  CHECK(cj["vertices"].size() == 2);
  CHECK(cj["facets"].size() == 1);

  auto gj = io::graph_json(complete_unlooped(2));
  CHECK(gj["mode"] == "loop");
  CHECK(gj["edges"].size() == 1);
}

}  // TEST_SUITE
