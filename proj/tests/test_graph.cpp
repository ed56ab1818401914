#include "doctest.h"
#include "xho/graph.hpp"
#include "xho/homology.hpp"

using namespace xho;

namespace {

Graph two_looped_points() { return Graph::loop(2, {{0, 0}, {1, 1}}); }  // K^1 + K^1

}  // namespace

TEST_SUITE("graphs") {

TEST_CASE("modes and loops") {
  Graph r = complete_reflexive(3);
  CHECK(r.has_edge(0, 0));  // implicit loop
  CHECK(r.edges().size() == 3);
  Graph l = complete_unlooped(2);
  CHECK_FALSE(l.has_edge(0, 0));
  CHECK_THROWS_AS(Graph::reflexive(2, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("clique complexes") {
  CHECK(clique_complex(complete_reflexive(3)) == delta(2));
  Complex c4 = clique_complex(cycle_reflexive(4));
  CHECK(c4.dim() == 1);
  CHECK(c4.facets().size() == 4);
  CHECK(isomorphic(clique_complex(path_reflexive(3)), path_complex(3)).is_found());
  CHECK_THROWS_AS(clique_complex(two_looped_points()), std::invalid_argument);
  CHECK(is_flag(clique_complex(cycle_reflexive(5))));
}

TEST_CASE("skeletons") {
  CHECK(skeleton1(delta(2)) == complete_reflexive(3));
  CHECK(skeleton1(point()) == complete_reflexive(1));
}

TEST_CASE("reflexive-loop functor triple") {
  // the unlooped edge has no looped vertices at all
  CHECK(max_reflexive(complete_unlooped(2)).vertex_count() == 0);
  Graph g = cycle_reflexive(5);
  CHECK(max_reflexive(as_loop(g)) == g);
  CHECK(add_loops(as_loop(g)) == g);
  Graph mixed = Graph::loop(2, {{0, 0}, {0, 1}});
  Graph core = max_reflexive(mixed);
  CHECK(core.vertex_count() == 1);
  CHECK(core.label(0) == "0");
  CHECK_THROWS_AS(max_reflexive(g), std::invalid_argument);
}

TEST_CASE("graph products") {
  Graph p = graph_product(path_reflexive(1), path_reflexive(1));
  CHECK(p.vertex_count() == 4);
  // categorical product of reflexive edges is the complete graph
  CHECK(p == complete_reflexive(4));
}

TEST_CASE("loop exponential of the counterexample pair") {
  Graph g = complete_unlooped(2);
  Graph h = two_looped_points();
  GraphExpResult e = exponential_loop(h, g);
  REQUIRE(e.graph.vertex_count() == 4);
  // loops exactly on the two constant functions
  int loops = 0;
  for (int v = 0; v < 4; ++v)
    if (e.graph.looped(v)) {
      ++loops;
      CHECK(e.vertex_maps[v][0] == e.vertex_maps[v][1]);
    }
  CHECK(loops == 2);
  // one unlooped edge between the two swaps
  int off_diag = 0;
  for (auto [u, v] : e.graph.edges())
    if (u != v) {
      ++off_diag;
      CHECK(e.vertex_maps[u][0] != e.vertex_maps[u][1]);
      CHECK(e.vertex_maps[v][0] != e.vertex_maps[v][1]);
    }
  CHECK(off_diag == 1);
}

TEST_CASE("exponential loops enumerate the homomorphisms") {
  Graph g = Graph::loop(3, {{0, 1}, {1, 2}, {0, 0}});
  Graph h = Graph::loop(3, {{0, 1}, {1, 2}, {2, 2}, {0, 2}});
  GraphExpResult e = exponential_loop(h, g);
  std::size_t loops = 0;
  for (int v = 0; v < e.graph.vertex_count(); ++v)
    if (e.graph.looped(v)) ++loops;
  CHECK(loops == enumerate_homs(g, h).size());
}

TEST_CASE("reflexive exponential") {
  Graph k1 = complete_reflexive(1);
  Graph g = cycle_reflexive(4);
  GraphExpResult unit = exponential_reflexive(k1, g);
  CHECK(unit.graph == k1);
  GraphExpResult same = exponential_reflexive(path_reflexive(1), k1);
  CHECK(same.graph == path_reflexive(1));
}

TEST_CASE("hom enumeration oracles") {
  Graph h = Graph::loop(3, {{0, 0}, {0, 1}, {2, 2}});
  auto from_point = enumerate_homs(complete_reflexive(1), max_reflexive(h));
  // homs from the terminal reflexive graph pick out looped vertices
  CHECK(from_point.size() == 2);

  CHECK(enumerate_homs(complete_unlooped(2), complete_unlooped(3)).size() == 6);

  Graph pt_unlooped = Graph::loop(1, {});
  CHECK(enumerate_homs(complete_unlooped(2), pt_unlooped).empty());
}

TEST_CASE("hom complexes") {
  // the derived-hom counterexample: two isolated points
  Complex hom = hom_complex(complete_unlooped(2), two_looped_points());
  CHECK(hom.vertex_count() == 2);
  CHECK(components(hom) == 2);

  // Hom(K^1, H) recovers the clique complex of the looped part
  Graph h = Graph::loop(3, {{0, 0}, {1, 1}, {0, 1}, {1, 2}});
  Graph k1_looped = Graph::loop(1, {{0, 0}});
  CHECK(isomorphic(hom_complex(k1_looped, h),
                   clique_complex(max_reflexive(h))).is_found());

  // Hom(K2_u, K3_u) is the hexagon
  Complex hex = hom_complex(complete_unlooped(2), complete_unlooped(3));
  CHECK(hex.vertex_count() == 6);
  CHECK(components(hex) == 1);
  CHECK(homology(hex).betti == std::vector<int>{1, 1});
}

}  // TEST_SUITE
